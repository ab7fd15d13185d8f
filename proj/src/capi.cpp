#include "torlink/torlink.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "core/error.hpp"
#include "core/experiments.hpp"

using namespace torlink;

struct torlink_link {
  LinkData data;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return 0;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return 1;
  } catch (const ValidationError& e) {
    g_last_error = e.what();
    return 2;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 3;
  }
}

const LaurentPoly2& pick_poly(const LinkData& d, const char* which) {
  std::string w = which ? which : "";
  if (w == "D-shaded") return d.D_shaded;
  if (w == "D-white") return d.D_white;
  if (w == "p") return d.p;
  throw ParseError("unknown polynomial selector: " + w);
}

MahlerResult run_mahler(const LaurentPoly2& p, const char* method, double tol,
                        int grid_n) {
  std::string m = method ? method : "jensen";
  if (m == "jensen") return mahler_2var(p, tol > 0 ? tol : 1e-6);
  if (m == "grid") return mahler_2var_grid(p, grid_n > 0 ? grid_n : 1024);
  throw ParseError("unknown mahler method: " + m);
}

void emit_mahler(const MahlerResult& r, double* value, double* error_estimate,
                 long* samples, char** out_method) {
  if (value) *value = r.value;
  if (error_estimate) *error_estimate = r.error_estimate;
  if (samples) *samples = r.samples;
  if (out_method) *out_method = dup_string(r.method);
}

}  // namespace

extern "C" {

const char* torlink_last_error(void) { return g_last_error.c_str(); }

void torlink_string_free(char* s) { std::free(s); }

int torlink_link_builtin(const char* name, int shaded_class,
                         torlink_link** out) {
  return guarded([&] {
    if (!name || !out) throw ParseError("null argument");
    *out = new torlink_link{make_link_builtin(name, shaded_class)};
  });
}

int torlink_link_load(const char* path, int shaded_class, torlink_link** out) {
  return guarded([&] {
    if (!path || !out) throw ParseError("null argument");
    std::ifstream in(path);
    if (!in) throw ParseError(std::string("cannot open map file: ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    MapDocument doc = load_map(buf.str());
    *out = new torlink_link{make_link_from_document(
        doc, std::string("file:") + path, shaded_class)};
  });
}

void torlink_link_free(torlink_link* link) { delete link; }

int torlink_link_info(const torlink_link* link, int* vertices, int* edges,
                      int* faces, int* shaded_class) {
  return guarded([&] {
    if (!link) throw ParseError("null link");
    if (vertices) *vertices = link->data.map.n_vertices();
    if (edges) *edges = link->data.map.n_edges();
    if (faces) *faces = link->data.map.n_faces();
    if (shaded_class) *shaded_class = link->data.shaded_cls;
  });
}

int torlink_link_export_map(const torlink_link* link, char** out_text) {
  return guarded([&] {
    if (!link || !out_text) throw ParseError("null argument");
    std::vector<int> shaded;
    for (int f = 0; f < link->data.map.n_faces(); ++f)
      if (link->data.face_class[f] == link->data.shaded_cls)
        shaded.push_back(f);
    *out_text = dup_string(export_map(link->data.map, shaded));
  });
}

int torlink_link_charpoly(const torlink_link* link, const char* which,
                          char** out_text) {
  return guarded([&] {
    if (!link || !out_text) throw ParseError("null argument");
    const LaurentPoly2& p = pick_poly(link->data, which);
    bool dimer = std::string(which) == "p";
    *out_text =
        dup_string(dimer ? p.str("z", "w") : p.str("x", "y"));
  });
}

int torlink_link_mahler(const torlink_link* link, const char* which,
                        const char* method, double tol, int grid_n,
                        double* value, double* error_estimate, long* samples,
                        char** out_method) {
  return guarded([&] {
    if (!link) throw ParseError("null link");
    emit_mahler(run_mahler(pick_poly(link->data, which), method, tol, grid_n),
                value, error_estimate, samples, out_method);
  });
}

int torlink_mahler_text(const char* poly_text, const char* method, double tol,
                        int grid_n, double* value, double* error_estimate,
                        long* samples, char** out_method) {
  return guarded([&] {
    if (!poly_text) throw ParseError("null polynomial");
    std::string text = poly_text;
    LaurentPoly2 p = text.find('z') != std::string::npos
                         ? LaurentPoly2::parse(text, "z", "w")
                         : LaurentPoly2::parse(text);
    emit_mahler(run_mahler(p, method, tol, grid_n), value, error_estimate,
                samples, out_method);
  });
}

int torlink_lobachevsky(double theta, double* out) {
  return guarded([&] {
    if (!out) throw ParseError("null output");
    *out = lobachevsky(theta);
  });
}

int torlink_volume_constants(double* v_tet, double* v_oct) {
  return guarded([&] {
    auto vc = volume_constants();
    if (v_tet) *v_tet = vc.v_tet;
    if (v_oct) *v_oct = vc.v_oct;
  });
}

int torlink_link_volume(const torlink_link* link, double* out) {
  return guarded([&] {
    if (!link || !out) throw ParseError("null argument");
    *out = link_volume(census(link->data.map));
  });
}

int torlink_ratio_limit(const torlink_link* link, double tol, double* out) {
  return guarded([&] {
    if (!link || !out) throw ParseError("null argument");
    *out = ratio_limit(link->data, tol > 0 ? tol : 1e-6);
  });
}

int torlink_tree_count(const torlink_link* link, int n, const char* cut,
                       const char* route, char** out_decimal) {
  return guarded([&] {
    if (!link || !out_decimal) throw ParseError("null argument");
    std::string c = cut ? cut : "torus";
    std::string r = route ? route : "auto";
    const TorusGraph& g = link->data.tait;
    mpz_class tau;
    if (r == "fourier") {
      if (c != "torus")
        throw ParseError("fourier route requires the torus quotient");
      tau = fourier_tree_count(g, n);
    } else {
      FiniteGraph h;
      if (c == "torus")
        h = torus_quotient(g, n);
      else if (c == "planar")
        h = planar_cut(g, n);
      else
        throw ParseError("unknown cut: " + c);
      if (r == "auto")
        tau = tree_count(h);
      else if (r == "bareiss")
        tau = tree_count_bareiss(h);
      else if (r == "modular")
        tau = tree_count_modular(h);
      else if (r == "brute")
        tau = brute_force_tree_count(h);
      else
        throw ParseError("unknown route: " + r);
    }
    *out_decimal = dup_string(tau.get_str());
  });
}

int torlink_torsion(const torlink_link* link, int n, char** out_order,
                    char** out_divisors) {
  return guarded([&] {
    if (!link) throw ParseError("null link");
    FiniteGraph h = torus_quotient(link->data.tait, n);
    auto snf = smith_normal_form(laplacian_matrix(h));
    if (out_order) *out_order = dup_string(snf.nonzero_product().get_str());
    if (out_divisors) {
      std::ostringstream os;
      for (std::size_t i = 0; i < snf.divisors.size(); ++i)
        os << (i ? " " : "") << snf.divisors[i].get_str();
      os << " | zeros: " << snf.zeros;
      *out_divisors = dup_string(os.str());
    }
  });
}

int torlink_entropy(const char* lattice, const char* route, int n,
                    double* out) {
  return guarded([&] {
    if (!lattice || !out) throw ParseError("null argument");
    std::string r = route ? route : "mahler";
    EntropyRoute er;
    if (r == "mahler")
      er = EntropyRoute::kMahler;
    else if (r == "torus-fourier")
      er = EntropyRoute::kTorusFourier;
    else if (r == "planar-cut")
      er = EntropyRoute::kPlanarCut;
    else
      throw ParseError("unknown entropy route: " + r);
    *out = tree_entropy(lattice_from_name(lattice), er, n);
  });
}

int torlink_growth_series(const torlink_link* link, const int* ns, int count,
                          const char* normalizer, const char* format,
                          char** out_text) {
  return guarded([&] {
    if (!link || !ns || count <= 0 || !out_text)
      throw ParseError("bad arguments");
    std::string nm = normalizer ? normalizer : "n2";
    Normalizer norm;
    if (nm == "n2")
      norm = Normalizer::kNSquared;
    else if (nm == "volume")
      norm = Normalizer::kVolume;
    else
      throw ParseError("unknown normalizer: " + nm);
    auto series = torsion_growth_series(
        link->data, std::vector<int>(ns, ns + count), norm);
    std::string fmt = format ? format : "csv";
    if (fmt == "csv")
      *out_text = dup_string(series_csv(series));
    else if (fmt == "json")
      *out_text = dup_string(series_json(series));
    else
      throw ParseError("unknown format: " + fmt);
  });
}

int torlink_verify(const char* scope, const char* format,
                   const char* config_json, char** out_report, int* n_failed) {
  return guarded([&] {
    if (!scope || !out_report) throw ParseError("null argument");
    VerifyConfig cfg;
    if (config_json) cfg = VerifyConfig::from_json(config_json);
    Report rep = verify_report(scope, cfg);
    std::string fmt = format ? format : "csv";
    if (fmt == "csv")
      *out_report = dup_string(report_csv(rep));
    else if (fmt == "json")
      *out_report = dup_string(report_json(rep));
    else
      throw ParseError("unknown format: " + fmt);
    if (n_failed) {
      int fails = 0;
      for (const auto& row : rep.rows) fails += !row.pass;
      *n_failed = fails;
    }
  });
}

}  // extern "C"
