#ifndef TORLINK_EXPERIMENTS_HPP
#define TORLINK_EXPERIMENTS_HPP

#include <map>
#include <string>
#include <vector>

#include "core/charpoly.hpp"
#include "core/exact_count.hpp"
#include "core/mahler.hpp"
#include "core/torus_graph.hpp"
#include "core/torus_map.hpp"

namespace torlink {

// Face census of the projection tiling in one fundamental domain.
struct TilingCensus {
  int hexagons = 0;
  int squares = 0;
  int triangles = 0;  // informational
};

TilingCensus census(const TorusMap& m);

// vol(T^2 x I - L_1) = 10 H v_tet + S v_oct for bigon-free semi-regular
// links.  The double cover X(L_n) has volume 2 n^2 times this.
double link_volume(const TilingCensus& c);

// Everything derived from one link diagram, built once and shared.
struct LinkData {
  std::string name;  // builtin name or "file:<path>"
  TorusMap map;
  std::vector<int> face_class;
  int shaded_cls = 0;
  TorusGraph tait;     // shaded class
  TorusGraph dual;     // white class
  OverlaidGraph overlaid;
  LaurentPoly2 D_shaded;
  LaurentPoly2 D_white;
  LaurentPoly2 p;      // dimer characteristic polynomial
};

// shaded_override: -1 = builtin/default convention, 0/1 = explicit class.
LinkData make_link_builtin(const std::string& name, int shaded_override = -1);
LinkData make_link_from_document(const MapDocument& doc, const std::string& name,
                                 int shaded_override = -1);

// m(p) / (2 vol(T^2 x I - L_1)): the limiting torsion-to-volume ratio.
double ratio_limit(const LinkData& link, double tol = 1e-6);

struct GrowthRow {
  int n = 0;
  mpz_class tau;       // torsion order |TH_1(X(L_n))| = tau of the quotient
  double log_tau = 0;
  double normalizer = 0;
  double ratio = 0;
};

struct GrowthSeries {
  std::string link;
  std::string method;
  std::string normalizer;  // "n^2" | "volume"
  std::vector<GrowthRow> rows;
};

enum class Normalizer { kNSquared, kVolume };

GrowthSeries torsion_growth_series(const LinkData& link,
                                   const std::vector<int>& ns, Normalizer norm);

enum class Lattice { kTriangular, kSquare, kHexagonal };
enum class EntropyRoute { kMahler, kTorusFourier, kPlanarCut };

Lattice lattice_from_name(const std::string& name);
TorusGraph lattice_graph(Lattice l);

// Per-vertex spanning tree entropy by the chosen route.  `n` is the cut or
// quotient size for the finite routes (<= 0 picks the route default: 64 for
// torus-fourier, 16 for planar-cut).
double tree_entropy(Lattice l, EntropyRoute route, int n = 0);

struct CheckRow {
  std::string id;
  double computed = 0;
  double target = 0;
  double tolerance = 0;
  bool pass = false;
  long runtime_ms = 0;
  std::string method;
};

struct Report {
  std::vector<CheckRow> rows;
  bool all_pass() const;
};

struct VerifyConfig {
  // Per-row tolerance overrides; defaults are the acceptance values.
  std::map<std::string, double> tolerances;
  double mahler_tol = 1e-6;
  int growth_max_n = 64;

  double tol(const std::string& id, double dflt) const;
  static VerifyConfig from_json(const std::string& text);
};

// scope: "theorem2" | "corollary" | "semiregular" | "conjecture-sanity" | "all"
Report verify_report(const std::string& scope, const VerifyConfig& cfg = {});

std::string report_csv(const Report& r);
std::string report_json(const Report& r);
std::string series_csv(const GrowthSeries& s);
std::string series_json(const GrowthSeries& s);

}  // namespace torlink

#endif
