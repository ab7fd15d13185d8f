// Command-line front end; talks to the library exclusively through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torlink/torlink.h"

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { torlink_string_free(s); }
};

[[noreturn]] void die(int code) {
  std::cerr << "error: " << torlink_last_error() << "\n";
  std::exit(code);
}

using LinkPtr = std::unique_ptr<torlink_link, decltype(&torlink_link_free)>;

LinkPtr open_link(const std::string& spec, const std::string& shaded) {
  int cls = -1;
  if (shaded == "0")
    cls = 0;
  else if (shaded == "1")
    cls = 1;
  else if (shaded != "default") {
    std::cerr << "error: --shaded-class must be default, 0 or 1\n";
    std::exit(2);
  }
  torlink_link* raw = nullptr;
  bool is_file = spec.find('.') != std::string::npos ||
                 spec.find('/') != std::string::npos;
  int rc = is_file ? torlink_link_load(spec.c_str(), cls, &raw)
                   : torlink_link_builtin(spec.c_str(), cls, &raw);
  if (rc) die(rc);
  return LinkPtr(raw, &torlink_link_free);
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biperiodic alternating links on the torus: characteristic "
               "polynomials, Mahler measures, exact torsion/spanning-tree "
               "counts, and torsion-growth-to-volume verification"};
  app.require_subcommand(1);

  std::string link_spec = "square-weave";
  std::string shaded = "default";
  std::string format = "csv";
  double tol = 1e-6;
  int n = 1;

  auto add_link_opts = [&](CLI::App* cmd) {
    cmd->add_option("--link", link_spec,
                    "builtin name (square-weave, triaxial, "
                    "rhombitrihexagonal) or map file path");
    cmd->add_option("--shaded-class", shaded, "default|0|1");
  };

  // mahler
  auto* mahler = app.add_subcommand("mahler", "logarithmic Mahler measure");
  add_link_opts(mahler);
  std::string poly_sel = "p", method = "jensen", poly_text;
  int grid_n = 1024;
  mahler->add_option("--poly", poly_sel, "D-shaded|D-white|p (default p)");
  mahler->add_option("--poly-text", poly_text,
                     "explicit polynomial instead of --link");
  mahler->add_option("--method", method, "jensen|grid");
  mahler->add_option("--grid-n", grid_n, "grid size for --method grid");
  mahler->add_option("--tol", tol, "jensen tolerance");

  // charpoly
  auto* charpoly =
      app.add_subcommand("charpoly", "Laplacian and dimer polynomials");
  add_link_opts(charpoly);

  // trees
  auto* trees = app.add_subcommand("trees", "exact spanning tree count");
  add_link_opts(trees);
  std::string cut = "torus", route = "auto";
  trees->add_option("--n", n, "quotient/cut size");
  trees->add_option("--cut", cut, "torus|planar");
  trees->add_option("--route", route, "auto|bareiss|modular|brute|fourier");

  // torsion
  auto* torsion =
      app.add_subcommand("torsion", "torsion order and elementary divisors");
  add_link_opts(torsion);
  torsion->add_option("--n", n, "quotient size");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "spanning tree entropy");
  std::string lattice = "square", eroute = "mahler";
  int en = 0;
  entropy->add_option("--lattice", lattice, "triangular|square|hexagonal");
  entropy->add_option("--route", eroute, "mahler|torus-fourier|planar-cut");
  entropy->add_option("--n", en, "size for the finite routes");

  // growth series (part of torsion? separate for clarity)
  auto* growth =
      app.add_subcommand("growth", "torsion growth series over quotients");
  add_link_opts(growth);
  std::string n_list = "1,2,4,8,16,32,64", normalizer = "n2";
  growth->add_option("--n-list", n_list, "comma-separated, increasing");
  growth->add_option("--normalizer", normalizer, "n2|volume");
  growth->add_option("--format", format, "csv|json");

  // verify
  auto* verify = app.add_subcommand("verify", "verification report");
  std::string scope = "all", config_path;
  verify->add_option("--scope", scope,
                     "theorem2|corollary|semiregular|conjecture-sanity|all");
  verify->add_option("--format", format, "csv|json");
  verify->add_option("--config", config_path, "JSON tolerance overrides");

  // export-map
  auto* exportmap = app.add_subcommand("export-map", "write the map file");
  add_link_opts(exportmap);
  std::string out_path;
  exportmap->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (mahler->parsed()) {
    double value, err;
    long samples;
    StringOut mtag;
    int rc;
    if (!poly_text.empty()) {
      rc = torlink_mahler_text(poly_text.c_str(), method.c_str(), tol, grid_n,
                               &value, &err, &samples, &mtag.s);
    } else {
      auto link = open_link(link_spec, shaded);
      rc = torlink_link_mahler(link.get(), poly_sel.c_str(), method.c_str(),
                               tol, grid_n, &value, &err, &samples, &mtag.s);
    }
    if (rc) die(rc);
    std::printf("value %.12f\nerror-estimate %.3e\nmethod %s\nsamples %ld\n",
                value, err, mtag.s, samples);
  } else if (charpoly->parsed()) {
    auto link = open_link(link_spec, shaded);
    for (const char* which : {"D-shaded", "D-white", "p"}) {
      StringOut text;
      if (int rc = torlink_link_charpoly(link.get(), which, &text.s)) die(rc);
      std::printf("%s = %s\n", which, text.s);
    }
  } else if (trees->parsed()) {
    auto link = open_link(link_spec, shaded);
    StringOut tau;
    if (int rc = torlink_tree_count(link.get(), n, cut.c_str(), route.c_str(),
                                    &tau.s))
      die(rc);
    std::printf("%s\n", tau.s);
  } else if (torsion->parsed()) {
    auto link = open_link(link_spec, shaded);
    StringOut order, divisors;
    if (int rc = torlink_torsion(link.get(), n, &order.s, &divisors.s)) die(rc);
    std::printf("order %s\ndivisors %s\n", order.s, divisors.s);
  } else if (entropy->parsed()) {
    double value;
    if (int rc = torlink_entropy(lattice.c_str(), eroute.c_str(), en, &value))
      die(rc);
    std::printf("%.12f\n", value);
  } else if (growth->parsed()) {
    auto link = open_link(link_spec, shaded);
    auto ns = parse_n_list(n_list);
    StringOut text;
    if (int rc = torlink_growth_series(link.get(), ns.data(),
                                       static_cast<int>(ns.size()),
                                       normalizer == "n^2" ? "n2" : normalizer.c_str(),
                                       format.c_str(), &text.s))
      die(rc);
    std::fputs(text.s, stdout);
  } else if (verify->parsed()) {
    std::string config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot open config " << config_path << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      config = buf.str();
    }
    StringOut report;
    int failed = 0;
    if (int rc = torlink_verify(scope.c_str(), format.c_str(),
                                config.empty() ? nullptr : config.c_str(),
                                &report.s, &failed))
      die(rc);
    std::fputs(report.s, stdout);
    return failed ? 1 : 0;
  } else if (exportmap->parsed()) {
    auto link = open_link(link_spec, shaded);
    StringOut text;
    if (int rc = torlink_link_export_map(link.get(), &text.s)) die(rc);
    if (out_path.empty()) {
      std::fputs(text.s, stdout);
    } else {
      std::ofstream out(out_path);
      out << text.s;
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
    }
  }
  return 0;
}
