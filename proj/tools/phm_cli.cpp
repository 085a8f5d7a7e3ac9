#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "phm/catalog.hpp"
#include "phm/classes.hpp"
#include "phm/convolution.hpp"
#include "phm/core.hpp"
#include "phm/geometry.hpp"
#include "phm/mapspec.hpp"
#include "phm/radii.hpp"
#include "phm/render.hpp"

namespace {

// Exit codes: 0 pass, 1 verification fail, 2 usage/parse, 3 class violation,
// 4 I/O.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitClass = 3;
constexpr int kExitIo = 4;

std::string fmt7(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.7g", x);
  return buf;
}

std::string fmt12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct MapArgs {
  std::string map_path;
  std::string builtin;
  double C = 1.0;
  int J = 0;  // 0 = command default
};

void add_map_options(CLI::App* cmd, MapArgs& args) {
  auto* m = cmd->add_option("--map", args.map_path, "path to a map spec JSON document");
  auto* b = cmd->add_option("--builtin", args.builtin, "builtin map name (IDENTITY, EXAMPLE1, F0..F3, ...)");
  m->excludes(b);
  cmd->add_option("--C", args.C, "C parameter for F2/F3");
  cmd->add_option("--J", args.J, "truncation order for builtin maps");
}

phm::PolyharmonicMap resolve_map(const MapArgs& args, int default_J) {
  const int J = args.J > 0 ? args.J : default_J;
  if (!args.builtin.empty()) return phm::make(phm::builtin_from_string(args.builtin), J, args.C);
  if (!args.map_path.empty()) return phm::load_map_spec(args.map_path, J);
  throw CLI::ValidationError("one of --map or --builtin is required");
}

int cmd_classify(const MapArgs& margs) {
  const phm::PolyharmonicMap f = resolve_map(margs, 64);
  f.require_normalized();
  const auto hs = phm::hs_membership(f);
  const auto hc = phm::hc_membership(f);
  std::cout << "HS margin " << fmt7(hs.margin) << (hs.member() ? " (member)" : " (not a member)")
            << "\n";
  std::cout << "HC margin " << fmt7(hc.margin) << (hc.member() ? " (member)" : " (not a member)")
            << "\n";
  const auto alpha = phm::max_starlike_order(f);
  const auto beta = phm::max_convex_order(f);
  std::cout << "max starlike order " << (alpha ? fmt7(*alpha) : std::string("none")) << "\n";
  std::cout << "max convex order " << (beta ? fmt7(*beta) : std::string("none")) << "\n";
  return 0;
}

struct RadiusArgs {
  std::string family;
  double order = 0.0;
  int p = 1;
  double C = 1.0;
  std::vector<double> orders;
};

int cmd_radius(const RadiusArgs& args) {
  const phm::RadiusFamily family = phm::radius_family_from_string(args.family);
  if (!args.orders.empty()) {
    std::cout << "order,radius\n";
    for (const auto& row : phm::radius_vs_order_table(family, args.p, args.C, args.orders))
      std::cout << fmt7(row.order) << "," << fmt12(row.root.r) << "\n";
    return 0;
  }
  const phm::RadiusProblem prob{family, args.order, args.p, args.C};
  const phm::RootResult root = phm::smallest_root(phm::build_radius_polynomial(prob));
  std::cout << "radius " << fmt12(root.r) << " bracket [" << fmt12(root.bracket_lo) << ", "
            << fmt12(root.bracket_hi) << "]\n";
  return 0;
}

struct VerifyArgs {
  std::string mode;
  std::string method = "geometric";
  double order = 0.0;
  double r = 0.0;
  int n_r = 64;
  int n_theta = 512;
  double tolerance = 1e-9;
};

int cmd_verify(const MapArgs& margs, const VerifyArgs& args) {
  const phm::PolyharmonicMap f = resolve_map(margs, 64);
  if (!(args.r > 0.0 && args.r < 1.0)) throw CLI::ValidationError("--r must be in (0,1)");
  const phm::PolarGrid grid = phm::PolarGrid::geometric(args.n_r, args.n_theta, args.r);
  double min_value = 0.0, wr = 0.0, wth = 0.0;
  bool passed = false;
  if (args.method == "geometric") {
    const phm::VerificationReport rep =
        args.mode == "starlike" ? phm::verify_starlike(f, args.r, args.order, grid, args.tolerance)
                                : phm::verify_convex(f, args.r, args.order, grid, args.tolerance);
    min_value = rep.min_value;
    wr = rep.witness_r;
    wth = rep.witness_theta;
    passed = rep.passed;
  } else {
    const phm::ScanReport rep =
        args.mode == "starlike"
            ? phm::convolution_scan_starlike(f, args.order, grid, 64, args.tolerance)
            : phm::convolution_scan_convex(f, args.order, grid, 64, args.tolerance);
    min_value = rep.min_value;
    wr = rep.witness_r;
    wth = rep.witness_theta;
    passed = rep.passed;
    std::cout << "min scan modulus " << fmt7(rep.min_modulus) << "\n";
  }
  std::cout << "min margin " << fmt7(min_value) << " at r=" << fmt7(wr) << " theta=" << fmt7(wth)
            << "\n";
  std::cout << (passed ? "PASS" : "FAIL") << "\n";
  return passed ? 0 : kExitFail;
}

struct RenderArgs {
  double r = 0.0;
  int n = 512;
  std::string out_path;
  std::string format = "csv";
};

int cmd_render(const MapArgs& margs, const RenderArgs& args) {
  const phm::PolyharmonicMap f = resolve_map(margs, 256);
  if (!(args.r > 0.0 && args.r < 1.0)) throw CLI::ValidationError("--r must be in (0,1)");
  if (args.n < 16) throw CLI::ValidationError("--n must be >= 16");
  const std::vector<phm::Complex> curve = phm::boundary_curve(f, args.r, args.n);
  std::string payload;
  if (args.format == "csv") {
    payload = phm::curve_to_csv(curve);
  } else {
    bool hc = false;
    if (f.is_normalized()) hc = phm::hc_membership(f).member();
    payload = phm::curve_to_svg(curve, hc);
  }
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output path: " << args.out_path << "\n";
    return kExitIo;
  }
  out << payload;
  if (!out) {
    std::cerr << "write failed: " << args.out_path << "\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyharmonic mapping toolkit: classification, radii, verification, rendering"};
  app.require_subcommand(1);

  MapArgs classify_map, verify_map, render_map;
  RadiusArgs radius_args;
  VerifyArgs verify_args;
  RenderArgs render_args;
  std::string grid_spec;

  auto* classify = app.add_subcommand("classify", "coefficient-class membership and max orders");
  add_map_options(classify, classify_map);

  auto* radius = app.add_subcommand("radius", "smallest positive root of a radius equation");
  radius->add_option("--family", radius_args.family,
                     "starlike-koebe | convex-koebe | starlike-bounded | convex-bounded")
      ->required();
  radius->add_option("--order", radius_args.order, "alpha or beta in [0,1)");
  radius->add_option("--p", radius_args.p, "number of harmonic layers");
  radius->add_option("--C", radius_args.C, "uniform coefficient bound");
  radius->add_option("--orders", radius_args.orders, "table mode: list of orders")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "grid verification of starlikeness/convexity");
  add_map_options(verify, verify_map);
  verify->add_option("--mode", verify_args.mode, "starlike | convex")
      ->required()
      ->check(CLI::IsMember({"starlike", "convex"}));
  verify->add_option("--method", verify_args.method, "geometric | convolution")
      ->check(CLI::IsMember({"geometric", "convolution"}));
  verify->add_option("--order", verify_args.order, "alpha or beta in [0,1)");
  verify->add_option("--r", verify_args.r, "outer radius of the verification grid")->required();
  verify->add_option("--grid", grid_spec, "grid dimensions NRxNTHETA (default 64x512)");
  verify->add_option("--tol", verify_args.tolerance, "margin tolerance");

  auto* render = app.add_subcommand("render", "boundary curve output (csv or svg)");
  add_map_options(render, render_map);
  render->add_option("--r", render_args.r, "circle radius")->required();
  render->add_option("--n", render_args.n, "number of curve points");
  render->add_option("--out", render_args.out_path, "output file path")->required();
  render->add_option("--format", render_args.format, "csv | svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!grid_spec.empty()) {
      const size_t x = grid_spec.find('x');
      if (x == std::string::npos) throw CLI::ValidationError("--grid must look like 64x512");
      verify_args.n_r = std::stoi(grid_spec.substr(0, x));
      verify_args.n_theta = std::stoi(grid_spec.substr(x + 1));
    }
    if (classify->parsed()) return cmd_classify(classify_map);
    if (radius->parsed()) return cmd_radius(radius_args);
    if (verify->parsed()) return cmd_verify(verify_map, verify_args);
    if (render->parsed()) return cmd_render(render_map, render_args);
  } catch (const phm::NormalizationError& e) {
    std::cerr << "class violation: " << e.what() << "\n";
    return kExitClass;
  } catch (const phm::MapSpecError& e) {
    std::cerr << "map spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
