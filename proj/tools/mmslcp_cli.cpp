// Command-line front end: price, bench and validate.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mmslcp/bench.hpp"
#include "mmslcp/config.hpp"
#include "mmslcp/csv_output.hpp"
#include "mmslcp/pricer.hpp"
#include "mmslcp/validation.hpp"

namespace fs = std::filesystem;
using namespace mmslcp;

namespace {

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  bool no_timing = false;
};

RunConfig resolve_config(const CommonFlags& flags) {
  RunConfig cfg;
  if (!flags.config_path.empty()) cfg = load_config(flags.config_path, cfg);
  for (const auto& o : flags.overrides) apply_override(cfg, o);
  if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
  return cfg;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

int cmd_price(const CommonFlags& flags, const std::string& method, int mesh) {
  RunConfig cfg = resolve_config(flags);
  if (!method.empty()) cfg.method = parse_method(method);
  if (mesh >= 0) cfg.dx_exp = cfg.dtau_exp = mesh;
  cfg.validate();

  const Grid<double> grid = cfg.grid();
  PricingResult result;
  try {
    result = price_american(cfg.market, grid, cfg.pricer_options());
  } catch (const NonConverged& e) {
    std::cerr << "error: " << e.what() << " after "
              << e.partial().summary.per_step.back().iterations << " iterations\n";
    return 3;
  }

  fs::create_directories(cfg.out_dir);
  const auto header = cfg.entries();
  {
    auto out = open_output(fs::path(cfg.out_dir) / "surface.csv");
    write_surface_csv(out, result.surface, header);
  }
  {
    auto out = open_output(fs::path(cfg.out_dir) / "summary.csv");
    write_summary_csv(out, result.summary, header, !flags.no_timing);
  }
  std::cout << method_name(cfg.method) << ": " << grid.m << " time steps, "
            << result.summary.total_iterations << " total iterations, "
            << result.summary.average_iterations << " average";
  if (!flags.no_timing)
    std::cout << ", " << result.summary.total_wall_time << " s in LCP solves";
  std::cout << "\nwrote " << (fs::path(cfg.out_dir) / "surface.csv").string() << " and "
            << (fs::path(cfg.out_dir) / "summary.csv").string() << '\n';
  return 0;
}

int cmd_bench(const CommonFlags& flags, const std::vector<std::string>& methods,
              std::vector<int> meshes, bool serial) {
  RunConfig cfg = resolve_config(flags);
  cfg.validate();
  std::vector<Method> selected;
  for (const auto& m : methods) selected.push_back(parse_method(m));
  if (selected.empty()) selected.assign(kAllMethods.begin(), kAllMethods.end());
  if (meshes.empty()) meshes = {4, 5, 6};
  for (int e : meshes) {
    RunConfig probe = cfg;
    probe.dx_exp = probe.dtau_exp = e;
    probe.validate();
  }

  const auto cells = run_bench(cfg, meshes, selected, serial);
  fs::create_directories(cfg.out_dir);
  {
    auto out = open_output(fs::path(cfg.out_dir) / "bench.csv");
    write_bench_csv(out, cells, cfg, !flags.no_timing);
  }
  write_bench_table(std::cout, cells, !flags.no_timing);
  bool all_ok = true;
  for (const auto& c : cells) all_ok = all_ok && c.converged;
  return all_ok ? 0 : 3;
}

int cmd_validate(const ValidationOptions& options) {
  const ValidationReport report = run_validation(options);
  write_validation_report(std::cout, options, report);
  return report.passed ? 0 : 1;
}

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--config", flags.config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  sub->add_option("--set", flags.overrides, "override a configuration key (key=value)");
  sub->add_option("--out", flags.out_dir, "output directory");
  sub->add_flag("--no-timing", flags.no_timing, "omit wall-clock columns");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"American option pricing with modulus-based splitting LCP solvers"};
  app.require_subcommand(1);

  CommonFlags price_flags;
  std::string price_method;
  int price_mesh = -1;
  auto* price = app.add_subcommand("price", "price one option and write surface.csv, summary.csv");
  add_common(price, price_flags);
  price->add_option("--method", price_method,
                    "GS, MPE-GS, MPECycle-GS, BGS, MPE-BGS or MPECycle-BGS");
  price->add_option("--mesh", price_mesh, "dx = dtau = 2^-EXP")->check(CLI::Range(0, 30));

  CommonFlags bench_flags;
  std::vector<std::string> bench_methods;
  std::vector<int> bench_meshes;
  bool serial = false;
  auto* bench = app.add_subcommand("bench", "iteration-count table over methods and meshes");
  add_common(bench, bench_flags);
  bench->add_option("--method", bench_methods, "methods to run (default: all six)");
  bench->add_option("--mesh", bench_meshes, "mesh exponents (default: 4 5 6)")
      ->check(CLI::Range(0, 30));
  bench->add_flag("--serial", serial, "run cells sequentially");

  ValidationOptions vopts;
  auto* validate = app.add_subcommand("validate", "cross-check solvers against reference oracles");
  validate->add_option("--seed", vopts.seed, "random seed");
  validate->add_option("--instances", vopts.instances, "number of random LCPs")
      ->check(CLI::PositiveNumber);
  validate->add_option("--min-order", vopts.min_order, "smallest LCP order")
      ->check(CLI::Range(1, 20));
  validate->add_option("--max-order", vopts.max_order, "largest LCP order (at most 20)")
      ->check(CLI::Range(1, 20));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*price) return cmd_price(price_flags, price_method, price_mesh);
    if (*bench) return cmd_bench(bench_flags, bench_methods, bench_meshes, serial);
    if (*validate) return cmd_validate(vopts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
