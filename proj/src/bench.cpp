#include "mmslcp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <thread>

#include "mmslcp/csv_output.hpp"

namespace mmslcp {
namespace {

void fill_from_summary(BenchCell& cell, const RunSummary& s) {
  cell.total_iterations = s.total_iterations;
  cell.average_iterations = s.average_iterations;
  cell.extrapolations = s.total_extrapolations;
  cell.wall_seconds = s.total_wall_time;
  for (const auto& r : s.per_step) {
    cell.max_certificate = std::max(cell.max_certificate, r.certificate);
    cell.max_residual = std::max(cell.max_residual, r.final_residual);
  }
}

std::string mesh_label(int e) { return "2^-" + std::to_string(e); }

}  // namespace

BenchCell run_bench_cell(const RunConfig& base, int mesh_exp, Method method) {
  RunConfig cfg = base;
  cfg.dx_exp = cfg.dtau_exp = mesh_exp;
  cfg.method = method;
  cfg.validate();
  const Grid<double> grid = cfg.grid();

  BenchCell cell;
  cell.mesh_exp = mesh_exp;
  cell.method = method;
  cell.time_steps = grid.m;
  try {
    const PricingResult r = price_american(cfg.market, grid, cfg.pricer_options());
    fill_from_summary(cell, r.summary);
    cell.converged = true;
  } catch (const NonConverged& e) {
    fill_from_summary(cell, e.partial().summary);
    cell.converged = false;
  }
  return cell;
}

std::vector<BenchCell> run_bench(const RunConfig& base, const std::vector<int>& meshes,
                                 const std::vector<Method>& methods, bool serial) {
  std::vector<std::pair<int, Method>> jobs;
  for (int e : meshes)
    for (Method m : methods) jobs.emplace_back(e, m);
  std::vector<BenchCell> cells(jobs.size());

  const unsigned workers =
      serial ? 1u
             : std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                               static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k)
      cells[k] = run_bench_cell(base, jobs[k].first, jobs[k].second);
    return cells;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = next++; k < jobs.size(); k = next++)
          cells[k] = run_bench_cell(base, jobs[k].first, jobs[k].second);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return cells;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchCell>& cells,
                     const RunConfig& base, bool with_timing) {
  HeaderEntries header;
  for (auto& [k, v] : base.entries())
    if (k != "method" && k != "dx_exp" && k != "dtau_exp") header.emplace_back(k, v);
  write_header(out, header);
  out << "mesh,dx,dtau,method,total_iterations,average_iterations";
  if (with_timing) out << ",wall_seconds";
  out << ",status\n";
  for (const auto& c : cells) {
    const double h = std::ldexp(1.0, -c.mesh_exp);
    out << mesh_label(c.mesh_exp) << ',' << format_double(h) << ',' << format_double(h)
        << ',' << method_name(c.method) << ',' << c.total_iterations << ','
        << c.average_iterations;
    if (with_timing) out << ',' << format_double(c.wall_seconds);
    out << ',' << (c.converged ? "OK" : "NONCONV") << '\n';
  }
}

void write_bench_table(std::ostream& out, const std::vector<BenchCell>& cells,
                       bool with_timing) {
  out << std::left << std::setw(18) << "(dx, dtau)" << std::setw(14) << "Method"
      << std::right << std::setw(18) << "Total Iterations" << std::setw(20)
      << "Average Iterations";
  if (with_timing) out << std::setw(14) << "Solve [s]";
  out << '\n';
  int last_mesh = -1;
  for (const auto& c : cells) {
    std::string mesh;
    if (c.mesh_exp != last_mesh) {
      mesh = "(" + mesh_label(c.mesh_exp) + ", " + mesh_label(c.mesh_exp) + ")";
      last_mesh = c.mesh_exp;
    }
    out << std::left << std::setw(18) << mesh << std::setw(14) << method_name(c.method)
        << std::right << std::setw(18) << c.total_iterations << std::setw(20)
        << c.average_iterations;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", c.wall_seconds);
      out << std::setw(14) << buf;
    }
    if (!c.converged) out << "  NONCONV";
    out << '\n';
  }
}

}  // namespace mmslcp
