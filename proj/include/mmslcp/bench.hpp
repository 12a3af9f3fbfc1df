#ifndef MMSLCP_BENCH_HPP
#define MMSLCP_BENCH_HPP

#include <ostream>
#include <vector>

#include "mmslcp/config.hpp"
#include "mmslcp/methods.hpp"

namespace mmslcp {

/// One (mesh, method) cell of the iteration-count comparison.
struct BenchCell {
  int mesh_exp = 0;  // dx = dtau = 2^-mesh_exp
  Method method = Method::GS;
  bool converged = false;
  int time_steps = 0;
  long total_iterations = 0;
  long average_iterations = 0;
  long extrapolations = 0;
  double wall_seconds = 0.0;
  /// Largest verify_lcp certificate over all time steps.
  double max_certificate = 0.0;
  /// Largest final residual over all time steps.
  double max_residual = 0.0;
};

BenchCell run_bench_cell(const RunConfig& base, int mesh_exp, Method method);

/**
 * Runs every mesh x method cell. Rows come back mesh-major in the order of
 * `methods`, independent of scheduling. With serial == false the cells are
 * spread over hardware threads.
 */
std::vector<BenchCell> run_bench(const RunConfig& base, const std::vector<int>& meshes,
                                 const std::vector<Method>& methods, bool serial);

/// CSV: mesh,dx,dtau,method,total_iterations,average_iterations,[wall_seconds,]status
void write_bench_csv(std::ostream& out, const std::vector<BenchCell>& cells,
                     const RunConfig& base, bool with_timing);
/// Aligned text rendering of the same table.
void write_bench_table(std::ostream& out, const std::vector<BenchCell>& cells,
                       bool with_timing);

}  // namespace mmslcp

#endif  // MMSLCP_BENCH_HPP
