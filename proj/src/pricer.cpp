#include "mmslcp/pricer.hpp"

#include <utility>

#include "mmslcp/oracle.hpp"

namespace mmslcp {

Eigen::VectorXd PriceSurface::assets() const {
  Eigen::VectorXd s(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) s(i) = asset(i);
  return s;
}

Eigen::VectorXd PriceSurface::times() const {
  Eigen::VectorXd t(tau.size());
  for (Eigen::Index j = 0; j < tau.size(); ++j) t(j) = time(j);
  return t;
}

Eigen::MatrixXd PriceSurface::values() const {
  Eigen::MatrixXd v(u.rows(), u.cols());
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    for (Eigen::Index i = 0; i < u.rows(); ++i) v(i, j) = value(i, j);
  return v;
}

NonConverged::NonConverged(int step, PricingResult partial)
    : std::runtime_error("LCP solve did not converge at time step " +
                         std::to_string(step)),
      step_(step),
      partial_(std::move(partial)) {}

Eigen::VectorXd initial_guess(int step, Eigen::Index size,
                              const Eigen::VectorXd* previous_y) {
  if (step == 0 || previous_y == nullptr) return Eigen::VectorXd::Zero(size);
  if (previous_y->size() != size)
    throw std::invalid_argument("initial_guess: previous iterate has wrong size");
  return *previous_y;
}

PricingResult price_american(const MarketParams<double>& market,
                             const Grid<double>& grid,
                             const PricerOptions& options) {
  market.validate();
  options.mms.validate();
  const TransformConstants<double> c = compute_transform_constants(market);
  const DiscreteOperator<double> ops = assemble_operators(grid);
  const Eigen::Index size = grid.interior_size();
  const Eigen::VectorXd omega = options.mms.omega_for(ops.A);
  const Splitting<double> splitting = Splitting<double>::build(
      options.splitting, ops.A, omega,
      options.interface_index.value_or(grid.origin_index));

  PricingResult result;
  PriceSurface& surface = result.surface;
  surface.market = market;
  surface.constants = c;
  surface.x.resize(grid.n + 1);
  for (int i = 0; i <= grid.n; ++i) surface.x(i) = grid.node(i);
  surface.tau.resize(grid.m + 1);
  for (int j = 0; j <= grid.m; ++j) surface.tau(j) = grid.time(j);
  surface.u.resize(grid.n + 1, grid.m + 1);
  surface.u.col(0) = payoff_nodes(grid, 0, c, market.kind);

  RunSummary& summary = result.summary;
  summary.per_step.reserve(grid.m);

  Eigen::VectorXd u_prev = surface.u.col(0).segment(1, size);
  for (int j = 0; j < grid.m; ++j) {
    const Eigen::VectorXd g_nodes = payoff_nodes(grid, j + 1, c, market.kind);
    const Eigen::VectorXd g_next = g_nodes.segment(1, size);
    const TimeStepLcp<double> lcp =
        assemble_lcp(ops, u_prev, boundary_vector(grid, j, c, market.kind), g_next);

    Eigen::VectorXd y0;
    if (options.warm_start == WarmStart::FromZ && j > 0) {
      const Eigen::VectorXd z_prev = recover_z(result.final_y.back(), options.mms.eta);
      y0 = y_from_z(z_prev, ops.A, omega, options.mms.eta, lcp.q);
    } else {
      y0 = initial_guess(j, size, result.final_y.empty() ? nullptr : &result.final_y.back());
    }

    LcpSolution<double> sol = solve_lcp(splitting, options.mms, lcp.q, y0, options.policy);
    sol.report.certificate = oracle::verify_lcp<double>(ops.A, lcp.q, sol.z);

    u_prev = sol.z + g_next;
    surface.u.col(j + 1) = g_nodes;
    surface.u.col(j + 1).segment(1, size) = u_prev;

    summary.total_iterations += sol.report.iterations;
    summary.total_extrapolations += sol.report.extrapolations;
    summary.total_wall_time += sol.report.wall_time;
    summary.method_tag = sol.report.method_tag;
    const bool converged = sol.report.converged;
    summary.per_step.push_back(std::move(sol.report));
    result.final_y.push_back(std::move(sol.y));
    if (!converged) {
      summary.average_iterations = summary.total_iterations / grid.m;
      throw NonConverged(j, std::move(result));
    }
  }
  summary.average_iterations = summary.total_iterations / grid.m;
  return result;
}

}  // namespace mmslcp
