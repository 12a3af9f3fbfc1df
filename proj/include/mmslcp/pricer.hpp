#ifndef MMSLCP_PRICER_HPP
#define MMSLCP_PRICER_HPP

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmslcp/discretization.hpp"
#include "mmslcp/mms.hpp"
#include "mmslcp/model.hpp"
#include "mmslcp/mpe.hpp"
#include "mmslcp/splitting.hpp"

namespace mmslcp {

/// How the next time step's iteration is seeded.
enum class WarmStart {
  PreviousY,  // final y of the previous step
  FromZ,      // y_from_z(z_prev) for the new q
};

struct PricerOptions {
  SplittingKind splitting = SplittingKind::SchwarzTwoBlock;
  AccelPolicy policy = AccelPolicy::none();
  MmsConfig<double> mms;
  WarmStart warm_start = WarmStart::PreviousY;
  /// Left block size of the Schwarz splitting; defaults to the origin index.
  std::optional<Eigen::Index> interface_index;
};

/**
 * Transformed solution u(x_i, tau_j) on all nodes, i = 0..n, j = 0..m.
 * Option values are derived on demand.
 */
struct PriceSurface {
  MarketParams<double> market;
  TransformConstants<double> constants;
  Eigen::VectorXd x;    // n + 1
  Eigen::VectorXd tau;  // m + 1
  Eigen::MatrixXd u;    // (n + 1) x (m + 1)

  double asset(Eigen::Index i) const { return market.strike * std::exp(x(i)); }
  double time(Eigen::Index j) const {
    return market.expiry - 2 * tau(j) / (market.volatility * market.volatility);
  }
  double value(Eigen::Index i, Eigen::Index j) const {
    return recover_option_value(u(i, j), x(i), tau(j), market, constants).value;
  }
  Eigen::VectorXd assets() const;
  Eigen::VectorXd times() const;
  /// V as an (n + 1) x (m + 1) matrix.
  Eigen::MatrixXd values() const;
};

struct RunSummary {
  std::vector<SolveReport<double>> per_step;
  long total_iterations = 0;
  long total_extrapolations = 0;
  long average_iterations = 0;  // floor(total / m)
  double total_wall_time = 0.0;
  std::string method_tag;
};

struct PricingResult {
  PriceSurface surface;
  RunSummary summary;
  /// Final y of each step, index j holds the solve for tau_{j+1}.
  std::vector<Eigen::VectorXd> final_y;
};

class NonConverged : public std::runtime_error {
 public:
  NonConverged(int step, PricingResult partial);
  int step() const { return step_; }
  const PricingResult& partial() const { return partial_; }

 private:
  int step_;
  PricingResult partial_;
};

/// y0 for the solve at step index `step` (0-based).
Eigen::VectorXd initial_guess(int step, Eigen::Index size,
                              const Eigen::VectorXd* previous_y);

/**
 * Marches the American option LCP from tau = 0 to tau_max. Throws
 * NonConverged (carrying everything computed so far) if a step hits the
 * iteration cap.
 */
PricingResult price_american(const MarketParams<double>& market,
                             const Grid<double>& grid,
                             const PricerOptions& options);

}  // namespace mmslcp

#endif  // MMSLCP_PRICER_HPP
