#include "mmslcp/validation.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "mmslcp/mms.hpp"
#include "mmslcp/mpe.hpp"
#include "mmslcp/oracle.hpp"
#include "mmslcp/splitting.hpp"

namespace mmslcp {

RandomLcp random_tridiagonal_lcp(std::mt19937_64& rng, Eigen::Index order) {
  std::uniform_real_distribution<double> off_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> margin_dist(0.25, 2.0);
  std::uniform_real_distribution<double> q_dist(-2.0, 2.0);
  Eigen::VectorXd off(order - 1);
  for (Eigen::Index i = 0; i < order - 1; ++i) off(i) = off_dist(rng);
  Eigen::VectorXd diag(order);
  for (Eigen::Index i = 0; i < order; ++i) {
    double row = 0.0;
    if (i > 0) row += std::abs(off(i - 1));
    if (i + 1 < order) row += std::abs(off(i));
    diag(i) = row + margin_dist(rng);
  }
  Eigen::VectorXd q(order);
  for (Eigen::Index i = 0; i < order; ++i) q(i) = q_dist(rng);
  return {SymTridiagonal<double>(std::move(diag), std::move(off)), std::move(q)};
}

ValidationReport run_validation(const ValidationOptions& options) {
  if (options.max_order > 20 || options.min_order < 1 || options.min_order > options.max_order)
    throw std::invalid_argument("run_validation: orders must satisfy 1 <= min <= max <= 20");

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> order_dist(options.min_order, options.max_order);

  MmsConfig<double> cfg;
  cfg.tol = options.mms_tol;

  struct Solver {
    std::string label;
    SplittingKind kind;
    AccelPolicy policy;
  };
  const std::vector<Solver> solvers = {
      {"GS", SplittingKind::PointGaussSeidel, AccelPolicy::none()},
      {"MPE-GS", SplittingKind::PointGaussSeidel, AccelPolicy::every()},
      {"MPECycle-GS", SplittingKind::PointGaussSeidel, AccelPolicy::cycle(options.cycle_length)},
      {"BGS", SplittingKind::SchwarzTwoBlock, AccelPolicy::none()},
      {"MPE-BGS", SplittingKind::SchwarzTwoBlock, AccelPolicy::every()},
      {"MPECycle-BGS", SplittingKind::SchwarzTwoBlock, AccelPolicy::cycle(options.cycle_length)},
  };

  ValidationReport report;
  report.max_error.emplace_back("PSOR", 0.0);
  for (const auto& s : solvers) report.max_error.emplace_back(s.label, 0.0);

  for (int k = 0; k < options.instances; ++k) {
    const int order = order_dist(rng);
    const RandomLcp lcp = random_tridiagonal_lcp(rng, order);
    const Eigen::VectorXd exact =
        oracle::solve_lcp_enumeration<double>(lcp.a.to_dense(), lcp.q);
    report.largest_order = std::max(report.largest_order, order);

    const Eigen::VectorXd psor = oracle::solve_lcp_psor<double>(lcp.a, lcp.q);
    auto record = [&](std::size_t slot, const Eigen::VectorXd& z) {
      auto& err = report.max_error[slot].second;
      err = std::max(err, (z - exact).lpNorm<Eigen::Infinity>());
      report.max_certificate =
          std::max(report.max_certificate, oracle::verify_lcp<double>(lcp.a, lcp.q, z));
    };
    record(0, psor);

    const Eigen::VectorXd omega = cfg.omega_for(lcp.a);
    const Eigen::Index interface = std::max<Eigen::Index>(1, order / 2);
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      const auto splitting = Splitting<double>::build(solvers[s].kind, lcp.a, omega, interface);
      const auto sol = solve_lcp(splitting, cfg, lcp.q, Eigen::VectorXd::Zero(order).eval(),
                                 solvers[s].policy);
      if (!sol.report.converged) {
        report.max_error[s + 1].second = std::numeric_limits<double>::infinity();
        continue;
      }
      record(s + 1, sol.z);
    }
    ++report.instances;
  }

  report.passed = report.max_certificate <= options.threshold;
  for (const auto& [label, err] : report.max_error)
    report.passed = report.passed && err <= options.threshold;
  return report;
}

void write_validation_report(std::ostream& out, const ValidationOptions& options,
                             const ValidationReport& report) {
  char buf[64];
  out << "# seed = " << options.seed << '\n'
      << "# instances = " << report.instances << '\n'
      << "# orders = " << options.min_order << ".." << options.max_order
      << " (largest used " << report.largest_order << ")\n"
      << "# mms_tol = " << options.mms_tol << '\n'
      << "# threshold = " << options.threshold << '\n'
      << "solver,max_error_vs_enumeration\n";
  for (const auto& [label, err] : report.max_error) {
    std::snprintf(buf, sizeof(buf), "%.3e", err);
    out << label << ',' << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "%.3e", report.max_certificate);
  out << "max_certificate," << buf << '\n';
  out << (report.passed ? "PASS" : "FAIL") << '\n';
}

}  // namespace mmslcp
