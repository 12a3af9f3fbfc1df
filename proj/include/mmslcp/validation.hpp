#ifndef MMSLCP_VALIDATION_HPP
#define MMSLCP_VALIDATION_HPP

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mmslcp/tridiagonal.hpp"

namespace mmslcp {

struct RandomLcp {
  SymTridiagonal<double> a;
  Eigen::VectorXd q;
};

/**
 * Random symmetric tridiagonal LCP with off-diagonals in [-1, 1], a diagonal
 * that dominates each row by a margin in [0.25, 2], and q in [-2, 2].
 */
RandomLcp random_tridiagonal_lcp(std::mt19937_64& rng, Eigen::Index order);

struct ValidationOptions {
  std::uint64_t seed = 20240611;
  int instances = 200;
  int min_order = 1;
  int max_order = 12;
  double mms_tol = 1e-10;
  int cycle_length = 4;
  double threshold = 1e-7;
};

struct ValidationReport {
  int instances = 0;
  int largest_order = 0;
  /// Max inf-norm distance to the enumeration solution, per solver label.
  std::vector<std::pair<std::string, double>> max_error;
  double max_certificate = 0.0;
  bool passed = false;
};

/// Cross-checks MMS (both splittings, all policies) and PSOR against active-set enumeration.
ValidationReport run_validation(const ValidationOptions& options);

void write_validation_report(std::ostream& out, const ValidationOptions& options,
                             const ValidationReport& report);

}  // namespace mmslcp

#endif  // MMSLCP_VALIDATION_HPP
