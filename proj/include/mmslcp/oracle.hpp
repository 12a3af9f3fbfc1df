#ifndef MMSLCP_ORACLE_HPP
#define MMSLCP_ORACLE_HPP

// Reference LCP solvers used for verification only.

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mmslcp/tridiagonal.hpp"

namespace mmslcp::oracle {

class NoSolution : public std::runtime_error {
 public:
  NoSolution() : std::runtime_error("oracle: no feasible active set") {}
};

class PsorNotConverged : public std::runtime_error {
 public:
  PsorNotConverged() : std::runtime_error("oracle: PSOR did not converge") {}
};

/// max(||min(z,0)||, ||min(Az+q,0)||, |z'(Az+q)| / (1 + ||z|| ||q||)), inf-norms.
template <typename Scalar, typename DA, typename DQ, typename DZ>
Scalar verify_lcp(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DQ>& q,
                  const Eigen::MatrixBase<DZ>& z) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w = a * z + q;
  const Scalar neg_z = (-z.array()).max(Scalar(0)).maxCoeff();
  const Scalar neg_w = (-w.array()).max(Scalar(0)).maxCoeff();
  const Scalar comp =
      std::abs(z.dot(w)) / (1 + z.template lpNorm<Eigen::Infinity>() *
                                    q.template lpNorm<Eigen::Infinity>());
  return std::max({neg_z, neg_w, comp});
}

template <typename Scalar, typename DQ, typename DZ>
Scalar verify_lcp(const SymTridiagonal<Scalar>& a, const Eigen::MatrixBase<DQ>& q,
                  const Eigen::MatrixBase<DZ>& z) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w = a * z + q;
  const Scalar neg_z = (-z.array()).max(Scalar(0)).maxCoeff();
  const Scalar neg_w = (-w.array()).max(Scalar(0)).maxCoeff();
  const Scalar comp =
      std::abs(z.dot(w)) / (1 + z.template lpNorm<Eigen::Infinity>() *
                                    q.template lpNorm<Eigen::Infinity>());
  return std::max({neg_z, neg_w, comp});
}

/**
 * Active-set enumeration for a dense SPD matrix of order <= 20: for every
 * subset S solve A_SS z_S = -q_S with z = 0 off S and return the first
 * feasible point. SPD A makes the solution unique.
 */
template <typename Scalar, typename DA, typename DQ>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_lcp_enumeration(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DQ>& q) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = q.size();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("solve_lcp_enumeration: dimension mismatch");
  if (n > 20) throw std::invalid_argument("solve_lcp_enumeration: order > 20");
  const Scalar feas = Scalar(1e-12);

  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < n; ++i)
      if (mask & (std::uint32_t(1) << i)) active.push_back(i);
    Vector z = Vector::Zero(n);
    if (!active.empty()) {
      const auto k = static_cast<Eigen::Index>(active.size());
      Matrix sub(k, k);
      Vector rhs(k);
      for (Eigen::Index r = 0; r < k; ++r) {
        rhs(r) = -q(active[r]);
        for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = a(active[r], active[c]);
      }
      Eigen::LLT<Matrix> llt(sub);
      if (llt.info() != Eigen::Success) continue;
      const Vector zs = llt.solve(rhs);
      for (Eigen::Index r = 0; r < k; ++r) z(active[r]) = zs(r);
    }
    if ((z.array() < -feas).any()) continue;
    const Vector w = a * z + q;
    if ((w.array() < -feas).any()) continue;
    return z;
  }
  throw NoSolution();
}

/**
 * Projected SOR on a symmetric tridiagonal matrix. relaxation = 1 is
 * projected Gauss-Seidel. Iterates until the verify_lcp certificate is
 * below tol.
 */
template <typename Scalar, typename DQ>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_lcp_psor(
    const SymTridiagonal<Scalar>& a, const Eigen::MatrixBase<DQ>& q,
    Scalar relaxation = Scalar(1), Scalar tol = Scalar(1e-12),
    int max_sweeps = 1000000) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (!(relaxation > 0 && relaxation < 2))
    throw std::invalid_argument("solve_lcp_psor: relaxation must be in (0, 2)");
  const Eigen::Index n = a.size();
  if (q.size() != n) throw std::invalid_argument("solve_lcp_psor: dimension mismatch");
  const Vector& d = a.diagonal();
  const Vector& off = a.off_diagonal();
  Vector z = Vector::Zero(n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Scalar w = q(i) + d(i) * z(i);
      if (i > 0) w += off(i - 1) * z(i - 1);
      if (i + 1 < n) w += off(i) * z(i + 1);
      z(i) = std::max(Scalar(0), z(i) - relaxation * w / d(i));
    }
    if (verify_lcp<Scalar>(a, q, z) <= tol) return z;
  }
  throw PsorNotConverged();
}

}  // namespace mmslcp::oracle

#endif  // MMSLCP_ORACLE_HPP
