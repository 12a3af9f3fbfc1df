#ifndef MMSLCP_MMS_HPP
#define MMSLCP_MMS_HPP

#include <Eigen/Dense>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmslcp/mpe.hpp"
#include "mmslcp/splitting.hpp"
#include "mmslcp/tridiagonal.hpp"

namespace mmslcp {

/// Parameters of the modulus-based iteration. Omega = omega_scale * diag(A).
template <typename Scalar = double>
struct MmsConfig {
  Scalar eta = Scalar(2);
  Scalar omega_scale = Scalar(0.5);
  Scalar tol = Scalar(1e-6);
  int max_iter = 100000;

  void validate() const {
    if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
    if (!(omega_scale > 0))
      throw std::invalid_argument("omega_scale must be positive");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> omega_for(
      const SymTridiagonal<Scalar>& a) const {
    return omega_scale * a.diagonal();
  }
};

template <typename Scalar = double>
struct SolveReport {
  int iterations = 0;
  int extrapolations = 0;
  int degenerate_extrapolations = 0;
  bool converged = false;
  Scalar final_residual = Scalar(0);
  std::vector<Scalar> residual_history;
  double wall_time = 0.0;
  std::string method_tag;
  /// verify_lcp certificate of the returned z, filled in by the caller.
  Scalar certificate = Scalar(0);
};

template <typename Scalar = double>
struct LcpSolution {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> z;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y;
  SolveReport<Scalar> report;
};

/// || A(|y| + y) + Omega (y - |y|) + eta q ||_inf
template <typename Scalar, typename DO, typename DQ, typename DY>
Scalar mms_residual(const SymTridiagonal<Scalar>& a,
                    const Eigen::MatrixBase<DO>& omega, Scalar eta,
                    const Eigen::MatrixBase<DQ>& q,
                    const Eigen::MatrixBase<DY>& y) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> abs_y = y.cwiseAbs();
  return (a * (abs_y + y) + omega.cwiseProduct(y - abs_y) + eta * q)
      .template lpNorm<Eigen::Infinity>();
}

/// (M + Omega) y_{k+1} = N y_k + (Omega - A)|y_k| - eta q
template <typename Scalar, typename DQ, typename DY>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mms_step(
    const Splitting<Scalar>& s, Scalar eta, const Eigen::MatrixBase<DQ>& q,
    const Eigen::MatrixBase<DY>& y) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> abs_y = y.cwiseAbs();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs =
      s.apply_n(y) + s.omega().cwiseProduct(abs_y) - s.matrix() * abs_y - eta * q;
  return s.solve_m_plus_omega(rhs);
}

template <typename Scalar, typename DY>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> recover_z(
    const Eigen::MatrixBase<DY>& y, Scalar eta) {
  return (y.cwiseAbs() + y) / eta;
}

/// Fixed point corresponding to an LCP solution z.
template <typename Scalar, typename DZ, typename DO, typename DQ>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y_from_z(
    const Eigen::MatrixBase<DZ>& z, const SymTridiagonal<Scalar>& a,
    const Eigen::MatrixBase<DO>& omega, Scalar eta,
    const Eigen::MatrixBase<DQ>& q) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> t =
      omega.cwiseProduct(z) - a * z - q;
  return eta * t.cwiseQuotient(omega) / 2;
}

/**
 * Solves one LCP with the modulus-based splitting iteration. Non-convergence
 * within cfg.max_iter is reported through report.converged, not thrown.
 */
template <typename Scalar, typename DQ>
LcpSolution<Scalar> solve_lcp(const Splitting<Scalar>& s,
                              const MmsConfig<Scalar>& cfg,
                              const Eigen::MatrixBase<DQ>& q,
                              const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y0,
                              const AccelPolicy& policy = AccelPolicy::none()) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (q.size() != s.size() || y0.size() != s.size())
    throw std::invalid_argument("solve_lcp: dimension mismatch");
  const Vector qv = q;
  const Scalar eta = cfg.eta;

  const auto start = std::chrono::steady_clock::now();
  AccelOutcome<Scalar> run = accelerate<Scalar>(
      policy, [&](const Vector& y) { return mms_step(s, eta, qv, y); },
      [&](const Vector& y) { return mms_residual(s.matrix(), s.omega(), eta, qv, y); },
      y0, cfg.tol, cfg.max_iter);
  const auto stop = std::chrono::steady_clock::now();

  LcpSolution<Scalar> out;
  out.y = std::move(run.y);
  out.z = recover_z(out.y, eta);
  out.report.iterations = run.iterations;
  out.report.extrapolations = run.extrapolations;
  out.report.degenerate_extrapolations = run.degenerate_extrapolations;
  out.report.converged = run.converged;
  out.report.final_residual = run.final_residual;
  out.report.residual_history = std::move(run.residual_history);
  out.report.wall_time = std::chrono::duration<double>(stop - start).count();
  out.report.method_tag = policy.variant == AccelPolicy::Variant::None
                              ? std::string(to_string(s.kind()))
                              : policy.label() + "-" + std::string(to_string(s.kind()));
  return out;
}

}  // namespace mmslcp

#endif  // MMSLCP_MMS_HPP
