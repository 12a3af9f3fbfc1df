#ifndef MMSLCP_MPE_HPP
#define MMSLCP_MPE_HPP

#include <Eigen/Dense>
#include <Eigen/QR>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmslcp {

class InsufficientHistory : public std::invalid_argument {
 public:
  InsufficientHistory()
      : std::invalid_argument("mpe_extrapolate: need at least two iterates") {}
};

/// Iterates y_0, ..., y_{k+1} of one fixed-point sequence.
template <typename Scalar = double>
class MpeHistory {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  MpeHistory() = default;
  explicit MpeHistory(const std::vector<Vector>& iterates) {
    for (const auto& y : iterates) push(y);
  }

  template <typename Derived>
  void push(const Eigen::MatrixBase<Derived>& y) {
    if (!iterates_.empty() && y.size() != iterates_.front().size())
      throw std::invalid_argument("MpeHistory: iterate size mismatch");
    iterates_.emplace_back(y);
  }

  void clear() { iterates_.clear(); }
  std::size_t size() const { return iterates_.size(); }
  bool empty() const { return iterates_.empty(); }
  const Vector& operator[](std::size_t i) const { return iterates_[i]; }
  const Vector& back() const { return iterates_.back(); }

  /// U_k = (y_1 - y_0, ..., y_{k+1} - y_k).
  Matrix differences() const {
    if (iterates_.size() < 2) return Matrix();
    const Eigen::Index rows = iterates_.front().size();
    const Eigen::Index cols = static_cast<Eigen::Index>(iterates_.size()) - 1;
    Matrix u(rows, cols);
    for (Eigen::Index i = 0; i < cols; ++i)
      u.col(i) = iterates_[i + 1] - iterates_[i];
    return u;
  }

 private:
  std::vector<Vector> iterates_;
};

template <typename Scalar = double>
struct MpeResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> gamma;  // weights of y_0..y_k
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> s;      // extrapolated vector
  Scalar ls_residual = Scalar(0);                  // ||U_{k-1} c + u_k||_2
  bool exists = false;
};

/**
 * Minimal polynomial extrapolation.
 *
 * Solves U_{k-1} c ~= -u_k in the least-squares sense with a column-pivoted
 * Householder QR, sets c_k = 1 and returns s = sum gamma_i y_i with
 * gamma = c / sum(c). If |sum(c)| < 1e-12 max(1, ||c||_1) the extrapolant
 * does not exist and `exists` is false.
 */
template <typename Scalar>
MpeResult<Scalar> mpe_extrapolate(const MpeHistory<Scalar>& history) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (history.size() < 2) throw InsufficientHistory();

  const Matrix u = history.differences();
  const Eigen::Index k = u.cols() - 1;
  MpeResult<Scalar> out;

  // Stagnated sequence: already at the fixed point.
  if (u.col(k).template lpNorm<Eigen::Infinity>() < Scalar(1e-15)) {
    out.gamma = Vector::Zero(k + 1);
    out.gamma(k) = Scalar(1);
    out.s = history[k];
    out.exists = true;
    return out;
  }

  Vector c(k + 1);
  c(k) = Scalar(1);
  if (k > 0) {
    const auto lhs = u.leftCols(k);
    const Vector rhs = -u.col(k);
    Eigen::ColPivHouseholderQR<Matrix> qr(lhs);
    c.head(k) = qr.solve(rhs);
    out.ls_residual = (lhs * c.head(k) - rhs).norm();
  } else {
    out.ls_residual = u.col(0).norm();
  }

  const Scalar sum = c.sum();
  if (std::abs(sum) < Scalar(1e-12) * std::max(Scalar(1), c.template lpNorm<1>())) {
    out.gamma = c;
    out.exists = false;
    return out;
  }
  out.gamma = c / sum;
  out.s = Vector::Zero(history[0].size());
  for (Eigen::Index i = 0; i <= k; ++i) out.s += out.gamma(i) * history[i];
  out.exists = true;
  return out;
}

/**
 * How extrapolation is interleaved with the stationary iteration.
 *
 * None      plain stationary iteration.
 * Every     extrapolate over the whole history after every step; the
 *           extrapolant is only a convergence candidate and is not fed back.
 * Cycle(N)  every N stationary steps extrapolate over the N + 1 iterates of
 *           the cycle, restart from the extrapolant and clear the history.
 */
struct AccelPolicy {
  enum class Variant { None, Every, Cycle };
  Variant variant = Variant::None;
  int cycle_length = 0;

  static AccelPolicy none() { return {Variant::None, 0}; }
  static AccelPolicy every() { return {Variant::Every, 0}; }
  static AccelPolicy cycle(int n) {
    if (n < 2) throw std::invalid_argument("AccelPolicy: cycle length must be >= 2");
    return {Variant::Cycle, n};
  }

  std::string label() const {
    switch (variant) {
      case Variant::None: return "";
      case Variant::Every: return "MPE";
      case Variant::Cycle: return "MPECycle";
    }
    return "";
  }
};

template <typename Scalar = double>
struct AccelOutcome {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y;
  int iterations = 0;  // stationary steps
  int extrapolations = 0;
  int degenerate_extrapolations = 0;
  bool converged = false;
  Scalar final_residual = Scalar(0);
  std::vector<Scalar> residual_history;  // one entry per checked candidate
};

/**
 * Drives a fixed-point map `step` until `residual` of the candidate drops
 * below tol or `max_iter` stationary steps have been taken.
 */
template <typename Scalar, typename StepFn, typename ResidualFn>
AccelOutcome<Scalar> accelerate(const AccelPolicy& policy, StepFn&& step,
                                ResidualFn&& residual,
                                const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y0,
                                Scalar tol, int max_iter) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  AccelOutcome<Scalar> out;
  auto check = [&](const Vector& candidate) {
    out.final_residual = residual(candidate);
    out.residual_history.push_back(out.final_residual);
    if (out.final_residual < tol) {
      out.y = candidate;
      out.converged = true;
    }
    return out.converged;
  };

  if (check(y0)) return out;

  Vector y = y0;
  MpeHistory<Scalar> history;
  if (policy.variant != AccelPolicy::Variant::None) history.push(y);

  while (out.iterations < max_iter) {
    y = step(y);
    ++out.iterations;

    switch (policy.variant) {
      case AccelPolicy::Variant::None:
        if (check(y)) return out;
        break;

      case AccelPolicy::Variant::Every: {
        history.push(y);
        if (history.size() < 3) {
          if (check(y)) return out;
          break;
        }
        const MpeResult<Scalar> ext = mpe_extrapolate(history);
        ++out.extrapolations;
        if (ext.exists) {
          if (check(ext.s)) return out;
        } else {
          ++out.degenerate_extrapolations;
          if (check(y)) return out;
        }
        break;
      }

      case AccelPolicy::Variant::Cycle: {
        history.push(y);
        if (check(y)) return out;
        if (static_cast<int>(history.size()) == policy.cycle_length + 1) {
          const MpeResult<Scalar> ext = mpe_extrapolate(history);
          ++out.extrapolations;
          if (ext.exists) {
            y = ext.s;
          } else {
            ++out.degenerate_extrapolations;
          }
          history.clear();
          history.push(y);
          if (ext.exists && check(y)) return out;
        }
        break;
      }
    }
  }
  out.y = y;
  return out;
}

}  // namespace mmslcp

#endif  // MMSLCP_MPE_HPP
