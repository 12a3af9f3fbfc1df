#ifndef MMSLCP_SPLITTING_HPP
#define MMSLCP_SPLITTING_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string_view>

#include "mmslcp/tridiagonal.hpp"

namespace mmslcp {

enum class SplittingKind { PointGaussSeidel, SchwarzTwoBlock };

inline std::string_view to_string(SplittingKind kind) {
  return kind == SplittingKind::PointGaussSeidel ? "GS" : "BGS";
}

/**
 * Splitting A = M - N of a symmetric tridiagonal matrix together with a
 * positive diagonal Omega.
 *
 * PointGaussSeidel: M = D + L, N = -U.
 *
 * SchwarzTwoBlock: A is partitioned after the first `interface` unknowns,
 *   M = [A11 0; A21 A22],  N = [0 -A12; 0 0],
 * which is block Gauss-Seidel on two subdomains meeting at the interface.
 * N has the single nonzero entry -A(interface-1, interface). With
 * interface == size() there is one block and N = 0.
 */
template <typename Scalar = double>
class Splitting {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static Splitting point_gauss_seidel(SymTridiagonal<Scalar> a, Vector omega) {
    Splitting s(SplittingKind::PointGaussSeidel, std::move(a), std::move(omega));
    s.interface_ = 0;
    return s;
  }

  static Splitting schwarz_two_block(SymTridiagonal<Scalar> a, Vector omega,
                                     Eigen::Index interface) {
    Splitting s(SplittingKind::SchwarzTwoBlock, std::move(a), std::move(omega));
    const Eigen::Index n = s.a_.size();
    if (interface < 1 || interface > n)
      throw std::invalid_argument("schwarz_two_block: interface out of range");
    s.interface_ = interface;
    const Vector d = s.a_.diagonal() + s.omega_;
    const Vector& off = s.a_.off_diagonal();
    s.left_ = TridiagonalLu<Scalar>(off.head(interface - 1), d.head(interface),
                                    off.head(interface - 1));
    if (interface < n) {
      const Eigen::Index right = n - interface;
      s.right_ = TridiagonalLu<Scalar>(off.tail(right - 1), d.tail(right),
                                       off.tail(right - 1));
    }
    return s;
  }

  static Splitting build(SplittingKind kind, SymTridiagonal<Scalar> a,
                         Vector omega, Eigen::Index interface) {
    return kind == SplittingKind::PointGaussSeidel
               ? point_gauss_seidel(std::move(a), std::move(omega))
               : schwarz_two_block(std::move(a), std::move(omega), interface);
  }

  SplittingKind kind() const { return kind_; }
  Eigen::Index size() const { return a_.size(); }
  /// Number of unknowns in the left block (0 for point Gauss-Seidel).
  Eigen::Index interface_index() const { return interface_; }
  const SymTridiagonal<Scalar>& matrix() const { return a_; }
  const Vector& omega() const { return omega_; }

  /// Solves (M + Omega) v = rhs.
  template <typename Derived>
  Vector solve_m_plus_omega(const Eigen::MatrixBase<Derived>& rhs) const {
    const Eigen::Index n = size();
    if (rhs.size() != n)
      throw std::invalid_argument("solve_m_plus_omega: dimension mismatch");
    const Vector& d = a_.diagonal();
    const Vector& off = a_.off_diagonal();
    if (kind_ == SplittingKind::PointGaussSeidel) {
      Vector v(n);
      v(0) = rhs(0) / (d(0) + omega_(0));
      for (Eigen::Index i = 1; i < n; ++i)
        v(i) = (rhs(i) - off(i - 1) * v(i - 1)) / (d(i) + omega_(i));
      return v;
    }
    const Eigen::Index k = interface_;
    Vector v(n);
    v.head(k) = left_.solve(rhs.head(k));
    if (k < n) {
      Vector rhs2 = rhs.tail(n - k);
      rhs2(0) -= off(k - 1) * v(k - 1);
      v.tail(n - k) = right_.solve(rhs2);
    }
    return v;
  }

  template <typename Derived>
  Vector apply_n(const Eigen::MatrixBase<Derived>& y) const {
    const Eigen::Index n = size();
    if (y.size() != n) throw std::invalid_argument("apply_n: dimension mismatch");
    const Vector& off = a_.off_diagonal();
    if (kind_ == SplittingKind::PointGaussSeidel) {
      Vector out(n);
      out.head(n - 1) = -off.cwiseProduct(y.tail(n - 1));
      out(n - 1) = Scalar(0);
      return out;
    }
    Vector out = Vector::Zero(n);
    if (interface_ < n) out(interface_ - 1) = -off(interface_ - 1) * y(interface_);
    return out;
  }

  /// M y, for recomposition checks.
  template <typename Derived>
  Vector apply_m(const Eigen::MatrixBase<Derived>& y) const {
    return a_ * y + apply_n(y);
  }

  Matrix dense_m() const {
    return a_.to_dense() + dense_n();
  }

  Matrix dense_n() const {
    const Eigen::Index n = size();
    Matrix out = Matrix::Zero(n, n);
    const Vector& off = a_.off_diagonal();
    if (kind_ == SplittingKind::PointGaussSeidel) {
      out.template diagonal<1>() = -off;
    } else if (interface_ < n) {
      out(interface_ - 1, interface_) = -off(interface_ - 1);
    }
    return out;
  }

 private:
  Splitting(SplittingKind kind, SymTridiagonal<Scalar> a, Vector omega)
      : kind_(kind), a_(std::move(a)), omega_(std::move(omega)) {
    if (omega_.size() != a_.size())
      throw std::invalid_argument("Splitting: Omega has the wrong size");
    if (!(omega_.array() > Scalar(0)).all())
      throw std::invalid_argument("Splitting: Omega must be positive");
  }

  SplittingKind kind_;
  SymTridiagonal<Scalar> a_;
  Vector omega_;
  Eigen::Index interface_ = 0;
  TridiagonalLu<Scalar> left_;
  TridiagonalLu<Scalar> right_;
};

}  // namespace mmslcp

#endif  // MMSLCP_SPLITTING_HPP
