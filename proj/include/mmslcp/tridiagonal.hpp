#ifndef MMSLCP_TRIDIAGONAL_HPP
#define MMSLCP_TRIDIAGONAL_HPP

#include <Eigen/Dense>
#include <cassert>
#include <stdexcept>

namespace mmslcp {

/**
 * Symmetric tridiagonal matrix in band storage.
 *
 * diag has length n, off has length n - 1 and holds entries (i, i+1) = (i+1, i).
 */
template <typename Scalar = double>
class SymTridiagonal {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SymTridiagonal() = default;

  SymTridiagonal(Vector diag, Vector off)
      : diag_(std::move(diag)), off_(std::move(off)) {
    if (diag_.size() < 1 || off_.size() != diag_.size() - 1)
      throw std::invalid_argument("SymTridiagonal: inconsistent band sizes");
  }

  static SymTridiagonal constant(Eigen::Index n, Scalar diag, Scalar off) {
    return SymTridiagonal(Vector::Constant(n, diag),
                          Vector::Constant(n - 1, off));
  }

  Eigen::Index size() const { return diag_.size(); }
  const Vector& diagonal() const { return diag_; }
  const Vector& off_diagonal() const { return off_; }

  Scalar operator()(Eigen::Index i, Eigen::Index j) const {
    if (i == j) return diag_(i);
    if (j == i + 1) return off_(i);
    if (i == j + 1) return off_(j);
    return Scalar(0);
  }

  template <typename Derived>
  Vector operator*(const Eigen::MatrixBase<Derived>& x) const {
    const Eigen::Index n = size();
    assert(x.size() == n);
    Vector y = diag_.cwiseProduct(x);
    y.head(n - 1) += off_.cwiseProduct(x.tail(n - 1));
    y.tail(n - 1) += off_.cwiseProduct(x.head(n - 1));
    return y;
  }

  Matrix to_dense() const {
    const Eigen::Index n = size();
    Matrix d = Matrix::Zero(n, n);
    d.diagonal() = diag_;
    d.template diagonal<1>() = off_;
    d.template diagonal<-1>() = off_;
    return d;
  }

 private:
  Vector diag_;
  Vector off_;
};

/**
 * LU factors of a tridiagonal matrix (no pivoting), for repeated solves with
 * the Thomas algorithm. Valid for diagonally dominant matrices.
 */
template <typename Scalar = double>
class TridiagonalLu {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  TridiagonalLu() = default;

  /// sub(i) = entry (i+1, i), super(i) = entry (i, i+1).
  TridiagonalLu(const Vector& sub, const Vector& diag, const Vector& super)
      : sub_(sub), pivot_(diag.size()), upper_(super) {
    const Eigen::Index n = diag.size();
    pivot_(0) = diag(0);
    for (Eigen::Index i = 1; i < n; ++i) {
      if (pivot_(i - 1) == Scalar(0))
        throw std::runtime_error("TridiagonalLu: zero pivot");
      pivot_(i) = diag(i) - sub_(i - 1) / pivot_(i - 1) * upper_(i - 1);
    }
    if (pivot_(n - 1) == Scalar(0))
      throw std::runtime_error("TridiagonalLu: zero pivot");
  }

  Eigen::Index size() const { return pivot_.size(); }

  template <typename Derived>
  Vector solve(const Eigen::MatrixBase<Derived>& rhs) const {
    const Eigen::Index n = size();
    Vector x = rhs;
    for (Eigen::Index i = 1; i < n; ++i)
      x(i) -= sub_(i - 1) / pivot_(i - 1) * x(i - 1);
    x(n - 1) /= pivot_(n - 1);
    for (Eigen::Index i = n - 2; i >= 0; --i)
      x(i) = (x(i) - upper_(i) * x(i + 1)) / pivot_(i);
    return x;
  }

 private:
  Vector sub_;
  Vector pivot_;
  Vector upper_;
};

}  // namespace mmslcp

#endif  // MMSLCP_TRIDIAGONAL_HPP
