#ifndef MMSLCP_DISCRETIZATION_HPP
#define MMSLCP_DISCRETIZATION_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mmslcp/model.hpp"
#include "mmslcp/tridiagonal.hpp"

namespace mmslcp {

/**
 * Uniform grid on (a, b) x (0, tau_max] with x_i = a + i dx, i = 0..n and
 * tau_j = j dtau, j = 0..m. The origin is always the grid node origin_index.
 *
 * Unknowns of each time step are the interior nodes 1..n-1, stored at
 * zero-based positions 0..n-2.
 */
template <typename Scalar = double>
struct Grid {
  Scalar a;
  Scalar b;
  int n;
  int m;
  Scalar dx;
  Scalar dtau;
  Scalar lambda;
  Scalar theta;
  int origin_index;

  Eigen::Index interior_size() const { return n - 1; }
  Scalar node(int i) const { return a + i * dx; }
  Scalar time(int j) const { return j * dtau; }
};

namespace detail {

template <typename Scalar>
int exact_count(Scalar ratio, const char* what) {
  const Scalar rounded = std::round(ratio);
  if (!(std::abs(ratio - rounded) <= Scalar(1e-9) * std::max(Scalar(1), rounded)))
    throw std::invalid_argument(std::string("build_grid: ") + what +
                                " is not an integer");
  return static_cast<int>(rounded);
}

}  // namespace detail

/// Grid with arbitrary mesh sizes that must tile the domain exactly.
template <typename Scalar>
Grid<Scalar> build_grid(Scalar tau_max, Scalar a, Scalar b, Scalar dx,
                        Scalar dtau, Scalar theta) {
  if (!(a < 0 && b > 0)) throw std::invalid_argument("build_grid: need a < 0 < b");
  if (!(dx > 0 && dtau > 0 && tau_max > 0))
    throw std::invalid_argument("build_grid: mesh sizes must be positive");
  if (!(theta > 0 && theta < 1))
    throw std::invalid_argument("build_grid: theta must lie in (0, 1)");
  Grid<Scalar> g;
  g.a = a;
  g.b = b;
  g.dx = dx;
  g.dtau = dtau;
  g.theta = theta;
  g.n = detail::exact_count((b - a) / dx, "(b - a) / dx");
  g.m = detail::exact_count(tau_max / dtau, "tau_max / dtau");
  g.origin_index = detail::exact_count(-a / dx, "-a / dx");
  if (g.n < 3) throw std::invalid_argument("build_grid: need n >= 3");
  if (g.m < 1) throw std::invalid_argument("build_grid: need m >= 1");
  if (g.origin_index < 1 || g.origin_index > g.n - 1)
    throw std::invalid_argument("build_grid: origin is not an interior node");
  g.lambda = dtau / (dx * dx);
  return g;
}

/// Grid with dyadic mesh sizes dx = 2^-dx_exp, dtau = 2^-dtau_exp.
template <typename Scalar>
Grid<Scalar> build_grid(const TransformConstants<Scalar>& c, Scalar a, Scalar b,
                        int dx_exp, int dtau_exp, Scalar theta) {
  return build_grid(c.tau_max, a, b, std::ldexp(Scalar(1), -dx_exp),
                    std::ldexp(Scalar(1), -dtau_exp), theta);
}

/// A = I + lambda theta T and B = I - lambda (1 - theta) T with T = tridiag(-1, 2, -1).
template <typename Scalar = double>
struct DiscreteOperator {
  SymTridiagonal<Scalar> A;
  SymTridiagonal<Scalar> B;
};

template <typename Scalar>
DiscreteOperator<Scalar> assemble_operators(const Grid<Scalar>& g) {
  const Eigen::Index size = g.interior_size();
  const Scalar implicit = g.lambda * g.theta;
  const Scalar explicit_part = g.lambda * (1 - g.theta);
  return {SymTridiagonal<Scalar>::constant(size, 1 + 2 * implicit, -implicit),
          SymTridiagonal<Scalar>::constant(size, 1 - 2 * explicit_part,
                                           explicit_part)};
}

/// Obstacle g(x_i, tau_j) at all nodes i = 0..n.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> payoff_nodes(
    const Grid<Scalar>& g, int j, const TransformConstants<Scalar>& c,
    OptionKind kind) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(g.n + 1);
  for (int i = 0; i <= g.n; ++i)
    out(i) = transformed_payoff(g.node(i), g.time(j), c, kind);
  return out;
}

/// Obstacle at the interior nodes 1..n-1.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> payoff_interior(
    const Grid<Scalar>& g, int j, const TransformConstants<Scalar>& c,
    OptionKind kind) {
  return payoff_nodes(g, j, c, kind).segment(1, g.n - 1);
}

/// Dirichlet contribution b^{j+1} for the step tau_j -> tau_{j+1}.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> boundary_vector(
    const Grid<Scalar>& g, int j, const TransformConstants<Scalar>& c,
    OptionKind kind) {
  if (j < 0 || j >= g.m)
    throw std::out_of_range("boundary_vector: time index out of range");
  const Scalar lo = g.lambda * (1 - g.theta);
  const Scalar hi = g.lambda * g.theta;
  const Scalar t0 = g.time(j);
  const Scalar t1 = g.time(j + 1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> bvec =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(g.interior_size());
  bvec(0) += lo * transformed_payoff(g.a, t0, c, kind) +
             hi * transformed_payoff(g.a, t1, c, kind);
  bvec(bvec.size() - 1) += lo * transformed_payoff(g.b, t0, c, kind) +
                           hi * transformed_payoff(g.b, t1, c, kind);
  return bvec;
}

/// LCP  A z + q >= 0, z >= 0, z'(A z + q) = 0  with z = u^{j+1} - g^{j+1}.
template <typename Scalar = double>
struct TimeStepLcp {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> q;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> g_next;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> r_prev;
};

template <typename Scalar, typename D1, typename D2, typename D3>
TimeStepLcp<Scalar> assemble_lcp(const DiscreteOperator<Scalar>& ops,
                                 const Eigen::MatrixBase<D1>& u_prev,
                                 const Eigen::MatrixBase<D2>& bvec,
                                 const Eigen::MatrixBase<D3>& g_next) {
  const Eigen::Index size = ops.A.size();
  if (u_prev.size() != size || bvec.size() != size || g_next.size() != size)
    throw std::invalid_argument("assemble_lcp: dimension mismatch");
  TimeStepLcp<Scalar> lcp;
  lcp.g_next = g_next;
  lcp.r_prev = ops.B * u_prev + bvec;
  lcp.q = ops.A * g_next - lcp.r_prev;
  return lcp;
}

}  // namespace mmslcp

#endif  // MMSLCP_DISCRETIZATION_HPP
