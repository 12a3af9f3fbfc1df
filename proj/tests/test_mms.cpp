#include <doctest.h>

#include <random>

#include "mmslcp/discretization.hpp"
#include "mmslcp/mms.hpp"
#include "mmslcp/oracle.hpp"
#include "mmslcp/validation.hpp"

using namespace mmslcp;
using Eigen::VectorXd;

namespace {

VectorXd vec(std::initializer_list<double> v) {
  VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

const SymTridiagonal<double> scalar_two = SymTridiagonal<double>::constant(1, 2.0, 0.0);
const SymTridiagonal<double> k2 = SymTridiagonal<double>::constant(2, 2.0, -1.0);

/// The first time step LCP of the reference put problem.
struct ReferenceStep {
  Grid<double> grid;
  DiscreteOperator<double> ops;
  TimeStepLcp<double> lcp;
};

ReferenceStep reference_step(int e) {
  const MarketParams<double> p;
  const auto c = compute_transform_constants(p);
  ReferenceStep r{build_grid(c, -1.5, 1.5, e, e, 0.5), {}, {}};
  r.ops = assemble_operators(r.grid);
  r.lcp = assemble_lcp(r.ops, payoff_interior(r.grid, 0, c, p.kind),
                       boundary_vector(r.grid, 0, c, p.kind),
                       payoff_interior(r.grid, 1, c, p.kind));
  return r;
}

}  // namespace

TEST_CASE("scalar modulus iteration") {
  const auto s = Splitting<double>::point_gauss_seidel(scalar_two, vec({1.0}));
  const VectorXd q = vec({-4.0});
  const VectorXd y1 = mms_step(s, 2.0, q, VectorXd::Zero(1).eval());
  CHECK(y1(0) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));

  MmsConfig<double> cfg;
  cfg.omega_scale = 0.5;
  cfg.tol = 1e-12;
  const auto sol = solve_lcp(s, cfg, q, VectorXd::Zero(1).eval());
  CHECK(sol.report.converged);
  CHECK(sol.y(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sol.z(0) == doctest::Approx(2.0).epsilon(1e-12));

  const VectorXd fixed = vec({2.0});
  CHECK(std::abs(mms_step(s, 2.0, q, fixed)(0) - 2.0) < 1e-12);
  CHECK(mms_residual(scalar_two, vec({1.0}), 2.0, q, fixed) < 1e-14);
}

TEST_CASE("residual special cases") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const auto lcp = random_tridiagonal_lcp(rng, 9);
  const VectorXd omega = 0.5 * lcp.a.diagonal();
  const double eta = 2.0;

  CHECK(mms_residual(lcp.a, omega, eta, lcp.q, VectorXd::Zero(9).eval()) ==
        doctest::Approx((eta * lcp.q).lpNorm<Eigen::Infinity>()));

  VectorXd y(9);
  for (auto& v : y) v = -std::abs(d(rng));
  // |y| + y = 0, so only Omega (y - |y|) = 2 Omega y survives.
  const VectorXd dense = 2.0 * omega.asDiagonal() * y + eta * lcp.q;
  CHECK(mms_residual(lcp.a, omega, eta, lcp.q, y) ==
        doctest::Approx(dense.lpNorm<Eigen::Infinity>()).epsilon(1e-14));

  VectorXd general(9);
  for (auto& v : general) v = d(rng);
  const VectorXd ay = general.cwiseAbs();
  const VectorXd full = lcp.a.to_dense() * (ay + general) +
                        omega.asDiagonal() * (general - ay) + eta * lcp.q;
  CHECK(mms_residual(lcp.a, omega, eta, lcp.q, general) ==
        doctest::Approx(full.lpNorm<Eigen::Infinity>()).epsilon(1e-14));
}

TEST_CASE("nonnegative q gives the zero solution") {
  std::mt19937_64 rng(3);
  auto lcp = random_tridiagonal_lcp(rng, 10);
  lcp.q = lcp.q.cwiseAbs();
  const VectorXd omega = 0.5 * lcp.a.diagonal();
  for (const auto& s : {Splitting<double>::point_gauss_seidel(lcp.a, omega),
                        Splitting<double>::schwarz_two_block(lcp.a, omega, 5)}) {
    const auto sol = solve_lcp(s, MmsConfig<double>{}, lcp.q, VectorXd::Zero(10).eval());
    CHECK(sol.report.converged);
    CHECK(sol.z.isZero());
  }
}

TEST_CASE("2x2 LCP with one active constraint") {
  const VectorXd q = vec({-1.0, 1.0});
  MmsConfig<double> cfg;
  cfg.tol = 1e-12;
  const VectorXd omega = cfg.omega_for(k2);
  for (const auto& s : {Splitting<double>::point_gauss_seidel(k2, omega),
                        Splitting<double>::schwarz_two_block(k2, omega, 1)}) {
    for (const auto& policy : {AccelPolicy::none(), AccelPolicy::every(), AccelPolicy::cycle(3)}) {
      const auto sol = solve_lcp(s, cfg, q, VectorXd::Zero(2).eval(), policy);
      CHECK(sol.report.converged);
      CHECK(sol.z(0) == doctest::Approx(0.5).epsilon(1e-10));
      CHECK(std::abs(sol.z(1)) < 1e-12);
      const VectorXd w = k2 * sol.z + q;
      CHECK(std::abs(w(0)) < 1e-10);
      CHECK(w(1) == doctest::Approx(0.5).epsilon(1e-10));
    }
  }
}

TEST_CASE("y <-> z maps") {
  const VectorXd z = recover_z(vec({-1.0, 2.0}), 2.0);
  CHECK(z(0) == 0.0);
  CHECK(z(1) == 2.0);
  CHECK(recover_z(vec({0.5, 3.0}), 4.0).isApprox(vec({0.25, 1.5})));

  CHECK(y_from_z(vec({2.0}), scalar_two, vec({1.0}), 2.0, vec({-4.0}))(0) ==
        doctest::Approx(2.0));

  std::mt19937_64 rng(4);
  auto lcp = random_tridiagonal_lcp(rng, 6);
  lcp.q = lcp.q.cwiseAbs();
  const VectorXd omega = 0.5 * lcp.a.diagonal();
  const VectorXd y0 = y_from_z(VectorXd::Zero(6).eval(), lcp.a, omega, 2.0, lcp.q);
  CHECK((y0.array() <= 0.0).all());
  CHECK(y0.isApprox(-(2.0 * lcp.q.cwiseQuotient(omega)) / 2.0));
}

TEST_CASE("oracle solutions map to fixed points") {
  std::mt19937_64 rng(5);
  MmsConfig<double> cfg;
  cfg.tol = 1e-12;
  for (int k = 0; k < 50; ++k) {
    const auto lcp = random_tridiagonal_lcp(rng, 1 + k % 10);
    const VectorXd omega = cfg.omega_for(lcp.a);
    const VectorXd z = oracle::solve_lcp_enumeration<double>(lcp.a.to_dense(), lcp.q);
    const VectorXd y = y_from_z(z, lcp.a, omega, cfg.eta, lcp.q);
    CHECK(mms_residual(lcp.a, omega, cfg.eta, lcp.q, y) < 1e-10);
    CHECK((recover_z(y, cfg.eta) - z).lpNorm<Eigen::Infinity>() < 1e-12);

    const auto s = Splitting<double>::point_gauss_seidel(lcp.a, omega);
    const auto sol = solve_lcp(s, cfg, lcp.q, VectorXd::Zero(lcp.q.size()).eval());
    CHECK((y_from_z(recover_z(sol.y, cfg.eta), lcp.a, omega, cfg.eta, lcp.q) - sol.y)
              .lpNorm<Eigen::Infinity>() < 1e-8);
  }
}

TEST_CASE("already converged start takes no iterations") {
  const VectorXd q = vec({-1.0, 1.0});
  MmsConfig<double> cfg;
  const VectorXd omega = cfg.omega_for(k2);
  const VectorXd y_star = y_from_z(vec({0.5, 0.0}), k2, omega, cfg.eta, q);
  const auto s = Splitting<double>::point_gauss_seidel(k2, omega);
  for (const auto& policy : {AccelPolicy::none(), AccelPolicy::every(), AccelPolicy::cycle(15)}) {
    const auto sol = solve_lcp(s, cfg, q, y_star, policy);
    CHECK(sol.report.converged);
    CHECK(sol.report.iterations == 0);
  }
}

TEST_CASE("iteration cap is reported") {
  const auto step = reference_step(4);
  MmsConfig<double> cfg;
  cfg.max_iter = 3;
  const auto s = Splitting<double>::point_gauss_seidel(step.ops.A, cfg.omega_for(step.ops.A));
  const auto sol = solve_lcp(s, cfg, step.lcp.q, VectorXd::Zero(47).eval());
  CHECK_FALSE(sol.report.converged);
  CHECK(sol.report.iterations == 3);
  CHECK(sol.report.final_residual >= cfg.tol);
  CHECK(sol.report.residual_history.size() == 4);
}

TEST_CASE("config validation") {
  MmsConfig<double> cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.eta = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.omega_scale = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.tol = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_iter = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("pricing step: complementarity, dominance, determinism") {
  for (int e : {4, 5}) {
    const auto step = reference_step(e);
    const MmsConfig<double> cfg;
    const VectorXd omega = cfg.omega_for(step.ops.A);
    const Eigen::Index n = step.ops.A.size();
    const auto gs = Splitting<double>::point_gauss_seidel(step.ops.A, omega);
    const auto bgs = Splitting<double>::schwarz_two_block(step.ops.A, omega, step.grid.origin_index);
    const auto one = Splitting<double>::schwarz_two_block(step.ops.A, omega, n);

    const auto r_gs = solve_lcp(gs, cfg, step.lcp.q, VectorXd::Zero(n).eval());
    const auto r_bgs = solve_lcp(bgs, cfg, step.lcp.q, VectorXd::Zero(n).eval());
    const auto r_one = solve_lcp(one, cfg, step.lcp.q, VectorXd::Zero(n).eval());
    REQUIRE(r_gs.report.converged);
    REQUIRE(r_bgs.report.converged);
    REQUIRE(r_one.report.converged);
    CHECK(r_bgs.report.iterations <= r_gs.report.iterations);
    CHECK(r_one.report.iterations <= r_gs.report.iterations);

    for (const auto* r : {&r_gs, &r_bgs, &r_one}) {
      const VectorXd w = step.ops.A * r->z + step.lcp.q;
      CHECK(r->z.minCoeff() >= -1e-12);
      CHECK(w.minCoeff() >= -10 * cfg.tol);
      CHECK(std::abs(r->z.dot(w)) <= 10 * cfg.tol * r->z.lpNorm<Eigen::Infinity>());
    }

    const auto again = solve_lcp(bgs, cfg, step.lcp.q, VectorXd::Zero(n).eval());
    CHECK(again.y == r_bgs.y);
    CHECK(again.report.residual_history == r_bgs.report.residual_history);
  }
}

TEST_CASE("MMS agrees with enumeration on random LCPs") {
  std::mt19937_64 rng(6);
  MmsConfig<double> cfg;
  cfg.tol = 1e-10;
  for (int k = 0; k < 60; ++k) {
    const Eigen::Index n = 1 + k % 12;
    const auto lcp = random_tridiagonal_lcp(rng, n);
    const VectorXd exact = oracle::solve_lcp_enumeration<double>(lcp.a.to_dense(), lcp.q);
    const VectorXd omega = cfg.omega_for(lcp.a);
    for (const auto& s : {Splitting<double>::point_gauss_seidel(lcp.a, omega),
                          Splitting<double>::schwarz_two_block(lcp.a, omega, std::max<Eigen::Index>(1, n / 2))}) {
      const auto sol = solve_lcp(s, cfg, lcp.q, VectorXd::Zero(n).eval());
      REQUIRE(sol.report.converged);
      CHECK((sol.z - exact).lpNorm<Eigen::Infinity>() <= 1e-7);
    }
  }
}
