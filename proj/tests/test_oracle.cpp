#include <doctest.h>

#include <random>

#include "mmslcp/discretization.hpp"
#include "mmslcp/mms.hpp"
#include "mmslcp/oracle.hpp"
#include "mmslcp/validation.hpp"

using namespace mmslcp;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("enumeration on tiny problems") {
  CHECK(oracle::solve_lcp_enumeration<double>(MatrixXd::Constant(1, 1, 2.0),
                                              VectorXd::Constant(1, -4.0))(0) ==
        doctest::Approx(2.0));

  MatrixXd k2(2, 2);
  k2 << 2, -1, -1, 2;
  const VectorXd z = oracle::solve_lcp_enumeration<double>(k2, VectorXd((VectorXd(2) << -1, 1).finished()));
  CHECK(z(0) == doctest::Approx(0.5));
  CHECK(z(1) == 0.0);

  CHECK(oracle::solve_lcp_enumeration<double>(k2, VectorXd::Ones(2).eval()).isZero());
  CHECK_THROWS_AS(oracle::solve_lcp_enumeration<double>(MatrixXd::Identity(21, 21),
                                                        VectorXd::Ones(21).eval()),
                  std::invalid_argument);
}

TEST_CASE("PSOR") {
  const auto k2 = SymTridiagonal<double>::constant(2, 2.0, -1.0);
  CHECK(oracle::solve_lcp_psor<double>(k2, VectorXd::Ones(2).eval()).isZero());
  CHECK_THROWS_AS(oracle::solve_lcp_psor<double>(k2, VectorXd::Ones(2).eval(), 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::solve_lcp_psor<double>(k2, VectorXd::Ones(2).eval(), 0.0),
                  std::invalid_argument);

  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const auto lcp = random_tridiagonal_lcp(rng, 1 + k % 12);
    const VectorXd exact = oracle::solve_lcp_enumeration<double>(lcp.a.to_dense(), lcp.q);
    const VectorXd psor = oracle::solve_lcp_psor<double>(lcp.a, lcp.q);
    CHECK((psor - exact).lpNorm<Eigen::Infinity>() <= 1e-7);
    CHECK(oracle::verify_lcp<double>(lcp.a, lcp.q, exact) <= 1e-9);
    CHECK(oracle::verify_lcp<double>(lcp.a, lcp.q, psor) <= 1e-9);
  }
}

TEST_CASE("PSOR matches MMS on the first pricing step") {
  const MarketParams<double> p;
  const auto c = compute_transform_constants(p);
  const auto g = build_grid(c, -1.5, 1.5, 4, 4, 0.5);
  const auto ops = assemble_operators(g);
  const auto lcp = assemble_lcp(ops, payoff_interior(g, 0, c, p.kind),
                                boundary_vector(g, 0, c, p.kind), payoff_interior(g, 1, c, p.kind));
  const VectorXd psor = oracle::solve_lcp_psor<double>(ops.A, lcp.q);
  const MmsConfig<double> cfg;
  const auto s = Splitting<double>::point_gauss_seidel(ops.A, cfg.omega_for(ops.A));
  const auto sol = solve_lcp(s, cfg, lcp.q, VectorXd::Zero(g.interior_size()).eval());
  REQUIRE(sol.report.converged);
  CHECK((sol.z - psor).lpNorm<Eigen::Infinity>() <= 1e-5);
}

TEST_CASE("certificate") {
  MatrixXd k2(2, 2);
  k2 << 2, -1, -1, 2;
  const VectorXd q = (VectorXd(2) << -1, 1).finished();
  const VectorXd z = (VectorXd(2) << 0.5, 0).finished();
  CHECK(oracle::verify_lcp<double>(k2, q, z) == 0.0);

  const double eps = 1e-3;
  const VectorXd bad = (VectorXd(2) << 0.5, -eps).finished();
  CHECK(oracle::verify_lcp<double>(k2, q, bad) >= eps);

  // Growing perturbations along a fixed direction give growing certificates.
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto lcp = random_tridiagonal_lcp(rng, 8);
    const VectorXd exact = oracle::solve_lcp_enumeration<double>(lcp.a.to_dense(), lcp.q);
    const VectorXd dir = -VectorXd::Ones(8);
    double last = oracle::verify_lcp<double>(lcp.a, lcp.q, exact);
    for (double scale : {1e-6, 1e-4, 1e-2, 1.0}) {
      const double cert = oracle::verify_lcp<double>(lcp.a, lcp.q, (exact + scale * dir).eval());
      CHECK(cert >= last);
      last = cert;
    }
  }
}
