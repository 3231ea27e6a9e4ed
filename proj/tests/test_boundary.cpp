#include "doctest.h"
#include "ikg/boundary.hpp"
#include "ikg/ik_model.hpp"
#include "oracles.hpp"

using namespace ikg;

namespace {

// Reflection equation assembled with the test-side swap and Kronecker product.
double re_independent(cplx u1, cplx u2, cplx eta, const BoundaryParams& p) {
  const oracle::Mat i3 = oracle::Mat::Identity(3, 3), p9 = oracle::swap9();
  const oracle::Mat k1 = oracle::kron(Kminus(u1, eta, p), i3), k2 = oracle::kron(i3, Kminus(u2, eta, p));
  const oracle::Mat lhs = build_R(u1 - u2, eta) * k1 * p9 * build_R(u1 + u2, eta) * p9 * k2;
  const oracle::Mat rhs = k2 * build_R(u1 + u2, eta) * k1 * p9 * build_R(u1 - u2, eta) * p9;
  return oracle::max_abs(lhs - rhs) / std::max({1.0, oracle::max_abs(lhs), oracle::max_abs(rhs)});
}

}  // namespace

TEST_SUITE("boundary") {
  TEST_CASE("K-minus special values") {
    const cplx eta(0.2, 0.1), eps(0.5, -0.3), sigma(0.12, 0.4);
    CHECK(max_entry_diff(build_Kminus(0.0, eta, eps, sigma), (1.0 + 2.0 * std::exp(-eps) * std::sinh(eta)) * identity(3)) <
          1e-15);
    CHECK(max_entry_diff(build_Kminus(cplx(0.7, 0.3), eta, 50.0, sigma), identity(3)) < 1e-15);
    CHECK(max_entry_diff(build_Kminus(cplx(0.7, 0.3), 0.0, eps, sigma), Kminus0(cplx(0.7, 0.3), eps, sigma)) < 1e-14);
  }

  TEST_CASE("K-minus eta=0 spin form written out") {
    const auto& s = spin1_ops();
    const cplx u(0.4, -0.2), eps(0.5, 0.0), sigma(0.12, 0.0);
    const ComplexMatrix expect = std::exp(-sigma - eps) * std::sinh(u) * s.sm * s.sm +
                                 std::exp(sigma - eps) * std::sinh(u) * s.sp * s.sp +
                                 2.0 * std::exp(-eps) * std::sinh(u) * s.sz * s.sz +
                                 (1.0 - 2.0 * std::exp(-eps) * std::sinh(u)) * identity(3);
    CHECK(max_entry_diff(Kminus0(u, eps, sigma), expect) < 1e-15);
    CHECK(max_entry_diff(Kplus0(u, eps, sigma), 2.0 * identity(3) - expect) < 1e-15);
  }

  TEST_CASE("K-plus special values") {
    CHECK(max_entry_diff(build_M(0.2), ComplexMatrix(Eigen::Vector3cd(std::exp(0.4), 1.0, std::exp(-0.4)).asDiagonal())) <
          1e-15);
    const cplx eta(0.15, 0.05);
    CHECK(max_entry_diff(build_Kplus(cplx(0.3, 0.8), eta, 50.0, 0.4), build_M(eta)) < 1e-15);
    const cplx eps(0.5, 0.1), sigma_p(0.3, -0.2), u(-0.6, 0.25);
    CHECK(max_entry_diff(build_Kplus(u, 0.0, eps + kI * kPi, sigma_p), Kplus0(u, eps, sigma_p)) < 1e-14);
    CHECK(max_entry_diff(build_Kplus_exp(u, 0.0, -std::exp(-eps), sigma_p), Kplus0(u, eps, sigma_p)) < 1e-14);
  }

  TEST_CASE("reflection and dual reflection equations") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const BoundaryParams bp = generic_boundary(oracle::random_cplx(rng, 1.0), oracle::random_cplx(rng, 1.0),
                                                 oracle::random_cplx(rng, 1.0), oracle::random_cplx(rng, 1.0));
      const cplx u1 = oracle::random_cplx(rng, 1.5), u2 = oracle::random_cplx(rng, 1.5), eta = oracle::random_cplx(rng, 1.0);
      const auto r = verify_reflection(u1, u2, eta, bp);
      CHECK(r.re < 1e-10);
      CHECK(r.dual_re < 1e-10);
      CHECK(re_independent(u1, u2, eta, bp) < 1e-10);
      const auto same = verify_reflection(u1, u1, eta, bp);
      CHECK(same.re < 1e-10);
      CHECK(same.dual_re < 1e-10);
    }
    const auto diag = verify_reflection(cplx(0.3, 0.2), cplx(-0.5, 0.1), 0.2, diagonal_boundary());
    CHECK(diag.re < 1e-12);
    CHECK(diag.dual_re < 1e-12);
  }

  TEST_CASE("constraints") {
    const BoundaryParams c = apply_constraints(0.5, 0.12, -4.0, 0.01);
    CHECK(c.kind == BoundaryKind::ConstrainedNonDiagonal);
    CHECK(std::abs(c.sigma_prime - 0.08) < 1e-15);
    CHECK(std::abs(1.0 / c.exp_neg_eps_prime + std::exp(0.5)) < 1e-14);
    REQUIRE(c.k.has_value());
    CHECK(*c.k == 1);
    CHECK(std::abs(std::exp(c.sigma_prime - c.sigma) - std::exp(-4.0 * 0.01)) < 1e-15);
    CHECK_FALSE(apply_constraints(0.5, 0.12, -3.0, 0.01).k.has_value());
    const BoundaryParams moved = boundary_at(c, 0.03);
    CHECK(std::abs(moved.sigma_prime - (0.12 - 4.0 * 0.03)) < 1e-15);
    // The constrained pair also satisfies both reflection equations.
    const auto r = verify_reflection(cplx(0.2, 0.4), cplx(-0.7, 0.1), 0.01, c);
    CHECK(r.re < 1e-10);
    CHECK(r.dual_re < 1e-10);
  }

  TEST_CASE("w function") {
    CHECK(w_theta(0.0, 0.5) == cplx(1.0));
    CHECK(std::abs(w_theta(0.7, 50.0) - 1.0) < 1e-15);
    for (int i = 0; i < 50; ++i) {
      const cplx th(-1.0 + 0.04 * i, 0.3 - 0.01 * i);
      CHECK(std::abs(w_theta(th, cplx(0.5, 0.1)) - w_theta(-th, cplx(0.5, 0.1))) < 1e-14);
    }
    // w = 0 at sinh(theta) = e^{eps}/2.
    const cplx root = std::asinh(std::exp(cplx(0.5)) / 2.0);
    CHECK(w_is_singular(root, 0.5));
    CHECK_FALSE(w_is_singular(0.4, 0.5));
  }

  TEST_CASE("K-product tends to w times identity") {
    const double theta = 0.4;
    const cplx eps = 0.5, sigma = 0.12, sigma_bar = -4.0;
    double prev = 0.0;
    for (double eta : {1e-2, 1e-3, 1e-4}) {
      const BoundaryParams c = apply_constraints(eps, sigma, sigma_bar, eta);
      const ComplexMatrix prod = Kminus(theta, eta, c) * Kplus(theta, eta, c);
      const double err = max_entry_diff(prod, w_theta(theta, eps) * identity(3));
      CHECK(err / eta < 50.0);
      if (prev > 0.0) CHECK(err < 0.2 * prev);
      prev = err;
    }
    const BoundaryParams c = apply_constraints(eps, sigma, sigma_bar, 1e-6);
    CHECK(max_entry_diff(Kminus(theta, 1e-6, c) * Kplus(theta, 1e-6, c), w_theta(theta, eps) * identity(3)) < 1e-4);
    CHECK(max_entry_diff(Kminus0(theta, eps, sigma) * Kplus0(theta, eps, sigma), w_theta(theta, eps) * identity(3)) <
          1e-14);
  }

  TEST_CASE("diagonal limit") {
    const cplx eta(0.1, 0.05), u(0.3, -0.4);
    const BoundaryParams g = generic_boundary(40.0, 0.3, 40.0, -0.2);
    CHECK(max_entry_diff(Kminus(u, eta, g), identity(3)) < 1e-12);
    CHECK(max_entry_diff(Kplus(u, eta, g), build_M(eta)) < 1e-12);
    CHECK(max_entry_diff(Kminus(u, eta, diagonal_boundary()), identity(3)) == 0.0);
    CHECK(max_entry_diff(Kplus(u, eta, diagonal_boundary()), build_M(eta)) == 0.0);
  }
}
