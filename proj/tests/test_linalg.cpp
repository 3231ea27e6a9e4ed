#include "doctest.h"
#include "ikg/errors.hpp"
#include "ikg/ik_model.hpp"
#include "ikg/linalg.hpp"
#include "oracles.hpp"

using namespace ikg;

TEST_SUITE("linalg") {
  TEST_CASE("kron basics") {
    CHECK(max_entry_diff(kron(identity(3), identity(3)), identity(9)) == 0.0);
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << 1.0, 2.0, cplx(0.0, 3.0);
    const ComplexMatrix k = kron(d, identity(3));
    for (int i = 0; i < 9; ++i) CHECK(k(i, i) == d(i / 3, i / 3));
    CHECK(max_entry(k - ComplexMatrix(k.diagonal().asDiagonal())) == 0.0);
  }

  TEST_CASE("kron against loops and trace factorization") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 5; ++t) {
      const ComplexMatrix a = oracle::random_matrix(3, rng), b = oracle::random_matrix(3, rng);
      CHECK(max_entry_diff(kron(a, b), oracle::kron(a, b)) < 1e-15);
      CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-13);
    }
  }

  TEST_CASE("embed_site") {
    const auto& s = spin1_ops();
    CHECK(max_entry_diff(embed_site(identity(3), 2, 3), identity(27)) == 0.0);
    CHECK(max_entry_diff(embed_site(s.sz, 1, 2), kron(s.sz, identity(3))) == 0.0);
    std::mt19937_64 rng(3);
    const ComplexMatrix a = oracle::random_matrix(3, rng);
    for (int j = 1; j <= 3; ++j) {
      CHECK(std::abs(embed_site(a, j, 3).trace() - a.trace() * 9.0) < 1e-12);
      CHECK(max_entry_diff(embed_site(a, j, 3), oracle::embed_site(a, j, 3)) < 1e-15);
    }
    CHECK_THROWS_AS(embed_site(a, 0, 3), InvalidArgument);
    CHECK_THROWS_AS(embed_site(a, 4, 3), InvalidArgument);
  }

  TEST_CASE("embed_pair") {
    std::mt19937_64 rng(5);
    const ComplexMatrix a = oracle::random_matrix(3, rng), b = oracle::random_matrix(3, rng);
    const ComplexMatrix op = oracle::random_matrix(9, rng);
    for (int j = 1; j <= 3; ++j)
      for (int l = 1; l <= 3; ++l) {
        if (j == l) continue;
        CHECK(max_entry_diff(embed_pair(kron(a, b), j, l, 3), embed_site(a, j, 3) * embed_site(b, l, 3)) < 1e-14);
        CHECK(max_entry_diff(embed_pair(op, j, l, 3), oracle::embed_pair(op, j, l, 3)) < 1e-15);
      }
    CHECK(max_entry_diff(embed_pair(identity(9), 1, 3, 3), identity(27)) == 0.0);
    CHECK(max_entry_diff(embed_pair(swap9(), 1, 2, 2), oracle::swap9()) == 0.0);
    CHECK(max_entry_diff(swap9(), oracle::swap9()) == 0.0);
    CHECK_THROWS_AS(embed_pair(op, 2, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(embed_pair(op, 1, 4, 3), InvalidArgument);
  }

  TEST_CASE("add and apply variants agree with dense products") {
    std::mt19937_64 rng(8);
    const ComplexMatrix op = oracle::random_matrix(9, rng), site = oracle::random_matrix(3, rng);
    const ComplexMatrix x = oracle::random_matrix(27, rng);
    const cplx alpha(0.3, -1.1);
    ComplexMatrix t = x;
    add_pair(t, alpha, op, 3, 1, 3);
    CHECK(max_entry_diff(t, x + alpha * embed_pair(op, 3, 1, 3)) < 1e-14);
    t = x;
    add_site(t, alpha, site, 2, 3);
    CHECK(max_entry_diff(t, x + alpha * embed_site(site, 2, 3)) < 1e-14);
    t = x;
    apply_pair_right(t, op, 2, 3, 3);
    CHECK(max_entry_diff(t, x * embed_pair(op, 2, 3, 3)) < 1e-13);
    t = x;
    apply_site_right(t, site, 1, 3);
    CHECK(max_entry_diff(t, x * embed_site(site, 1, 3)) < 1e-13);
  }

  TEST_CASE("partial trace") {
    std::mt19937_64 rng(2);
    const ComplexMatrix a = oracle::random_matrix(3, rng), b = oracle::random_matrix(9, rng);
    CHECK(max_entry_diff(partial_trace_aux(kron(a, b)), a.trace() * b) < 1e-14);
    CHECK(max_entry_diff(partial_trace_aux(identity(27)), 3.0 * identity(9)) == 0.0);
    const ComplexMatrix m = oracle::random_matrix(27, rng);
    CHECK(std::abs(partial_trace_aux(m).trace() - m.trace()) < 1e-13);
    CHECK(max_entry_diff(partial_trace_aux(m), oracle::partial_trace_first(m)) < 1e-15);
    CHECK_THROWS_AS(partial_trace_aux(ComplexMatrix::Zero(4, 4)), InvalidArgument);
  }

  TEST_CASE("commutator norm") {
    std::mt19937_64 rng(4);
    const ComplexMatrix a = oracle::random_matrix(9, rng);
    CHECK(comm_norm(a, identity(9)) == 0.0);
    CHECK(comm_norm(a, a * a) < 1e-14);
    const auto& s = spin1_ops();
    CHECK(max_entry_diff(s.sz * s.sp - s.sp * s.sz, s.sp) == 0.0);
    CHECK(comm_norm(s.sz, s.sp) > 0.1);
  }

  TEST_CASE("eig clusters degeneracies") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << 1.0, 2.0, 2.0;
    const Spectrum s = eig(d, true);
    REQUIRE(s.levels.size() == 2);
    CHECK(s.levels[0].value == cplx(1.0));
    CHECK(s.levels[0].multiplicity == 1);
    CHECK(std::abs(s.levels[1].value - 2.0) < 1e-15);
    CHECK(s.levels[1].multiplicity == 2);
  }

  TEST_CASE("eig recovers a conjugated diagonal") {
    std::mt19937_64 rng(9);
    const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(oracle::random_matrix(9, rng)).householderQ();
    ComplexVector diag(9);
    diag << -3.0, -1.0, -1.0, 0.5, 2.0, 2.0, 2.0, 4.0, 7.5;
    const ComplexMatrix m = q * diag.asDiagonal() * q.adjoint();
    for (bool hint : {true, false}) {
      const Spectrum s = eig(m, hint);
      REQUIRE(s.dim() == 9);
      for (int i = 0; i < 9; ++i) CHECK(std::abs(s.eigenvalues[i] - diag(i)) < 1e-12);
      REQUIRE(s.levels.size() == 6);
      CHECK(s.levels[1].multiplicity == 2);
      CHECK(s.levels[3].multiplicity == 3);
    }
  }

  TEST_CASE("hermitian hint is checked") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(eig(oracle::random_matrix(4, rng), true), NumericalFailure);
  }

  TEST_CASE("single linkage clustering") {
    const auto levels = cluster_eigenvalues({3.0, 1.0, 1.0 + 5e-8, 1.0 + 1.4e-7, 2.0}, 1e-7);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].multiplicity == 3);
    CHECK(levels[1].multiplicity == 1);
    CHECK(levels[2].multiplicity == 1);
  }
}
