#include <map>

#include "doctest.h"
#include "ikg/errors.hpp"
#include "ikg/gaudin.hpp"
#include "ikg/ik_model.hpp"
#include "oracles.hpp"

using namespace ikg;

namespace {

GaudinParams make(GaudinKind kind, std::vector<cplx> theta) {
  GaudinParams p;
  p.kind = kind;
  p.theta = std::move(theta);
  if (kind == GaudinKind::Constrained) {
    p.eps = 0.5;
    p.sigma = 0.12;
    p.sigma_bar = -4.0;
  }
  return p;
}

const GaudinParams table1 = make(GaudinKind::Periodic, {cplx(0, -0.40), cplx(0, 0.18), cplx(0, 0.75)});
const GaudinParams table2 = make(GaudinKind::Constrained, {-0.40, 0.18, 0.67});
const GaudinParams table3 = make(GaudinKind::Diagonal, {0.40, 0.18, 1.20});

std::map<int, int> degeneracy_histogram(const Spectrum& s) {
  std::map<int, int> h;
  for (const Level& l : s.levels) ++h[l.multiplicity];
  return h;
}

}  // namespace

TEST_SUITE("gaudin") {
  TEST_CASE("periodic operator against an explicit sum") {
    std::mt19937_64 rng(31);
    std::vector<cplx> theta;
    for (int k = 0; k < 3; ++k) theta.push_back(oracle::random_cplx(rng, 1.0));
    const GaudinParams p = make(GaudinKind::Periodic, theta);
    for (int j = 1; j <= 3; ++j) {
      oracle::Mat h = oracle::Mat::Zero(27, 27);
      for (int l = 1; l <= 3; ++l)
        if (l != j) h += oracle::embed_pair(build_classical_r(theta[j - 1] - theta[l - 1]), j, l, 3) / std::sinh(theta[j - 1] - theta[l - 1]);
      CHECK(max_entry_diff(build_periodic_gaudin(j, p), h) < 1e-13);
    }
  }

  TEST_CASE("single-site chains") {
    CHECK(max_entry(build_gaudin(1, make(GaudinKind::Periodic, {cplx(0.2, 0.3)}))) == 0.0);
    const cplx t(0.7, 0.1);
    const ComplexMatrix h = build_gaudin(1, make(GaudinKind::Diagonal, {t}));
    CHECK(max_entry_diff(h, (-6.0 / std::tanh(t) - std::tanh(t)) * identity(3)) < 1e-14);
  }

  TEST_CASE("analytic operators match the finite-difference oracle") {
    const GaudinParams cases[] = {make(GaudinKind::Periodic, {cplx(0, 0.3), cplx(0, 0.9)}),
                                  make(GaudinKind::Constrained, {0.4, 1.2}), make(GaudinKind::Diagonal, {0.4, 1.2}),
                                  table1, table2, table3};
    for (const auto& p : cases)
      for (int j = 1; j <= p.n(); ++j) {
        CAPTURE(to_string(p.kind));
        CAPTURE(j);
        CHECK(max_entry_diff(fd_gaudin_oracle(j, chain_spec(p, 0.0)), build_gaudin(j, p)) < 1e-6);
      }
  }

  TEST_CASE("large eps turns the constrained family diagonal") {
    GaudinParams c = make(GaudinKind::Constrained, {0.40, 0.18, 1.20});
    c.eps = 40.0;
    for (int j = 1; j <= 3; ++j) CHECK(max_entry_diff(build_gaudin(j, c), build_gaudin(j, table3)) < 1e-10);
  }

  TEST_CASE("families commute") {
    for (const auto& p : {table1, table2, table3}) {
      const auto fam = gaudin_family(p);
      REQUIRE(fam->operators.size() == 3);
      const double tol = p.kind == GaudinKind::Constrained ? 1e-8 : 1e-9;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) CHECK(comm_norm(fam->operators[a], fam->operators[b]) < tol);
    }
  }

  TEST_CASE("family cache returns the same object for equal parameters") {
    const auto a = gaudin_family(table3), b = gaudin_family(make(GaudinKind::Diagonal, {0.40, 0.18, 1.20}));
    CHECK(a.get() == b.get());
    GaudinParams moved = table3;
    moved.theta[0] = std::nextafter(0.40, 1.0);
    CHECK(gaudin_family(moved).get() != a.get());
  }

  TEST_CASE("sector decomposition") {
    const auto s3 = sector_decomposition(3);
    const std::map<int, std::size_t> sizes{{3, 1}, {2, 3}, {1, 6}, {0, 7}, {-1, 6}, {-2, 3}, {-3, 1}};
    std::size_t total = 0;
    for (const auto& [sz, idx] : s3.blocks) {
      CHECK(idx.size() == sizes.at(sz));
      total += idx.size();
    }
    CHECK(total == 27);
    const auto s1 = sector_decomposition(1);
    CHECK(s1.blocks.size() == 3);
    for (const auto& [sz, idx] : s1.blocks) CHECK(idx.size() == 1);
    CHECK(max_entry_diff(s3.total_sz, embed_site(spin1_ops().sz, 1, 3) + embed_site(spin1_ops().sz, 2, 3) +
                                          embed_site(spin1_ops().sz, 3, 3)) == 0.0);
    CHECK(comm_norm(s3.total_sz, build_gaudin(2, table1)) < 1e-10);
    CHECK(comm_norm(s3.total_sz, build_gaudin(1, table3)) < 1e-10);
  }

  TEST_CASE("table 1 spectrum") {
    const ComplexMatrix ih = kI * build_gaudin(2, table1);
    CHECK(hermiticity_defect(ih) < 1e-10);
    const auto ev = oracle::eigenvalues(ih);
    CHECK(oracle::count_near(ev, -12.9430, 5e-4) == 1);
    for (cplx z : ev) CHECK(std::abs(z.imag()) < 1e-10);
    const Spectrum s = exact_spectrum(ih, true);
    CHECK(s.levels.size() == 17);
    const auto hist = degeneracy_histogram(s);
    CHECK(hist.at(1) == 7);
    CHECK(hist.at(2) == 10);
  }

  TEST_CASE("table 2 spectrum") {
    const ComplexMatrix h = build_gaudin(1, table2);
    const auto ev = oracle::eigenvalues(h);
    CHECK(oracle::count_near(ev, -17.5222, 5e-4) == 1);
    CHECK(oracle::count_near(ev, 52.8331, 5e-4) == 1);
    const Spectrum s = exact_spectrum(h, false);
    CHECK(s.levels.size() == 17);
    const auto hist = degeneracy_histogram(s);
    CHECK(hist.at(1) == 7);
    CHECK(hist.at(2) == 10);
  }

  TEST_CASE("table 3 spectrum") {
    const ComplexMatrix h = build_gaudin(1, table3);
    const auto ev = oracle::eigenvalues(h);
    CHECK(oracle::count_near(ev, -44.7405, 5e-4) == 5);
    CHECK(oracle::count_near(ev, -41.2908, 5e-4) == 7);
    const Spectrum s = exact_spectrum(h, false);
    REQUIRE(s.levels.size() == 7);
    const int expect[] = {5, 3, 7, 3, 1, 5, 3};
    for (int i = 0; i < 7; ++i) CHECK(s.levels[i].multiplicity == expect[i]);
  }

  TEST_CASE("singular configurations are rejected") {
    CHECK_THROWS_AS(build_gaudin(1, make(GaudinKind::Periodic, {0.3, 0.3})), SingularConfiguration);
    CHECK_THROWS_AS(build_gaudin(1, make(GaudinKind::Diagonal, {0.3, -0.3})), SingularConfiguration);
    CHECK_THROWS_AS(build_gaudin(1, make(GaudinKind::Diagonal, {0.0, 0.5})), SingularConfiguration);
    const cplx w_root = std::asinh(std::exp(cplx(0.5)) / 2.0);
    CHECK_THROWS_AS(build_gaudin(1, make(GaudinKind::Constrained, {w_root, 0.3})), SingularConfiguration);
    CHECK_THROWS_AS(build_gaudin(4, table1), InvalidArgument);
    CHECK_THROWS_AS(gaudin_kind_from_string("twisted"), InvalidArgument);
    CHECK(gaudin_kind_from_string("diagonal") == GaudinKind::Diagonal);
  }
}
