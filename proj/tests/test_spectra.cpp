#include "doctest.h"
#include "ikg/errors.hpp"
#include "ikg/serialization.hpp"
#include "ikg/spectra.hpp"
#include "oracles.hpp"

using namespace ikg;

namespace {

std::vector<RootSet> printed_solutions(const TableSpec& t) {
  std::vector<RootSet> out;
  for (const auto& row : t.rows) {
    std::vector<cplx> x = row.roots;
    REQUIRE(newton_polish(t.params, x, SolverOptions{}));
    out.push_back(canonicalize(RootSet{t.params.kind, static_cast<int>(x.size()), x, 0.0, false}));
  }
  return out;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("shipped tables") {
    const int rows[] = {17, 17, 7};
    for (int id : {1, 2, 3}) {
      const TableSpec& t = table_spec(id);
      CHECK(t.id == id);
      CHECK(static_cast<int>(t.rows.size()) == rows[id - 1]);
      int sum = 0;
      for (const auto& r : t.rows) sum += r.degeneracy;
      CHECK(sum == 27);
    }
    CHECK(table_spec(1).site == 2);
    CHECK(table_spec(1).rotation == kI);
    CHECK(table_spec(2).admissible_m == std::vector<int>{2, 3});
    CHECK(table_spec(2).k == 1);
    CHECK_THROWS_AS(table_spec(4), InvalidArgument);
    CHECK_THROWS_AS(parse_table_spec("{\"id\": 1}"), InvalidArgument);
  }

  TEST_CASE("energy rotation") {
    CHECK(energy_rotation(table_spec(1).params) == kI);
    CHECK(energy_rotation(table_spec(2).params) == cplx(1.0));
    GaudinParams p = table_spec(1).params;
    p.theta[0] += 0.1;
    CHECK(energy_rotation(p) == cplx(1.0));
  }

  TEST_CASE("full coverage from the printed roots") {
    const TableSpec& t = table_spec(1);
    const SpectrumReport r = match_spectrum(t.params, printed_solutions(t), 2);
    CHECK(r.coverage == doctest::Approx(1.0));
    CHECK(r.levels.size() == 17);
    CHECK(r.unmatched_ed_levels.empty());
    CHECK(r.ambiguous.empty());
    for (const auto& l : r.levels) CHECK(l.abs_err <= r.tol);
  }

  TEST_CASE("vacuum only") {
    const TableSpec& t = table_spec(3);
    const SpectrumReport r = match_spectrum(t.params, {RootSet{GaudinKind::Diagonal, 0, {}, 0.0, true}}, 1);
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].degeneracy == 7);
    CHECK(r.coverage == doctest::Approx(7.0 / 27.0));
    CHECK(match_spectrum(t.params, {}, 1).coverage == 0.0);
  }

  TEST_CASE("perturbed root is not matched") {
    const TableSpec& t = table_spec(3);
    auto sols = printed_solutions(t);
    sols[0].roots[0] += 0.1;
    const SpectrumReport r = match_spectrum(t.params, sols, 1);
    CHECK(r.coverage < 1.0);
    CHECK(r.unmatched_solutions.size() == 1);
    CHECK(r.unmatched_ed_levels.size() == 1);
  }

  TEST_CASE("ambiguous matches are surfaced") {
    const TableSpec& t = table_spec(1);
    const SpectrumReport r = match_spectrum(t.params, printed_solutions(t), 2, 1e-2);
    CHECK_FALSE(r.ambiguous.empty());
    for (const auto& a : r.ambiguous) CHECK(a.candidates.size() >= 2);
  }

  TEST_CASE("soundness over every site") {
    const TableSpec& t = table_spec(2);
    for (const auto& rs : printed_solutions(t)) CHECK(soundness_error(t.params, rs) < 1e-6);
    RootSet bogus{GaudinKind::Constrained, 2, {0.3, 2.0}, 0.0, false};
    CHECK(soundness_error(t.params, bogus) > 1e-3);
  }

  TEST_CASE("reproduce table 3") {
    const ReproduceReport r = reproduce_table(3, ReproduceOptions{});
    CHECK(r.passed);
    CHECK(r.spectrum.coverage == doctest::Approx(1.0));
    CHECK(r.printed_degeneracy_sum == 27);
    for (const auto& row : r.rows) CHECK(row.status == RowStatus::Found);
    const auto vac = std::find_if(r.rows.begin(), r.rows.end(), [](const RowResult& x) { return x.expected.roots.empty(); });
    REQUIRE(vac != r.rows.end());
    CHECK(vac->ed_degeneracy == 7);
    CHECK(std::abs(vac->energy - (-41.2908)) < 5e-4);
  }

  TEST_CASE("a wrong printed row is contradicted, a missing one exhausts the budget") {
    TableSpec t = table_spec(3);
    t.rows[0].energy += 1.0;
    ReproduceOptions opt;
    opt.starts = 50;
    opt.max_starts = 100;
    const ReproduceReport r = reproduce_table(t, opt);
    CHECK_FALSE(r.passed);
    CHECK(r.rows[0].status == RowStatus::Contradicted);

    TableSpec far = table_spec(3);
    far.rows[0].roots = {cplx(7.0, 0.0)};
    const ReproduceReport s = reproduce_table(far, opt);
    CHECK_FALSE(s.passed);
    CHECK(s.rows[0].status != RowStatus::Found);
  }
}

TEST_SUITE("serialization") {
  TEST_CASE("complex literals") {
    CHECK(parse_complex("0.4") == cplx(0.4, 0.0));
    CHECK(parse_complex("-0.40i") == cplx(0.0, -0.40));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("0.1+0.2i") == cplx(0.1, 0.2));
    CHECK(parse_complex("1e-3-2i") == cplx(1e-3, -2.0));
    CHECK(parse_complex(" 2.5e+1 ") == cplx(25.0, 0.0));
    CHECK(parse_complex("0.25-1e-2j") == cplx(0.25, -1e-2));
    for (const char* bad : {"", "abc", "0.1+", "+", "1..2", "0.4x", "i0.3"}) CHECK_THROWS_AS(parse_complex(bad), InvalidArgument);
    const auto list = parse_complex_list("-0.40i,0.18i,0.75i");
    REQUIRE(list.size() == 3);
    CHECK(list[2] == cplx(0.0, 0.75));
    CHECK_THROWS_AS(parse_complex_list("0.1,,0.2"), InvalidArgument);
  }

  TEST_CASE("round trips are lossless") {
    std::mt19937_64 rng(3);
    const ComplexMatrix m = oracle::random_matrix(9, rng);
    CHECK(max_entry_diff(matrix_from_json(Json::parse(dump(matrix_to_json(m)))), m) == 0.0);
    const GaudinParams p = table_spec(2).params;
    const GaudinParams q = params_from_json(Json::parse(dump(params_to_json(p))));
    CHECK(q.kind == p.kind);
    CHECK(q.theta == p.theta);
    CHECK(q.eps == p.eps);
    CHECK(q.sigma_bar == p.sigma_bar);
    RootSet rs{GaudinKind::Constrained, 2, {cplx(0.1573, 1e-17), cplx(1.0 / 3.0, -2.0)}, 3e-13, true};
    const RootSet back = rootset_from_json(Json::parse(dump(rootset_to_json(rs))));
    CHECK(back.roots == rs.roots);
    CHECK(back.m == 2);
    CHECK(back.residual == rs.residual);
  }

  TEST_CASE("schema shapes") {
    const Json rs = rootset_to_json(RootSet{GaudinKind::Diagonal, 1, {1.5573}, 0.0, true});
    CHECK(rs.at("kind") == "diagonal");
    CHECK(rs.at("M") == 1);
    CHECK(rs.at("roots").at(0).size() == 2);
    const Json mj = matrix_to_json(identity(3));
    CHECK(mj.at("dim") == 3);
    CHECK(mj.at("entries").size() == 9);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"dim\": 2, \"entries\": [[1,0]]}")), InvalidArgument);
    CHECK_THROWS_AS(rootset_from_json(Json::parse("{\"kind\": \"diagonal\", \"M\": 2, \"roots\": [[1,0]]}")), InvalidArgument);
    CHECK_THROWS_AS(params_from_json(Json::parse("{\"kind\": \"twisted\", \"theta\": []}")), InvalidArgument);
  }

  TEST_CASE("report output is deterministic") {
    const TableSpec& t = table_spec(3);
    const auto sols = printed_solutions(t);
    const std::string a = dump(report_to_json(match_spectrum(t.params, sols, 1)));
    const std::string b = dump(report_to_json(match_spectrum(t.params, sols, 1)));
    CHECK(a == b);
    const Json j = Json::parse(a);
    CHECK(j.at("coverage") == 1.0);
    CHECK(j.at("levels").size() == 7);
    const std::string csv = levels_csv(match_spectrum(t.params, sols, 1));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  }
}
