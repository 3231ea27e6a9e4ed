#include "ikg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "ikg/errors.hpp"

namespace ikg {

cplx energy_rotation(const GaudinParams& p) {
  if (p.kind != GaudinKind::Periodic) return 1.0;
  for (cplx t : p.theta)
    if (t.real() != 0.0) return 1.0;
  return kI;
}

Spectrum gaudin_spectrum(const GaudinParams& p, int j) {
  const auto fam = gaudin_family(p);
  if (j < 1 || j > p.n()) throw InvalidArgument("gaudin_spectrum: site out of range");
  const cplx rot = energy_rotation(p);
  const ComplexMatrix h = rot * fam->operators[j - 1];
  return exact_spectrum(h, rot == kI);
}

SpectrumReport match_spectrum(const GaudinParams& p, const std::vector<RootSet>& rootsets, int j, double tol) {
  SpectrumReport rep;
  rep.params = p;
  rep.site = j;
  rep.rotation = energy_rotation(p);
  rep.tol = tol;
  const Spectrum spec = gaudin_spectrum(p, j);
  std::vector<bool> used(spec.levels.size(), false);

  for (const RootSet& rs : rootsets) {
    cplx e;
    try {
      e = rep.rotation * energy(j, p, rs.roots);
    } catch (const SingularConfiguration&) {
      rep.unmatched_solutions.push_back(rs);
      continue;
    }
    std::size_t best = spec.levels.size();
    double best_err = std::numeric_limits<double>::infinity();
    std::vector<cplx> candidates;
    for (std::size_t i = 0; i < spec.levels.size(); ++i) {
      const double err = std::abs(spec.levels[i].value - e);
      if (err <= tol) candidates.push_back(spec.levels[i].value);
      if (err < best_err) {
        best_err = err;
        best = i;
      }
    }
    if (candidates.empty()) {
      rep.unmatched_solutions.push_back(rs);
      continue;
    }
    if (candidates.size() > 1) rep.ambiguous.push_back({rs, e, candidates});
    used[best] = true;
    rep.levels.push_back({rs, e, spec.levels[best].value, spec.levels[best].multiplicity, best_err});
  }
  std::stable_sort(rep.levels.begin(), rep.levels.end(), [](const LevelRecord& a, const LevelRecord& b) {
    if (a.e_ed.real() != b.e_ed.real()) return a.e_ed.real() < b.e_ed.real();
    return a.e_ed.imag() < b.e_ed.imag();
  });
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    if (used[i])
      rep.matched_degeneracy += spec.levels[i].multiplicity;
    else
      rep.unmatched_ed_levels.push_back(spec.levels[i]);
  }
  rep.coverage = double(rep.matched_degeneracy) / double(spec.dim());
  return rep;
}

double soundness_error(const GaudinParams& p, const RootSet& rs) {
  const cplx rot = energy_rotation(p);
  double worst = 0.0;
  for (int j = 1; j <= p.n(); ++j) {
    const Spectrum s = gaudin_spectrum(p, j);
    const cplx e = rot * energy(j, p, rs.roots);
    double best = std::numeric_limits<double>::infinity();
    for (cplx v : s.eigenvalues) best = std::min(best, std::abs(v - e));
    worst = std::max(worst, best);
  }
  return worst;
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Found: return "found";
    case RowStatus::BudgetExhausted: return "budget-exhausted";
    case RowStatus::Contradicted: return "contradicted";
  }
  return "unknown";
}

namespace {

int found_rows(const std::vector<RowResult>& rows) {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.status == RowStatus::Found; }));
}

const Level* level_near(const Spectrum& s, cplx e, double tol) {
  const Level* best = nullptr;
  double best_err = tol;
  for (const Level& l : s.levels) {
    const double err = std::abs(l.value - e);
    if (err <= best_err) {
      best_err = err;
      best = &l;
    }
  }
  return best;
}

// Judges one expected row against the current solution list.
RowResult judge_row(const TableSpec& t, const TableRow& row, const std::vector<RootSet>& sols, const Spectrum& spec,
                    const ReproduceOptions& opt) {
  const GaudinParams& p = t.params;
  RowResult r;
  r.expected = row;
  const RootSet* hit = nullptr;
  double best = std::numeric_limits<double>::infinity();
  for (const RootSet& rs : sols) {
    const double d = root_set_distance(p.kind, rs.roots, row.roots);
    if (d < best) {
      best = d;
      hit = &rs;
    }
  }
  if (!hit || best > opt.root_tol) {
    // Not produced by the solver. Polishing the printed roots tells a missed
    // solution apart from a row that does not solve the equations.
    std::vector<cplx> x = row.roots;
    SolverOptions so = opt.solver;
    if (!x.empty() && newton_polish(p, x, so) && root_set_distance(p.kind, x, row.roots) <= opt.root_tol) {
      const cplx e = t.rotation * energy(t.site, p, x);
      if (std::abs(e.real() - row.energy) > opt.energy_tol || std::abs(e.imag()) > opt.energy_tol) {
        r.status = RowStatus::Contradicted;
        r.note = "printed roots solve the equations but give a different energy";
      } else {
        r.note = "printed roots polish to a solution the solver has not reached";
      }
    } else if (!x.empty()) {
      r.status = RowStatus::Contradicted;
      r.note = "printed roots do not polish to a solution";
    }
    return r;
  }
  r.solution = *hit;
  r.root_err = best;
  r.energy = t.rotation * energy(t.site, p, hit->roots);
  r.energy_err = std::abs(r.energy - cplx(row.energy, 0.0));
  const Level* lvl = level_near(spec, r.energy, opt.match_tol);
  r.ed_degeneracy = lvl ? lvl->multiplicity : 0;
  if (r.energy_err > opt.energy_tol) {
    r.status = RowStatus::Contradicted;
    r.note = "energy differs from the printed value";
  } else if (!lvl) {
    r.status = RowStatus::Contradicted;
    r.note = "energy is not an ED eigenvalue";
  } else if (lvl->multiplicity != row.degeneracy) {
    r.status = RowStatus::Contradicted;
    r.note = "ED degeneracy differs from the printed value";
  } else {
    r.status = RowStatus::Found;
  }
  return r;
}

}  // namespace

ReproduceReport reproduce_table(const TableSpec& t, const ReproduceOptions& opt) {
  ReproduceReport rep;
  rep.table_id = t.id;
  for (const TableRow& row : t.rows) rep.printed_degeneracy_sum += row.degeneracy;
  const Spectrum spec = gaudin_spectrum(t.params, t.site);

  int done = 0, stall = 0, last_progress = -1;
  for (int budget = std::max(1, opt.starts);; budget *= 2) {
    for (int m : t.admissible_m) {
      SolverOptions so = opt.solver;
      so.seed = opt.seed;
      so.first_start = done;
      so.starts = budget - done;
      merge_solutions(rep.solutions, solve_gaudin_bae(t.params, m, so).solutions, so.dedup_distance);
    }
    done = budget;
    rep.starts_per_sector = budget;
    rep.spectrum = match_spectrum(t.params, rep.solutions, t.site, opt.match_tol);
    rep.rows.clear();
    for (const TableRow& row : t.rows) rep.rows.push_back(judge_row(t, row, rep.solutions, spec, opt));

    const int found = found_rows(rep.rows);
    const bool complete = found == static_cast<int>(t.rows.size()) && rep.spectrum.matched_degeneracy == spec.dim();
    const int progress = found + static_cast<int>(rep.spectrum.levels.size()) + rep.spectrum.matched_degeneracy;
    stall = progress > last_progress ? 0 : stall + 1;
    last_progress = progress;
    if (complete || stall >= opt.stall_doublings || 2 * budget > opt.max_starts) break;
  }
  rep.passed = found_rows(rep.rows) == static_cast<int>(t.rows.size()) && rep.spectrum.matched_degeneracy == spec.dim() &&
               rep.printed_degeneracy_sum == spec.dim();
  return rep;
}

ReproduceReport reproduce_table(int id, const ReproduceOptions& opt) { return reproduce_table(table_spec(id), opt); }

}  // namespace ikg
