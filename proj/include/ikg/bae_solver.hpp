#pragma once

// Multi-start damped Newton solver for the Gaudin-limit Bethe equations.

#include <cstdint>
#include <vector>

#include "ikg/gaudin_bae.hpp"

namespace ikg {

struct SolverOptions {
  int starts = 500;
  int first_start = 0;  // start indices [first_start, first_start + starts)
  std::uint64_t seed = 1;
  double tol = 1e-11;
  int max_iterations = 100;
  int max_halvings = 30;
  double dedup_distance = 1e-6;
  double pole_distance = 1e-8;
  double open_root_bound = 1e4;      // |mu| bound for open kinds (roots at infinity)
  double periodic_real_bound = 50.0;  // |Re mu| bound for the periodic kind
};

struct SolveReport {
  std::vector<RootSet> solutions;  // canonical, distinct, sorted
  int attempted = 0;
  int converged = 0;
};

// Start point for start index `s`; depends only on (kind, theta, M, seed, s).
std::vector<cplx> seed_point(const GaudinParams& p, int m, std::uint64_t seed, int s);

// Damped Newton from `x` on the rational equations; true on convergence to tol.
bool newton_polish(const GaudinParams& p, std::vector<cplx>& x, const SolverOptions& opt);

// One start: cleared-denominator Newton followed by rational polishing, with
// all acceptance checks. Returns false when the start is abandoned.
bool solve_from(const GaudinParams& p, std::vector<cplx> x0, const SolverOptions& opt, RootSet& out);

SolveReport solve_gaudin_bae(const GaudinParams& p, int m, const SolverOptions& opt);

// Adds the solutions of `more` not already present (at `distance`) and keeps
// the list canonically sorted.
void merge_solutions(std::vector<RootSet>& into, const std::vector<RootSet>& more, double distance);

}  // namespace ikg
