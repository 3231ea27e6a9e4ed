#pragma once

// Seeded randomized property suites over the algebraic identities and the
// Gaudin families. Each suite reports its worst residual against a fixed
// tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "ikg/gaudin.hpp"

namespace ikg {

struct SuiteResult {
  std::string name;
  int draws = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool passed = false;
};

// Suite names: ybe, unitarity, crossing, initial, re, dual-re,
// spin-expansion, commute, oracle, symmetry.
const std::vector<std::string>& suite_names();

// Runs one suite. `tol` <= 0 selects the suite's default tolerance.
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed, double tol = 0.0);

// Random Gaudin parameters of `kind` with n sites, away from every pole.
GaudinParams random_gaudin_params(GaudinKind kind, int n, std::uint64_t seed);

}  // namespace ikg
