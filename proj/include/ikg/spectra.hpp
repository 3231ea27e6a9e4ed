#pragma once

// Matching Bethe energies against exact diagonalization and reproducing the
// reference tables.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ikg/bae_solver.hpp"
#include "ikg/gaudin.hpp"

namespace ikg {

inline constexpr double kMatchTol = 1e-6;

// Rotation applied to energies and operators before comparison: i for a
// periodic chain with purely imaginary inhomogeneities (i H_j is Hermitian
// there), 1 otherwise.
cplx energy_rotation(const GaudinParams& p);

struct LevelRecord {
  RootSet roots;
  cplx e_bethe{};  // rotated
  cplx e_ed{};     // rotated
  int degeneracy = 0;
  double abs_err = 0.0;
};

struct AmbiguousMatch {
  RootSet roots;
  cplx e_bethe{};
  std::vector<cplx> candidates;
};

struct SpectrumReport {
  GaudinParams params;
  int site = 1;
  cplx rotation{1.0, 0.0};
  double tol = kMatchTol;
  std::vector<LevelRecord> levels;         // sorted by (Re, Im) of e_ed
  std::vector<Level> unmatched_ed_levels;  // rotated
  std::vector<RootSet> unmatched_solutions;
  std::vector<AmbiguousMatch> ambiguous;
  double coverage = 0.0;  // matched degeneracy sum / 3^N
  int matched_degeneracy = 0;
};

// ED spectrum of rotation * H_j.
Spectrum gaudin_spectrum(const GaudinParams& p, int j);

// Greedy nearest matching of every root set's E_j against the ED levels of
// H_j. Several root sets may land on one level; coverage counts each matched
// level once with its ED multiplicity.
SpectrumReport match_spectrum(const GaudinParams& p, const std::vector<RootSet>& rootsets, int j,
                              double tol = kMatchTol);

// Largest distance, over all sites, between E_j and the nearest ED
// eigenvalue of H_j.
double soundness_error(const GaudinParams& p, const RootSet& rs);

struct TableRow {
  std::vector<cplx> roots;
  double energy = 0.0;
  int degeneracy = 0;
};

struct TableSpec {
  int id = 0;
  GaudinParams params;
  std::optional<int> k;
  int site = 1;
  cplx rotation{1.0, 0.0};
  std::vector<int> admissible_m;
  std::vector<TableRow> rows;
};

TableSpec parse_table_spec(const std::string& json_text);

// The shipped tables 1-3.
const TableSpec& table_spec(int id);

struct ReproduceOptions {
  int starts = 500;
  std::uint64_t seed = 1;
  int stall_doublings = 3;
  int max_starts = 64000;
  double root_tol = 5e-4;
  double energy_tol = 5e-4;
  double match_tol = kMatchTol;
  SolverOptions solver;  // starts/first_start/seed are managed by the driver
};

enum class RowStatus { Found, BudgetExhausted, Contradicted };

const char* to_string(RowStatus s);

struct RowResult {
  TableRow expected;
  RowStatus status = RowStatus::BudgetExhausted;
  std::optional<RootSet> solution;
  cplx energy{};  // rotated
  int ed_degeneracy = 0;
  double root_err = 0.0;
  double energy_err = 0.0;
  std::string note;
};

struct ReproduceReport {
  int table_id = 0;
  std::vector<RowResult> rows;
  SpectrumReport spectrum;
  std::vector<RootSet> solutions;
  int starts_per_sector = 0;
  int printed_degeneracy_sum = 0;
  bool passed = false;
};

ReproduceReport reproduce_table(const TableSpec& table, const ReproduceOptions& opt);
ReproduceReport reproduce_table(int id, const ReproduceOptions& opt);

}  // namespace ikg
