// ikg: command-line front end for the Izergin-Korepin Gaudin toolkit.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ikg/errors.hpp"
#include "ikg/serialization.hpp"
#include "ikg/spectra.hpp"
#include "ikg/verification.hpp"

namespace {

using namespace ikg;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("IKG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("IKG_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

struct ParamArgs {
  std::string kind = "periodic";
  std::string theta;
  std::string eps = "0", sigma = "0", sigbar = "0";

  void add(CLI::App* app, bool theta_required) {
    app->add_option("--kind", kind, "periodic | constrained | diagonal")
        ->check(CLI::IsMember({"periodic", "constrained", "diagonal"}));
    auto* t = app->add_option("--theta", theta, "comma-separated inhomogeneities, e.g. -0.40i,0.18i,0.75i");
    if (theta_required) t->required();
    app->add_option("--eps", eps, "boundary epsilon (constrained)");
    app->add_option("--sigma", sigma, "boundary sigma (constrained)");
    app->add_option("--sigbar", sigbar, "boundary sigma-bar (constrained)");
  }

  GaudinParams params() const {
    GaudinParams p;
    p.kind = gaudin_kind_from_string(kind);
    p.theta = parse_complex_list(theta);
    p.eps = parse_complex(eps);
    p.sigma = parse_complex(sigma);
    p.sigma_bar = parse_complex(sigbar);
    validate_gaudin(p);
    return p;
  }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw InvalidArgument("'" + path + "': " + ex.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

void check_site(int site, const GaudinParams& p) {
  if (site < 1 || site > p.n()) throw InvalidArgument("site must lie in 1.." + std::to_string(p.n()));
}

std::vector<RootSet> read_rootsets(const std::string& path) {
  const Json j = read_json(path);
  const Json& list = j.is_object() && j.contains("solutions") ? j.at("solutions") : j;
  std::vector<RootSet> out;
  if (list.is_array()) {
    for (const auto& r : list) out.push_back(rootset_from_json(r));
  } else {
    out.push_back(rootset_from_json(list));
  }
  return out;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, double tol) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, trials, seed, tol);
    std::printf("%-15s draws=%-5d max_residual=%.3e tol=%.1e %s\n", r.name.c_str(), r.draws, r.max_residual, r.tol,
                r.passed ? "PASS" : "FAIL");
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitFail;
}

int run_build(const ParamArgs& pa, int site, const std::string& out) {
  const GaudinParams p = pa.params();
  check_site(site, p);
  Json j{{"params", params_to_json(p)}, {"site", site}, {"matrix", matrix_to_json(build_gaudin(site, p))}};
  emit(dump(j), out);
  return 0;
}

int run_ed(const std::string& in, const ParamArgs& pa, int site, bool hermitian, bool rotate, const std::string& out) {
  ComplexMatrix h;
  std::optional<GaudinParams> params;
  if (!in.empty()) {
    const Json j = read_json(in);
    h = matrix_from_json(j.contains("matrix") ? j.at("matrix") : j);
    if (j.contains("params")) params = params_from_json(j.at("params"));
  } else {
    if (pa.theta.empty()) throw InvalidArgument("ed needs --in FILE or inline parameters with --theta");
    params = pa.params();
    check_site(site, *params);
    h = build_gaudin(site, *params);
  }
  if (rotate) {
    if (!params) throw InvalidArgument("--rotate needs parameters (inline, or a file written by build)");
    const cplx r = energy_rotation(*params);
    h *= r;
    hermitian = hermitian || r == kI;
  }
  emit(dump(spectrum_to_json(exact_spectrum(h, hermitian))), out);
  return 0;
}

int run_solve(const ParamArgs& pa, int m, const SolverOptions& so, const std::string& out) {
  const GaudinParams p = pa.params();
  if (m < 0) throw InvalidArgument("M must be non-negative");
  const SolveReport rep = solve_gaudin_bae(p, m, so);
  Json sols = Json::array();
  for (const RootSet& rs : rep.solutions) sols.push_back(rootset_to_json(rs));
  Json j{{"params", params_to_json(p)}, {"M", m},           {"starts", so.starts}, {"seed", so.seed},
         {"tol", so.tol},               {"attempted", rep.attempted}, {"converged", rep.converged}, {"solutions", sols}};
  emit(dump(j), out);
  return 0;
}

int run_spectrum(const ParamArgs& pa, const std::vector<std::string>& roots, int site, double tol,
                 const std::string& out, const std::string& csv) {
  const GaudinParams p = pa.params();
  check_site(site, p);
  std::vector<RootSet> sets;
  for (const auto& path : roots) {
    for (RootSet& rs : read_rootsets(path)) {
      if (rs.kind != p.kind) throw InvalidArgument("'" + path + "' holds " + to_string(rs.kind) + " root sets");
      sets.push_back(std::move(rs));
    }
  }
  if (roots.empty()) {
    RootSet vacuum;
    vacuum.kind = p.kind;
    sets.push_back(vacuum);
  }
  const SpectrumReport rep = match_spectrum(p, sets, site, tol);
  emit(dump(report_to_json(rep)), out);
  if (!csv.empty()) emit(levels_csv(rep), csv);
  return 0;
}

int run_reproduce(int table, const ReproduceOptions& opt, const std::string& out) {
  const ReproduceReport rep = reproduce_table(table, opt);
  if (!out.empty()) emit(dump(reproduce_to_json(rep)), out);
  std::printf("table %d  site %d  starts/sector %d\n", rep.table_id, rep.spectrum.site, rep.starts_per_sector);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const RowResult& r = rep.rows[i];
    std::printf("  row %2zu  M=%zu  E=% .4f  d=%d  ", i + 1, r.expected.roots.size(), r.expected.energy,
                r.expected.degeneracy);
    if (r.status == RowStatus::Found) {
      std::printf("found  E=% .6f  dE=%.1e  droots=%.1e\n", r.energy.real(), r.energy_err, r.root_err);
    } else {
      std::printf("%s  %s\n", to_string(r.status), r.note.c_str());
    }
  }
  std::printf("coverage %.6f  printed degeneracy sum %d  %s\n", rep.spectrum.coverage, rep.printed_degeneracy_sum,
              rep.passed ? "PASS" : "FAIL");
  return rep.passed ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Izergin-Korepin Gaudin models: operators, Bethe equations, spectra"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  std::string suite = "all";
  int trials = 200;
  double vtol = 0.0;
  auto* verify = app.add_subcommand("verify", "run randomized identity and integrability suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "suite name or 'all'")->check(CLI::IsMember(suites));
  verify->add_option("--trials", trials, "random draws per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed (default $IKG_SEED or 1)");
  verify->add_option("--tol", vtol, "override the suite tolerance");

  ParamArgs build_args;
  int site = 1;
  std::string out;
  auto* build = app.add_subcommand("build", "write H_j as JSON");
  build_args.add(build, true);
  build->add_option("--site", site, "site j (1-based)");
  build->add_option("--out", out, "output file (default stdout)");

  ParamArgs ed_args;
  std::string in;
  bool hermitian = false, rotate = false;
  auto* ed = app.add_subcommand("ed", "exact diagonalization of a stored or inline operator");
  ed->add_option("--in", in, "matrix JSON, or the output of build");
  ed_args.add(ed, false);
  ed->add_option("--site", site, "site j for inline parameters");
  ed->add_flag("--hermitian", hermitian, "use the Hermitian eigensolver (fails if the matrix is not Hermitian)");
  ed->add_flag("--rotate", rotate, "diagonalize i*H for periodic chains with imaginary inhomogeneities");
  ed->add_option("--out", out, "output file (default stdout)");

  ParamArgs solve_args;
  int m = 0;
  SolverOptions so;
  auto* solve = app.add_subcommand("solve", "multi-start Newton for the Gaudin Bethe equations");
  solve_args.add(solve, true);
  solve->add_option("--m", m, "number of Bethe roots")->required();
  solve->add_option("--starts", so.starts, "Newton starts")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "RNG seed (default $IKG_SEED or 1)");
  solve->add_option("--tol", so.tol, "residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--out", out, "output file (default stdout)");

  ParamArgs spec_args;
  std::vector<std::string> roots;
  double mtol = kMatchTol;
  std::string csv;
  auto* spectrum = app.add_subcommand("spectrum", "match Bethe energies against exact diagonalization");
  spec_args.add(spectrum, true);
  spectrum->add_option("--roots", roots, "root set JSON files (output of solve); none means the M=0 state");
  spectrum->add_option("--site", site, "site j (1-based)");
  spectrum->add_option("--tol", mtol, "absolute match tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--out", out, "report file (default stdout)");
  spectrum->add_option("--csv", csv, "also write the matched levels as CSV");

  int table = 1;
  ReproduceOptions ro;
  auto* reproduce = app.add_subcommand("reproduce", "solve all sectors and compare with a reference table");
  reproduce->add_option("--table", table, "table id")->required()->check(CLI::IsMember({1, 2, 3}));
  reproduce->add_option("--starts", ro.starts, "initial starts per sector")->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", seed, "RNG seed (default $IKG_SEED or 1)");
  reproduce->add_option("--out", out, "write the full JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(suite, trials, seed, vtol);
    if (*build) return run_build(build_args, site, out);
    if (*ed) return run_ed(in, ed_args, site, hermitian, rotate, out);
    if (*solve) {
      so.seed = seed;
      return run_solve(solve_args, m, so, out);
    }
    if (*spectrum) return run_spectrum(spec_args, roots, site, mtol, out, csv);
    if (*reproduce) {
      ro.seed = seed;
      return run_reproduce(table, ro, out);
    }
  } catch (const InvalidArgument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const SingularConfiguration& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
