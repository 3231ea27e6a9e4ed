#pragma once

// Gaudin-limit Bethe equations, their Jacobians, energies and root-set
// canonicalization. Periodic roots are the hyperbolic mu_j; open roots live
// in the cosh variable (mu~_j for constrained, mu-bar_j for diagonal).

#include <vector>

#include "ikg/gaudin.hpp"

namespace ikg {

struct RootSet {
  GaudinKind kind = GaudinKind::Periodic;
  int m = 0;
  std::vector<cplx> roots;
  double residual = 0.0;
  bool canonical = false;
};

// First-order expansion lambda_j = mu_j + eta nu_j of a finite-eta root; nu
// has no consumer in the eigenvalue formulas and is left unset.
struct ExpansionCoefficients {
  cplx mu{};
  cplx nu{};
};

// Distance below which a root is considered to sit on a pole manifold.
inline constexpr double kRootPoleGuard = 1e-10;

// f_j(roots); throws SingularConfiguration when a precondition pole is hit.
std::vector<cplx> gaudin_bae_residual(const GaudinParams& p, const std::vector<cplx>& roots);

// max_j |f_j|, 0 for no roots.
double gaudin_bae_residual_norm(const GaudinParams& p, const std::vector<cplx>& roots);

// Non-throwing evaluation for the solver: false when within `pole_tol` of a
// pole. `jac` (optional) receives d f_j / d x_k.
bool evaluate_gaudin_bae(const GaudinParams& p, const std::vector<cplx>& x, double pole_tol, std::vector<cplx>& f,
                         ComplexMatrix* jac);

cplx energy_periodic(int j, const GaudinParams& p, const std::vector<cplx>& roots);
cplx energy_constrained(int j, const GaudinParams& p, const std::vector<cplx>& roots);
cplx energy_diagonal(int j, const GaudinParams& p, const std::vector<cplx>& roots);

// Constrained energy with the alternative boundary denominator
// 1 - 4 e^{-2 eps} sinh^2(2 theta_j); it disagrees with ED and is kept only
// to document that.
cplx energy_constrained_printed(int j, const GaudinParams& p, const std::vector<cplx>& roots);

// Dispatches on p.kind.
cplx energy(int j, const GaudinParams& p, const std::vector<cplx>& roots);

// Periodic roots: Im folded into (-pi, pi].
cplx fold_periodic(cplx mu);

// Sorted by (Re, Im) after folding (periodic); idempotent.
RootSet canonicalize(RootSet rs);

// Distance between two root multisets: the smallest over pairings of the
// largest component distance (periodic roots compared modulo 2 pi i).
// Infinite for different sizes.
double root_set_distance(GaudinKind kind, const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace ikg
