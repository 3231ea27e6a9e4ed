#pragma once

// Finite-eta T-Q relations, Q-functions and Bethe-equation residuals. These
// are evaluators only; the finite-eta equations are never solved here.

#include <vector>

#include "ikg/transfer.hpp"

namespace ikg {

enum class QForm { PeriodicQtilde, OpenQ1Q2, OpenSymmetricQ, DiagonalQ };

struct QFunctionSet {
  QForm form = QForm::PeriodicQtilde;
  std::vector<cplx> roots;
};

// prod_j sinh((u - lambda_j - 2 eta)/2).
cplx q_tilde(cplx u, const std::vector<cplx>& roots, cplx eta);
cplx q1(cplx u, const std::vector<cplx>& roots, cplx eta);
// prod_j sinh((u + lambda_j - 2 eta)/2) = q1(u; -lambda).
cplx q2(cplx u, const std::vector<cplx>& roots, cplx eta);
// prod_j sinh((u - lambda_j - 2 eta)/2) sinh((u + lambda_j - 2 eta)/2).
cplx q_symmetric(cplx u, const std::vector<cplx>& roots, cplx eta);

// Products of the R-matrix entries c, d, b over u - theta_l.
cplx a_tilde(cplx u, const ChainSpec& spec);
cplx d_tilde(cplx u, const ChainSpec& spec);
cplx b_tilde(cplx u, const ChainSpec& spec);

// Open-chain vacuum functions; the diagonal kind gives the reduced forms.
cplx open_a(cplx u, const ChainSpec& spec);
cplx open_d(cplx u, const ChainSpec& spec);
cplx open_b(cplx u, const ChainSpec& spec);
cplx open_c(cplx u, const ChainSpec& spec, cplx c0);

// Coefficient of the inhomogeneous term for N_bar = 4N - 2 roots.
cplx c0_constant(const ChainSpec& spec, const std::vector<cplx>& roots);

cplx tq_periodic(cplx u, const ChainSpec& spec, const QFunctionSet& q);
cplx tq_open_inhomogeneous(cplx u, const ChainSpec& spec, const QFunctionSet& q);
cplx tq_open_homogeneous(cplx u, const ChainSpec& spec, const QFunctionSet& q);
cplx tq_diagonal(cplx u, const ChainSpec& spec, const QFunctionSet& q);

// Admissible root counts of the constrained homogeneous T-Q relation for
// sigma' - sigma = -4 k eta.
std::vector<int> admissible_root_counts(int n, int k);

enum class FiniteEtaBae { Periodic, OpenInhomogeneous, OpenConstrained, OpenDiagonal };

// LHS_j - RHS_j of the respective Bethe equations.
std::vector<cplx> bae_residual_finite_eta(FiniteEtaBae kind, const std::vector<cplx>& roots, const ChainSpec& spec);

// Residue of tq_open_inhomogeneous at u = lambda_j + 2 eta divided by the
// j-th inhomogeneous BAE residual, in closed form (j is 0-based).
cplx residue_to_residual_factor(int j, const ChainSpec& spec, const std::vector<cplx>& roots);

// (1 / 2 pi i) of the contour integral of tq_open_inhomogeneous on a circle
// of `radius` around lambda_j + 2 eta, trapezoid rule with `points` nodes.
cplx tq_open_residue(int j, const ChainSpec& spec, const std::vector<cplx>& roots, double radius = 1e-3,
                     int points = 64);

}  // namespace ikg
