#pragma once

// Type-II non-diagonal K-matrices of the IK model, the M matrix, reflection
// equation residuals and the constrained / diagonal boundary families.

#include <optional>
#include <utility>

#include "ikg/linalg.hpp"

namespace ikg {

enum class BoundaryKind { GenericNonDiagonal, ConstrainedNonDiagonal, Diagonal };

const char* to_string(BoundaryKind k);

// Boundary parameters of both ends. The left-end epsilon enters every formula
// only through e^{-eps'}, which is what gets stored; for the constrained
// family eps' = eps + i pi, i.e. e^{-eps'} = -e^{-eps}, without any branch
// choice. sigma' is only meaningful at the eta it was derived for.
struct BoundaryParams {
  BoundaryKind kind = BoundaryKind::Diagonal;
  cplx eps{};
  cplx sigma{};
  cplx sigma_bar{};           // eta-slope of sigma' (constrained family)
  std::optional<int> k;       // set when sigma_bar = -4k for an integer k
  cplx exp_neg_eps_prime{};   // e^{-eps'}
  cplx sigma_prime{};
  cplx eta{};                 // eta at which sigma' was derived
};

BoundaryParams generic_boundary(cplx eps, cplx sigma, cplx eps_prime, cplx sigma_prime);
BoundaryParams diagonal_boundary();

// Constrained family: sigma' = sigma + sigma_bar eta, e^{eps'} = -e^{eps}.
BoundaryParams apply_constraints(cplx eps, cplx sigma, cplx sigma_bar, cplx eta);

// Re-derives eta-dependent fields (sigma' of the constrained family) at `eta`.
BoundaryParams boundary_at(const BoundaryParams& p, cplx eta);

// diag(e^{2 eta}, 1, e^{-2 eta}).
ComplexMatrix build_M(cplx eta);

ComplexMatrix build_Kminus(cplx u, cplx eta, cplx eps, cplx sigma);

// K^- with e^{-eps} supplied directly.
ComplexMatrix build_Kminus_exp(cplx u, cplx eta, cplx exp_neg_eps, cplx sigma);

// M K^-(-u + 6 eta + i pi) with (eps, sigma) -> (eps', sigma').
ComplexMatrix build_Kplus(cplx u, cplx eta, cplx eps_prime, cplx sigma_prime);
ComplexMatrix build_Kplus_exp(cplx u, cplx eta, cplx exp_neg_eps_prime, cplx sigma_prime);

// K-matrices for a parameter set; the diagonal kind gives exactly I and M.
ComplexMatrix Kminus(cplx u, cplx eta, const BoundaryParams& p);
ComplexMatrix Kplus(cplx u, cplx eta, const BoundaryParams& p);

// eta -> 0 limits of the constrained K-matrices in spin-operator form.
ComplexMatrix Kminus0(cplx u, cplx eps, cplx sigma);
ComplexMatrix Kplus0(cplx u, cplx eps, cplx sigma);

struct ReflectionResiduals {
  double re = 0.0;
  double dual_re = 0.0;
};

ReflectionResiduals verify_reflection(cplx u1, cplx u2, cplx eta, const BoundaryParams& p);

// 1 - 4 e^{-2 eps} sinh^2(theta).
cplx w_theta(cplx theta, cplx eps);

// Magnitude below which w(theta) makes the open Gaudin normalization singular.
inline constexpr double kWSingular = 1e-12;

bool w_is_singular(cplx theta, cplx eps);

}  // namespace ikg
