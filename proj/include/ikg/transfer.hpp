#pragma once

// Periodic and double-row transfer matrices of the IK chain, their collapsed
// products at u = theta_j, the eta -> 0 scalars t0 and the finite-difference
// Gaudin oracle.

#include <optional>
#include <vector>

#include "ikg/boundary.hpp"
#include "ikg/linalg.hpp"

namespace ikg {

struct ChainSpec {
  std::vector<cplx> theta;                // inhomogeneities, theta[0] is site 1
  cplx eta{};                             // crossing parameter
  std::optional<BoundaryParams> boundary;  // empty for a periodic chain

  int n() const { return static_cast<int>(theta.size()); }
  bool periodic() const { return !boundary.has_value(); }
};

// Pole guard on sinh(theta_j -/+ theta_l) and similar denominators.
inline constexpr double kPoleGuard = 1e-10;

// Throws SingularConfiguration when theta's coincide (or, for open chains,
// theta_j = -theta_l) and InvalidArgument on an empty chain.
void validate_chain(const ChainSpec& spec);

ComplexMatrix periodic_transfer(cplx u, const ChainSpec& spec);

// kappa R_{j,j-1} ... R_{j,1} R_{j,N} ... R_{j,j+1}; site j is 1-based.
ComplexMatrix periodic_transfer_at_theta(int j, const ChainSpec& spec);

ComplexMatrix open_transfer(cplx u, const ChainSpec& spec);

// Double-row transfer matrix at u = theta_j as a product of two-site factors.
ComplexMatrix open_transfer_at_theta(int j, const ChainSpec& spec);

// t(theta_j)/kappa obtained by dropping the explicit kappa prefactor of the
// collapsed product (no division, so it stays well-conditioned as eta -> 0).
ComplexMatrix transfer_at_theta_over_kappa(int j, const ChainSpec& spec);

// eta -> 0 limit of t(theta_j)/kappa, which is proportional to the identity.
cplx t0_scalar(int j, const ChainSpec& spec);

// Grid used when the caller does not supply one.
const std::vector<double>& default_oracle_grid();

// H_j = d/d eta ln(t(theta_j)/kappa) at eta = 0, via polynomial extrapolation
// of A(eta) = (t(theta_j)/(kappa t0) - I)/eta over the grid to eta = 0
// (two points reduce to 2 A(eta/2) - A(eta)). spec.eta is ignored; constrained
// boundaries are re-derived at every grid point.
ComplexMatrix fd_gaudin_oracle(int j, const ChainSpec& spec, const std::vector<double>& eta_grid);
ComplexMatrix fd_gaudin_oracle(int j, const ChainSpec& spec);

}  // namespace ikg
