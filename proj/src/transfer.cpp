#include "ikg/transfer.hpp"

#include <cmath>
#include <string>

#include "ikg/errors.hpp"
#include "ikg/ik_model.hpp"

namespace ikg {

using std::sinh;

namespace {

void check_site(int j, const ChainSpec& spec) {
  if (j < 1 || j > spec.n()) throw InvalidArgument("site " + std::to_string(j) + " outside 1.." + std::to_string(spec.n()));
}

void require_open(const ChainSpec& spec, const char* what) {
  if (spec.periodic()) throw InvalidArgument(std::string(what) + ": needs boundary parameters");
}

void require_periodic(const ChainSpec& spec, const char* what) {
  if (!spec.periodic()) throw InvalidArgument(std::string(what) + ": needs a periodic chain");
}

ComplexMatrix collapsed_periodic(int j, const ChainSpec& spec) {
  const int n = spec.n();
  const cplx tj = spec.theta[j - 1];
  ComplexMatrix x = identity(pow3(n));
  for (int l = j - 1; l >= 1; --l) apply_pair_right(x, build_R(tj - spec.theta[l - 1], spec.eta), j, l, n);
  for (int l = n; l > j; --l) apply_pair_right(x, build_R(tj - spec.theta[l - 1], spec.eta), j, l, n);
  return x;
}

ComplexMatrix collapsed_open(int j, const ChainSpec& spec) {
  const int n = spec.n();
  const cplx eta = spec.eta;
  const BoundaryParams& bp = *spec.boundary;
  const cplx tj = spec.theta[j - 1];

  // Site-j factor tr_0{K^+_0 R_{0j}(2 theta_j) P_{0j}} on the (0, j) pair.
  const ComplexMatrix z = kron(Kplus(tj, eta, bp), identity(3)) * build_R(2.0 * tj, eta) * swap9();
  const ComplexMatrix y = partial_trace_aux(z);

  ComplexMatrix x = identity(pow3(n));
  for (int l = j - 1; l >= 1; --l) apply_pair_right(x, build_R(tj - spec.theta[l - 1], eta), j, l, n);
  apply_site_right(x, Kminus(tj, eta, bp), j, n);
  for (int l = 1; l <= n; ++l)
    if (l != j) apply_pair_right(x, build_R(tj + spec.theta[l - 1], eta), l, j, n);
  apply_site_right(x, y, j, n);
  for (int l = n; l > j; --l) apply_pair_right(x, build_R(tj - spec.theta[l - 1], eta), j, l, n);
  return x;
}

}  // namespace

void validate_chain(const ChainSpec& spec) {
  const int n = spec.n();
  if (n < 1) throw InvalidArgument("chain needs at least one site");
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      if (l != j && std::abs(sinh(spec.theta[j] - spec.theta[l])) < kPoleGuard)
        throw SingularConfiguration("coincident inhomogeneities at sites " + std::to_string(j + 1) + ", " +
                                    std::to_string(l + 1));
      if (!spec.periodic() && std::abs(sinh(spec.theta[j] + spec.theta[l])) < kPoleGuard)
        throw SingularConfiguration("theta_" + std::to_string(j + 1) + " + theta_" + std::to_string(l + 1) +
                                    " sits on a pole");
    }
}

ComplexMatrix periodic_transfer(cplx u, const ChainSpec& spec) {
  require_periodic(spec, "periodic_transfer");
  const int n = spec.n(), legs = n + 1;
  ComplexMatrix x = identity(pow3(legs));
  for (int l = n; l >= 1; --l) apply_pair_right(x, build_R(u - spec.theta[l - 1], spec.eta), 1, l + 1, legs);
  return partial_trace_aux(x);
}

ComplexMatrix periodic_transfer_at_theta(int j, const ChainSpec& spec) {
  require_periodic(spec, "periodic_transfer_at_theta");
  check_site(j, spec);
  return kappa(spec.eta) * collapsed_periodic(j, spec);
}

ComplexMatrix open_transfer(cplx u, const ChainSpec& spec) {
  require_open(spec, "open_transfer");
  const int n = spec.n(), legs = n + 1;
  const cplx eta = spec.eta;
  const BoundaryParams& bp = *spec.boundary;
  ComplexMatrix x = kron(Kplus(u, eta, bp), identity(pow3(n)));
  for (int l = n; l >= 1; --l) apply_pair_right(x, build_R(u - spec.theta[l - 1], eta), 1, l + 1, legs);
  apply_site_right(x, Kminus(u, eta, bp), 1, legs);
  for (int l = 1; l <= n; ++l) apply_pair_right(x, build_R(u + spec.theta[l - 1], eta), l + 1, 1, legs);
  return partial_trace_aux(x);
}

ComplexMatrix open_transfer_at_theta(int j, const ChainSpec& spec) {
  require_open(spec, "open_transfer_at_theta");
  check_site(j, spec);
  return kappa(spec.eta) * collapsed_open(j, spec);
}

ComplexMatrix transfer_at_theta_over_kappa(int j, const ChainSpec& spec) {
  check_site(j, spec);
  return spec.periodic() ? collapsed_periodic(j, spec) : collapsed_open(j, spec);
}

cplx t0_scalar(int j, const ChainSpec& spec) {
  check_site(j, spec);
  const cplx tj = spec.theta[j - 1];
  cplx t0 = 1.0;
  for (int l = 1; l <= spec.n(); ++l)
    if (l != j) t0 *= sinh(tj - spec.theta[l - 1]);
  if (!spec.periodic()) {
    const BoundaryParams& bp = *spec.boundary;
    if (bp.kind == BoundaryKind::GenericNonDiagonal)
      throw InvalidArgument("t0_scalar: generic non-diagonal boundaries have no identity-proportional limit");
    for (int l = 1; l <= spec.n(); ++l) t0 *= sinh(tj + spec.theta[l - 1]);
    if (bp.kind == BoundaryKind::ConstrainedNonDiagonal) t0 *= w_theta(tj, bp.eps);
  }
  if (std::abs(t0) < kPoleGuard) throw SingularConfiguration("t0_scalar vanishes (coincident inhomogeneities)");
  return t0;
}

const std::vector<double>& default_oracle_grid() {
  static const std::vector<double> grid{2e-3, 1e-3, 5e-4, 2.5e-4, 1.25e-4};
  return grid;
}

ComplexMatrix fd_gaudin_oracle(int j, const ChainSpec& spec) { return fd_gaudin_oracle(j, spec, default_oracle_grid()); }

ComplexMatrix fd_gaudin_oracle(int j, const ChainSpec& spec, const std::vector<double>& eta_grid) {
  if (eta_grid.size() < 2) throw InvalidArgument("fd_gaudin_oracle: grid needs at least two points");
  check_site(j, spec);
  const cplx t0 = t0_scalar(j, spec);
  const ComplexMatrix id = identity(pow3(spec.n()));

  std::vector<ComplexMatrix> table;
  for (double h : eta_grid) {
    if (std::abs(kappa(h)) <= 1e-12) throw InvalidArgument("fd_gaudin_oracle: eta too small for a stable quotient");
    ChainSpec at = spec;
    at.eta = h;
    if (at.boundary) at.boundary = boundary_at(*at.boundary, h);
    table.push_back((transfer_at_theta_over_kappa(j, at) / t0 - id) / h);
  }
  // Neville extrapolation of the polynomial in eta to eta = 0.
  const std::size_t m = eta_grid.size();
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t i = 0; i + k < m; ++i)
      table[i] = (eta_grid[i] * table[i + 1] - eta_grid[i + k] * table[i]) / (eta_grid[i] - eta_grid[i + k]);
  return table[0];
}

}  // namespace ikg
