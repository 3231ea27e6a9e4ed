#include "ikg/boundary.hpp"

#include <cmath>

#include "ikg/ik_model.hpp"

namespace ikg {

using std::exp;
using std::sinh;

const char* to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::GenericNonDiagonal: return "generic";
    case BoundaryKind::ConstrainedNonDiagonal: return "constrained";
    case BoundaryKind::Diagonal: return "diagonal";
  }
  return "unknown";
}

BoundaryParams generic_boundary(cplx eps, cplx sigma, cplx eps_prime, cplx sigma_prime) {
  BoundaryParams p;
  p.kind = BoundaryKind::GenericNonDiagonal;
  p.eps = eps;
  p.sigma = sigma;
  p.exp_neg_eps_prime = exp(-eps_prime);
  p.sigma_prime = sigma_prime;
  return p;
}

BoundaryParams diagonal_boundary() { return BoundaryParams{}; }

BoundaryParams apply_constraints(cplx eps, cplx sigma, cplx sigma_bar, cplx eta) {
  BoundaryParams p;
  p.kind = BoundaryKind::ConstrainedNonDiagonal;
  p.eps = eps;
  p.sigma = sigma;
  p.sigma_bar = sigma_bar;
  const double kk = -sigma_bar.real() / 4.0;
  if (sigma_bar.imag() == 0.0 && kk == std::round(kk)) p.k = static_cast<int>(std::lround(kk));
  p.exp_neg_eps_prime = -exp(-eps);
  p.sigma_prime = sigma + sigma_bar * eta;
  p.eta = eta;
  return p;
}

BoundaryParams boundary_at(const BoundaryParams& p, cplx eta) {
  if (p.kind != BoundaryKind::ConstrainedNonDiagonal) return p;
  return apply_constraints(p.eps, p.sigma, p.sigma_bar, eta);
}

ComplexMatrix build_M(cplx eta) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = exp(2.0 * eta);
  m(1, 1) = 1.0;
  m(2, 2) = exp(-2.0 * eta);
  return m;
}

ComplexMatrix build_Kminus_exp(cplx u, cplx eta, cplx exp_neg_eps, cplx sigma) {
  ComplexMatrix k = ComplexMatrix::Zero(3, 3);
  k(0, 0) = 1.0 + 2.0 * exp(-u) * exp_neg_eps * sinh(eta);
  k(0, 2) = 2.0 * exp_neg_eps * exp(sigma) * sinh(u);
  k(1, 1) = 1.0 - 2.0 * exp_neg_eps * sinh(u - eta);
  k(2, 0) = 2.0 * exp_neg_eps * exp(-sigma) * sinh(u);
  k(2, 2) = 1.0 + 2.0 * exp(u) * exp_neg_eps * sinh(eta);
  return k;
}

ComplexMatrix build_Kminus(cplx u, cplx eta, cplx eps, cplx sigma) {
  return build_Kminus_exp(u, eta, exp(-eps), sigma);
}

ComplexMatrix build_Kplus_exp(cplx u, cplx eta, cplx exp_neg_eps_prime, cplx sigma_prime) {
  return build_M(eta) * build_Kminus_exp(-u + 6.0 * eta + kI * kPi, eta, exp_neg_eps_prime, sigma_prime);
}

ComplexMatrix build_Kplus(cplx u, cplx eta, cplx eps_prime, cplx sigma_prime) {
  return build_Kplus_exp(u, eta, exp(-eps_prime), sigma_prime);
}

ComplexMatrix Kminus(cplx u, cplx eta, const BoundaryParams& p) {
  if (p.kind == BoundaryKind::Diagonal) return identity(3);
  return build_Kminus(u, eta, p.eps, p.sigma);
}

ComplexMatrix Kplus(cplx u, cplx eta, const BoundaryParams& p) {
  if (p.kind == BoundaryKind::Diagonal) return build_M(eta);
  const BoundaryParams q = boundary_at(p, eta);
  return build_Kplus_exp(u, eta, q.exp_neg_eps_prime, q.sigma_prime);
}

namespace {

ComplexMatrix spin_part(cplx u, cplx eps, cplx sigma) {
  const auto& s = spin1_ops();
  const cplx sh = sinh(u);
  return exp(-sigma - eps) * sh * (s.sm * s.sm) + exp(sigma - eps) * sh * (s.sp * s.sp) +
         2.0 * exp(-eps) * sh * (s.sz * s.sz);
}

}  // namespace

ComplexMatrix Kminus0(cplx u, cplx eps, cplx sigma) {
  return spin_part(u, eps, sigma) + (1.0 - 2.0 * exp(-eps) * sinh(u)) * identity(3);
}

ComplexMatrix Kplus0(cplx u, cplx eps, cplx sigma) {
  return -spin_part(u, eps, sigma) + (1.0 + 2.0 * exp(-eps) * sinh(u)) * identity(3);
}

ReflectionResiduals verify_reflection(cplx u1, cplx u2, cplx eta, const BoundaryParams& p) {
  const ComplexMatrix i3 = identity(3);
  auto first = [&](const ComplexMatrix& k) { return kron(k, i3); };
  auto second = [&](const ComplexMatrix& k) { return kron(i3, k); };

  ReflectionResiduals out;
  {
    const ComplexMatrix k1 = first(Kminus(u1, eta, p)), k2 = second(Kminus(u2, eta, p));
    const ComplexMatrix lhs = build_R(u1 - u2, eta) * k1 * build_R21(u1 + u2, eta) * k2;
    const ComplexMatrix rhs = k2 * build_R(u1 + u2, eta) * k1 * build_R21(u1 - u2, eta);
    out.re = relative_residual(lhs, rhs);
  }
  {
    const ComplexMatrix m = build_M(eta), mi = build_M(-eta);
    const ComplexMatrix k1 = first(Kplus(u1, eta, p)), k2 = second(Kplus(u2, eta, p));
    const cplx shifted = -u1 - u2 + 12.0 * eta;
    const ComplexMatrix lhs =
        build_R(u2 - u1, eta) * k1 * first(mi) * build_R21(shifted, eta) * first(m) * k2;
    const ComplexMatrix rhs =
        k2 * second(mi) * build_R(shifted, eta) * second(m) * k1 * build_R21(u2 - u1, eta);
    out.dual_re = relative_residual(lhs, rhs);
  }
  return out;
}

cplx w_theta(cplx theta, cplx eps) {
  const cplx s = sinh(theta);
  return 1.0 - 4.0 * exp(-2.0 * eps) * s * s;
}

bool w_is_singular(cplx theta, cplx eps) { return std::abs(w_theta(theta, eps)) < kWSingular; }

}  // namespace ikg
