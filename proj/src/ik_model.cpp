#include "ikg/ik_model.hpp"

#include <cmath>

namespace ikg {

using std::cosh;
using std::exp;
using std::sinh;

REntries r_entries(cplx u, cplx eta) {
  const cplx s2 = sinh(2.0 * eta);
  REntries r;
  r.a = sinh(u - 3.0 * eta) - sinh(5.0 * eta) + sinh(3.0 * eta) + sinh(eta);
  r.b = sinh(u - 3.0 * eta) + sinh(3.0 * eta);
  r.c = sinh(u - 5.0 * eta) + sinh(eta);
  r.d = sinh(u - eta) + sinh(eta);
  r.e = -2.0 * exp(-u / 2.0) * s2 * cosh(u / 2.0 - 3.0 * eta);
  r.e_bar = -2.0 * exp(u / 2.0) * s2 * cosh(u / 2.0 - 3.0 * eta);
  r.f = -2.0 * exp(-u + 2.0 * eta) * sinh(eta) * s2 - exp(-eta) * sinh(4.0 * eta);
  r.f_bar = 2.0 * exp(u - 2.0 * eta) * sinh(eta) * s2 - exp(eta) * sinh(4.0 * eta);
  r.g = 2.0 * exp(-u / 2.0 + 2.0 * eta) * sinh(u / 2.0) * s2;
  r.g_bar = -2.0 * exp(u / 2.0 - 2.0 * eta) * sinh(u / 2.0) * s2;
  return r;
}

REntries classical_r_entries(cplx u) {
  REntries r;
  r.a = -3.0 * cosh(u) - 1.0;
  r.b = 3.0 - 3.0 * cosh(u);
  r.c = 1.0 - 5.0 * cosh(u);
  r.d = 1.0 - cosh(u);
  r.e = -4.0 * exp(-u / 2.0) * cosh(u / 2.0);
  r.e_bar = -4.0 * exp(u / 2.0) * cosh(u / 2.0);
  r.f = -4.0;
  r.f_bar = -4.0;
  r.g = 4.0 * exp(-u / 2.0) * sinh(u / 2.0);
  r.g_bar = -4.0 * exp(u / 2.0) * sinh(u / 2.0);
  return r;
}

cplx kappa(cplx eta) { return sinh(eta) - sinh(5.0 * eta); }

ComplexMatrix layout_R(const REntries& e) {
  ComplexMatrix r = ComplexMatrix::Zero(9, 9);
  r(0, 0) = e.c;
  r(1, 1) = e.b;
  r(1, 3) = e.e;
  r(2, 2) = e.d;
  r(2, 4) = e.g;
  r(2, 6) = e.f;
  r(3, 1) = e.e_bar;
  r(3, 3) = e.b;
  r(4, 2) = e.g_bar;
  r(4, 4) = e.a;
  r(4, 6) = e.g;
  r(5, 5) = e.b;
  r(5, 7) = e.e;
  r(6, 2) = e.f_bar;
  r(6, 4) = e.g_bar;
  r(6, 6) = e.d;
  r(7, 5) = e.e_bar;
  r(7, 7) = e.b;
  r(8, 8) = e.c;
  return r;
}

ComplexMatrix build_R(cplx u, cplx eta) { return layout_R(r_entries(u, eta)); }

ComplexMatrix build_R21(cplx u, cplx eta) { return swap9() * build_R(u, eta) * swap9(); }

ComplexMatrix build_classical_r(cplx u) { return layout_R(classical_r_entries(u)); }

ComplexMatrix build_V(cplx eta) {
  ComplexMatrix v = ComplexMatrix::Zero(3, 3);
  v(0, 2) = -exp(-eta);
  v(1, 1) = 1.0;
  v(2, 0) = -exp(eta);
  return v;
}

const Spin1Ops& spin1_ops() {
  static const Spin1Ops ops = [] {
    Spin1Ops s;
    s.sz = ComplexMatrix::Zero(3, 3);
    s.sz(0, 0) = 1.0;
    s.sz(2, 2) = -1.0;
    s.sp = ComplexMatrix::Zero(3, 3);
    s.sp(0, 1) = std::sqrt(2.0);
    s.sp(1, 2) = std::sqrt(2.0);
    s.sm = s.sp.transpose();
    return s;
  }();
  return ops;
}

ComplexMatrix classical_r_from_spins(cplx u) {
  const auto& s = spin1_ops();
  const ComplexMatrix i3 = identity(3);
  auto pair = [&](const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); };
  const ComplexMatrix z2 = s.sz * s.sz;
  const ComplexMatrix p2 = s.sp * s.sp, m2 = s.sm * s.sm;
  const ComplexMatrix zp = s.sz * s.sp, pz = s.sp * s.sz, mz = s.sm * s.sz, zm = s.sz * s.sm;
  const cplx ch = cosh(u), chh = cosh(u / 2.0), shh = sinh(u / 2.0);
  const cplx em = exp(-u / 2.0), ep = exp(u / 2.0);

  ComplexMatrix r = -(3.0 * ch + 1.0) * identity(9);
  r += 4.0 * (pair(z2, i3) + pair(i3, z2));
  r -= 6.0 * pair(z2, z2);
  r -= 2.0 * ch * pair(s.sz, s.sz);
  r -= pair(p2, m2) + pair(m2, p2);
  r -= 2.0 * em * chh * (pair(zp, mz) + pair(pz, zm));
  r -= 2.0 * em * shh * (pair(zp, zm) + pair(pz, mz));
  r -= 2.0 * ep * chh * (pair(mz, zp) + pair(zm, pz));
  r += 2.0 * ep * shh * (pair(mz, pz) + pair(zm, zp));
  return r;
}

double verify_initial_condition(cplx eta) {
  const ComplexMatrix rhs = kappa(eta) * swap9();
  return relative_residual(build_R(0.0, eta), rhs);
}

double verify_quasi_classical(cplx u) {
  const ComplexMatrix rhs = sinh(u) * identity(9);
  return relative_residual(build_R(u, 0.0), rhs);
}

double verify_unitarity(cplx u, cplx eta) {
  const ComplexMatrix lhs = build_R(u, eta) * build_R21(-u, eta);
  const ComplexMatrix rhs = (r_entries(u, eta).c * r_entries(-u, eta).c) * identity(9);
  return relative_residual(lhs, rhs);
}

double verify_crossing(cplx u, cplx eta) {
  const ComplexMatrix v1 = kron(build_V(eta), identity(3));
  const ComplexMatrix crossed = partial_transpose_second(build_R(-u + 6.0 * eta + kI * kPi, eta));
  const ComplexMatrix rhs = v1 * crossed * v1.inverse();
  return relative_residual(build_R(u, eta), rhs);
}

double verify_qybe(cplx u1, cplx u2, cplx u3, cplx eta) {
  const ComplexMatrix r12 = embed_pair(build_R(u1 - u2, eta), 1, 2, 3);
  const ComplexMatrix r13 = embed_pair(build_R(u1 - u3, eta), 1, 3, 3);
  const ComplexMatrix r23 = embed_pair(build_R(u2 - u3, eta), 2, 3, 3);
  const ComplexMatrix lhs = r12 * r13 * r23;
  const ComplexMatrix rhs = r23 * r13 * r12;
  return relative_residual(lhs, rhs);
}

double verify_r_spin_expansion(cplx u) {
  return relative_residual(classical_r_from_spins(u), build_classical_r(u));
}

double quasi_classical_remainder(cplx u, cplx eta) {
  const ComplexMatrix approx = sinh(u) * identity(9) + eta * build_classical_r(u);
  return max_entry_diff(build_R(u, eta), approx);
}

}  // namespace ikg
