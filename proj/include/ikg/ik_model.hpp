#pragma once

// Izergin-Korepin (A2^(2)) R-matrix, its classical r-matrix and the spin-1
// operators, plus residual evaluators for the defining identities.

#include "ikg/linalg.hpp"

namespace ikg {

// The ten non-zero entry functions of R (or of r, for the classical limit).
struct REntries {
  cplx a, b, c, d, e, e_bar, f, f_bar, g, g_bar;
};

REntries r_entries(cplx u, cplx eta);
REntries classical_r_entries(cplx u);

// sinh(eta) - sinh(5 eta); R(0) = kappa P.
cplx kappa(cplx eta);

// Places the entries into the 9x9 layout shared by R and r.
ComplexMatrix layout_R(const REntries& e);

ComplexMatrix build_R(cplx u, cplx eta);

// R_21(u) = P R(u) P.
ComplexMatrix build_R21(cplx u, cplx eta);

ComplexMatrix build_classical_r(cplx u);

// Crossing matrix antidiag(-e^{-eta}, 1, -e^{eta}).
ComplexMatrix build_V(cplx eta);

struct Spin1Ops {
  ComplexMatrix sp, sm, sz;
};

const Spin1Ops& spin1_ops();

// r(u) assembled from spin-1 operators on a two-site space.
ComplexMatrix classical_r_from_spins(cplx u);

// Residuals, all normalized by max(1, largest entry of the two sides).
double verify_initial_condition(cplx eta);
double verify_quasi_classical(cplx u);  // R(u, 0) vs sinh(u) I
double verify_unitarity(cplx u, cplx eta);
double verify_crossing(cplx u, cplx eta);
double verify_qybe(cplx u1, cplx u2, cplx u3, cplx eta);
double verify_r_spin_expansion(cplx u);

// max|R(u,eta) - sinh(u) I - eta r(u)|, used for the order-of-accuracy check.
double quasi_classical_remainder(cplx u, cplx eta);

}  // namespace ikg
