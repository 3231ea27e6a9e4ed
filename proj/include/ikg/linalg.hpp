#pragma once

// Dense complex linear algebra shared by every module.
//
// Tensor-leg convention: for an operator on `legs` spin-1 factors, leg 1 is the
// most significant digit of the basis index and leg `legs` the least
// significant. When an auxiliary space is attached it is leg 1 and the chain
// sites shift to legs 2..N+1. Basis digit 0 is the S^z = +1 state.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace ikg {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Absolute clustering tolerance for degenerate eigenvalues.
inline constexpr double kDegeneracyTol = 1e-7;

// 3^n.
std::size_t pow3(int n);

ComplexMatrix identity(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// I ⊗ ... ⊗ op ⊗ ... ⊗ I with the 3x3 `op` on leg j (1-based) of `legs`.
ComplexMatrix embed_site(const ComplexMatrix& op, int j, int legs);

// The 9x9 `op` placed on legs (j, l); op's first tensor factor acts on leg j.
// j may be larger than l.
ComplexMatrix embed_pair(const ComplexMatrix& op, int j, int l, int legs);

// target += alpha * embed_pair(op, j, l, legs), without forming the embedding.
void add_pair(ComplexMatrix& target, cplx alpha, const ComplexMatrix& op, int j, int l, int legs);
void add_site(ComplexMatrix& target, cplx alpha, const ComplexMatrix& op, int j, int legs);

// x <- x * embed_pair(op, j, l, legs) in O(9 dim^2) using column axpys.
void apply_pair_right(ComplexMatrix& x, const ComplexMatrix& op, int j, int l, int legs);
void apply_site_right(ComplexMatrix& x, const ComplexMatrix& op, int j, int legs);

// Trace over leg 1 of a 3*D x 3*D operator: (tr_0 M)[a,b] = sum_s M[(s,a),(s,b)].
ComplexMatrix partial_trace_aux(const ComplexMatrix& m);

// Swap of the two spin-1 legs of a 9-dim space.
const ComplexMatrix& swap9();

// Partial transpose on the second factor of a two-site 9x9 operator.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m);

// Largest entry magnitude.
double max_entry(const ComplexMatrix& m);

// Largest entrywise difference |a - b|.
double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max|a - b| / max(1, max|a|, max|b|).
double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b);

// max|AB - BA| / max(max|A| * max|B|, 1).
double comm_norm(const ComplexMatrix& a, const ComplexMatrix& b);

// max|M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

struct Level {
  cplx value;
  int multiplicity = 0;
};

// Eigenvalues clustered into degenerate levels.
struct Spectrum {
  std::vector<cplx> eigenvalues;  // all eigenvalues, sorted by (Re, Im)
  std::vector<Level> levels;      // clusters, sorted by (Re, Im) of the mean

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Groups sorted-or-not eigenvalues into single-linkage clusters at `tol`.
std::vector<Level> cluster_eigenvalues(std::vector<cplx> values, double tol);

// Eigenvalues of `m` clustered at `tol`. With `hermitian_hint` the input must
// be Hermitian to within tol * max(1, max|m|) and the values come back real.
// Throws NumericalFailure on non-convergence or a violated hint.
Spectrum eig(const ComplexMatrix& m, bool hermitian_hint, double tol = kDegeneracyTol);

struct EigenDecomposition {
  ComplexVector values;
  ComplexMatrix vectors;  // columns
};

EigenDecomposition eigen_decompose(const ComplexMatrix& m, bool hermitian_hint);

}  // namespace ikg
