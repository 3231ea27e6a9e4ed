#pragma once

// Reference constructions used only by the tests. They are deliberately
// naive: explicit loops, permutation matrices and full products, so they do
// not share code paths with the library routines they check.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline int ipow3(int n) {
  int p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline std::vector<int> digits(int index, int legs) {
  std::vector<int> d(legs);
  for (int k = legs - 1; k >= 0; --k) {
    d[k] = index % 3;
    index /= 3;
  }
  return d;
}

inline int undigits(const std::vector<int>& d) {
  int index = 0;
  for (int x : d) index = 3 * index + x;
  return index;
}

// Operator mapping the basis state with leg digits d to the state whose leg
// perm[k] carries d[k] (0-based legs).
inline Mat leg_permutation(const std::vector<int>& perm) {
  const int legs = static_cast<int>(perm.size());
  const int dim = ipow3(legs);
  Mat p = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto d = digits(i, legs);
    std::vector<int> e(legs);
    for (int k = 0; k < legs; ++k) e[perm[k]] = d[k];
    p(undigits(e), i) = 1.0;
  }
  return p;
}

// op (9x9) on 1-based legs (j, l) of `legs`: kron(op, I) conjugated by the
// permutation that carries legs (1, 2) onto (j, l).
inline Mat embed_pair(const Mat& op, int j, int l, int legs) {
  std::vector<int> perm(legs);
  perm[0] = j - 1;
  perm[1] = l - 1;
  int next = 2;
  for (int k = 0; k < legs; ++k)
    if (k != j - 1 && k != l - 1) perm[next++] = k;
  const Mat p = leg_permutation(perm);
  const Mat full = kron(op, Mat::Identity(ipow3(legs - 2), ipow3(legs - 2)));
  return p * full * p.transpose();
}

inline Mat embed_site(const Mat& op, int j, int legs) {
  return kron(kron(Mat::Identity(ipow3(j - 1), ipow3(j - 1)), op), Mat::Identity(ipow3(legs - j), ipow3(legs - j)));
}

inline Mat partial_trace_first(const Mat& m) {
  const int d = static_cast<int>(m.rows()) / 3;
  Mat out = Mat::Zero(d, d);
  for (int s = 0; s < 3; ++s) out += m.block(s * d, s * d, d, d);
  return out;
}

inline Mat swap9() { return leg_permutation({1, 0}); }

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Eigenvalues via Eigen's general complex solver, sorted by (Re, Im).
inline std::vector<cplx> eigenvalues(const Mat& m) {
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  std::vector<cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return v;
}

// Smallest distance from z to any entry of v.
inline double nearest(const std::vector<cplx>& v, cplx z) {
  double best = 1e300;
  for (cplx x : v) best = std::min(best, std::abs(x - z));
  return best;
}

inline int count_near(const std::vector<cplx>& v, cplx z, double tol) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [&](cplx x) { return std::abs(x - z) < tol; }));
}

inline Mat random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(u(rng), u(rng));
  return m;
}

inline cplx random_cplx(std::mt19937_64& rng, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  return {u(rng), u(rng)};
}

}  // namespace oracle
