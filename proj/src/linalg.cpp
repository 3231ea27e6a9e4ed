#include "ikg/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ikg/errors.hpp"
#include "ikg/kernels.hpp"

namespace ikg {

namespace {

std::span<const cplx> view(const ComplexMatrix& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
  }
}

void check_leg(int j, int legs, const char* what) {
  if (legs < 1 || j < 1 || j > legs) {
    throw InvalidArgument(std::string(what) + ": leg " + std::to_string(j) + " outside 1.." +
                          std::to_string(legs));
  }
}

// Stride of leg j in the basis index.
std::size_t stride(int j, int legs) { return pow3(legs - j); }

int digit(std::size_t idx, std::size_t s) { return static_cast<int>((idx / s) % 3); }

struct PairLayout {
  std::size_t sj, sl, dim;
};

PairLayout pair_layout(const ComplexMatrix& op, int j, int l, int legs, const char* what) {
  check_leg(j, legs, what);
  check_leg(l, legs, what);
  if (j == l) throw InvalidArgument(std::string(what) + ": legs must differ");
  if (op.rows() != 9 || op.cols() != 9) throw InvalidArgument(std::string(what) + ": op must be 9x9");
  return {stride(j, legs), stride(l, legs), pow3(legs)};
}

}  // namespace

std::size_t pow3(int n) {
  if (n < 0) throw InvalidArgument("pow3: negative exponent");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "kron");
  require_square(b, "kron");
  const Eigen::Index na = a.rows(), nb = b.rows();
  ComplexMatrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j) out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
  return out;
}

ComplexMatrix embed_site(const ComplexMatrix& op, int j, int legs) {
  ComplexMatrix out = ComplexMatrix::Zero(pow3(legs), pow3(legs));
  add_site(out, 1.0, op, j, legs);
  return out;
}

ComplexMatrix embed_pair(const ComplexMatrix& op, int j, int l, int legs) {
  ComplexMatrix out = ComplexMatrix::Zero(pow3(legs), pow3(legs));
  add_pair(out, 1.0, op, j, l, legs);
  return out;
}

void add_site(ComplexMatrix& target, cplx alpha, const ComplexMatrix& op, int j, int legs) {
  check_leg(j, legs, "add_site");
  if (op.rows() != 3 || op.cols() != 3) throw InvalidArgument("add_site: op must be 3x3");
  const std::size_t dim = pow3(legs), s = stride(j, legs);
  if (static_cast<std::size_t>(target.rows()) != dim || static_cast<std::size_t>(target.cols()) != dim)
    throw InvalidArgument("add_site: target dimension mismatch");
  for (std::size_t row = 0; row < dim; ++row) {
    const int dr = digit(row, s);
    const std::size_t base = row - dr * s;
    for (int c = 0; c < 3; ++c) {
      const cplx v = op(dr, c);
      if (v != cplx{}) target(row, base + c * s) += alpha * v;
    }
  }
}

void add_pair(ComplexMatrix& target, cplx alpha, const ComplexMatrix& op, int j, int l, int legs) {
  const auto L = pair_layout(op, j, l, legs, "add_pair");
  if (static_cast<std::size_t>(target.rows()) != L.dim || static_cast<std::size_t>(target.cols()) != L.dim)
    throw InvalidArgument("add_pair: target dimension mismatch");
  for (std::size_t row = 0; row < L.dim; ++row) {
    const int dj = digit(row, L.sj), dl = digit(row, L.sl);
    const std::size_t base = row - dj * L.sj - dl * L.sl;
    const int r = 3 * dj + dl;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const cplx v = op(r, 3 * a + b);
        if (v != cplx{}) target(row, base + a * L.sj + b * L.sl) += alpha * v;
      }
  }
}

void apply_pair_right(ComplexMatrix& x, const ComplexMatrix& op, int j, int l, int legs) {
  const auto L = pair_layout(op, j, l, legs, "apply_pair_right");
  if (static_cast<std::size_t>(x.cols()) != L.dim) throw InvalidArgument("apply_pair_right: dimension mismatch");
  const std::size_t n = static_cast<std::size_t>(x.rows());
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (std::size_t col = 0; col < L.dim; ++col) {
    const int dj = digit(col, L.sj), dl = digit(col, L.sl);
    const std::size_t base = col - dj * L.sj - dl * L.sl;
    const int c = 3 * dj + dl;
    std::span<cplx> y(out.col(col).data(), n);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const cplx v = op(3 * a + b, c);
        if (v == cplx{}) continue;
        const std::size_t row = base + a * L.sj + b * L.sl;
        kernels::axpy(y, v, std::span<const cplx>(x.col(row).data(), n));
      }
  }
  x.swap(out);
}

void apply_site_right(ComplexMatrix& x, const ComplexMatrix& op, int j, int legs) {
  check_leg(j, legs, "apply_site_right");
  if (op.rows() != 3 || op.cols() != 3) throw InvalidArgument("apply_site_right: op must be 3x3");
  const std::size_t dim = pow3(legs), s = stride(j, legs);
  if (static_cast<std::size_t>(x.cols()) != dim) throw InvalidArgument("apply_site_right: dimension mismatch");
  const std::size_t n = static_cast<std::size_t>(x.rows());
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (std::size_t col = 0; col < dim; ++col) {
    const int dc = digit(col, s);
    const std::size_t base = col - dc * s;
    std::span<cplx> y(out.col(col).data(), n);
    for (int a = 0; a < 3; ++a) {
      const cplx v = op(a, dc);
      if (v == cplx{}) continue;
      kernels::axpy(y, v, std::span<const cplx>(x.col(base + a * s).data(), n));
    }
  }
  x.swap(out);
}

ComplexMatrix partial_trace_aux(const ComplexMatrix& m) {
  require_square(m, "partial_trace_aux");
  if (m.rows() % 3 != 0) throw InvalidArgument("partial_trace_aux: dimension not divisible by 3");
  const Eigen::Index d = m.rows() / 3;
  return m.block(0, 0, d, d) + m.block(d, d, d, d) + m.block(2 * d, 2 * d, d, d);
}

const ComplexMatrix& swap9() {
  static const ComplexMatrix p = [] {
    ComplexMatrix s = ComplexMatrix::Zero(9, 9);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) s(3 * i + k, 3 * k + i) = 1.0;
    return s;
  }();
  return p;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m) {
  if (m.rows() != 9 || m.cols() != 9) throw InvalidArgument("partial_transpose_second: expects 9x9");
  ComplexMatrix out(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) out(3 * i + k, 3 * j + l) = m(3 * i + l, 3 * j + k);
  return out;
}

double max_entry(const ComplexMatrix& m) { return kernels::max_abs(view(m)); }

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("max_entry_diff: shape mismatch");
  return kernels::max_abs_diff(view(a), view(b));
}

double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = std::max({1.0, max_entry(a), max_entry(b)});
  return max_entry_diff(a, b) / scale;
}

double comm_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "comm_norm");
  require_square(b, "comm_norm");
  if (a.rows() != b.rows()) throw InvalidArgument("comm_norm: dimension mismatch");
  const ComplexMatrix ab = a * b;
  const ComplexMatrix ba = b * a;
  return max_entry_diff(ab, ba) / std::max(max_entry(a) * max_entry(b), 1.0);
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  const ComplexMatrix h = m.adjoint();
  return max_entry_diff(m, h);
}

namespace {

bool lex_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Level> cluster_eigenvalues(std::vector<cplx> values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (std::abs(values[i] - values[k]) <= tol) parent[find(i)] = find(k);

  std::vector<std::size_t> root_slot(n, n);
  std::vector<cplx> sums;
  std::vector<int> counts;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (root_slot[r] == n) {
      root_slot[r] = sums.size();
      sums.push_back(0.0);
      counts.push_back(0);
    }
    sums[root_slot[r]] += values[i];
    counts[root_slot[r]] += 1;
  }
  std::vector<Level> levels;
  for (std::size_t c = 0; c < sums.size(); ++c) levels.push_back({sums[c] / double(counts[c]), counts[c]});
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return lex_less(a.value, b.value); });
  return levels;
}

EigenDecomposition eigen_decompose(const ComplexMatrix& m, bool hermitian_hint) {
  require_square(m, "eig");
  if (!m.allFinite()) throw InvalidArgument("eig: non-finite entries");
  EigenDecomposition out;
  if (hermitian_hint) {
    const double defect = hermiticity_defect(m);
    if (defect > kDegeneracyTol * std::max(1.0, max_entry(m)))
      throw NumericalFailure("eig: Hermitian hint violated (defect " + std::to_string(defect) + ")");
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw NumericalFailure("eig: Hermitian eigen-iteration did not converge");
    out.values = solver.eigenvalues().cast<cplx>();
    out.vectors = solver.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalFailure("eig: eigen-iteration did not converge");
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  }
  return out;
}

Spectrum eig(const ComplexMatrix& m, bool hermitian_hint, double tol) {
  require_square(m, "eig");
  if (!m.allFinite()) throw InvalidArgument("eig: non-finite entries");
  Spectrum s;
  if (hermitian_hint) {
    s.eigenvalues.resize(m.rows());
    const auto d = eigen_decompose(m, true);
    for (Eigen::Index i = 0; i < d.values.size(); ++i) s.eigenvalues[i] = {d.values[i].real(), 0.0};
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
    if (solver.info() != Eigen::Success) throw NumericalFailure("eig: eigen-iteration did not converge");
    const auto& v = solver.eigenvalues();
    s.eigenvalues.assign(v.data(), v.data() + v.size());
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), lex_less);
  s.levels = cluster_eigenvalues(s.eigenvalues, tol);
  return s;
}

}  // namespace ikg
