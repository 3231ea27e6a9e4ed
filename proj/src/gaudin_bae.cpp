#include "ikg/gaudin_bae.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ikg/boundary.hpp"
#include "ikg/errors.hpp"

namespace ikg {

using std::cosh;
using std::exp;
using std::sinh;
using std::tanh;

namespace {


bool periodic_eval(const GaudinParams& p, const std::vector<cplx>& mu, double tol, std::vector<cplx>& f,
                   ComplexMatrix* jac) {
  const std::size_t m = mu.size();
  f.assign(m, 0.0);
  if (jac) *jac = ComplexMatrix::Zero(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (cplx t : p.theta) {
      const cplx z = (mu[j] - t) / 2.0;
      const cplx s = sinh(z);
      if (std::abs(s) < tol) return false;
      f[j] += cosh(z) / s;
      if (jac) (*jac)(j, j) -= 0.5 / (s * s);
    }
    for (std::size_t l = 0; l < m; ++l) {
      if (l == j) continue;
      const cplx x = (mu[j] - mu[l]) / 2.0;
      const cplx s = sinh(x), c = cosh(x);
      if (std::abs(s) < tol || std::abs(c) < tol) return false;
      f[j] += -2.0 * c / s + s / c;
      if (jac) {
        const cplx d = 1.0 / (s * s) + 0.5 / (c * c);
        (*jac)(j, j) += d;
        (*jac)(j, l) -= d;
      }
    }
  }
  return true;
}

bool open_eval(const GaudinParams& p, const std::vector<cplx>& mu, double tol, std::vector<cplx>& f,
               ComplexMatrix* jac) {
  const std::size_t m = mu.size();
  const bool constrained = p.kind == GaudinKind::Constrained;
  const cplx a = exp(2.0 * p.eps) + 4.0;
  f.assign(m, 0.0);
  if (jac) *jac = ComplexMatrix::Zero(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const cplx x = mu[j];
    for (cplx t : p.theta) {
      const cplx d = x - cosh(t);
      if (std::abs(d) < tol) return false;
      f[j] += 1.0 / d;
      if (jac) (*jac)(j, j) -= 1.0 / (d * d);
    }
    if (constrained) {
      const cplx d = a - 4.0 * x * x;
      if (std::abs(d) < tol) return false;
      f[j] += 4.0 * x / d;
      if (jac) (*jac)(j, j) += (4.0 * d + 32.0 * x * x) / (d * d);
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      const cplx y = mu[k];
      if (std::abs(x - y) < tol || std::abs(x + y) < tol) return false;
      const cplx d = x * x - y * y, n = x + 3.0 * y;
      f[j] -= n / d;
      if (jac) {
        (*jac)(j, j) -= (d - n * 2.0 * x) / (d * d);
        (*jac)(j, k) = -(3.0 * d + n * 2.0 * y) / (d * d);
      }
    }
  }
  return true;
}

void check_site(int j, const GaudinParams& p) {
  if (j < 1 || j > p.n()) throw InvalidArgument("site out of range");
}

cplx bulk_energy(int j, const GaudinParams& p, bool reflected) {
  const cplx tj = p.theta[j - 1];
  cplx e = 0.0;
  for (int k = 1; k <= p.n(); ++k) {
    if (k == j) continue;
    const cplx xm = tj - p.theta[k - 1];
    e += (1.0 - 5.0 * cosh(xm)) / sinh(xm);
    if (reflected) {
      const cplx xp = tj + p.theta[k - 1];
      e += (1.0 - 5.0 * cosh(xp)) / sinh(xp);
    }
  }
  return e;
}

cplx open_root_energy(int j, const GaudinParams& p, const std::vector<cplx>& roots) {
  const cplx tj = p.theta[j - 1];
  cplx e = -6.0 / tanh(tj) - tanh(tj);
  for (cplx m : roots) {
    const cplx d = cosh(tj) - m;
    if (std::abs(d) < kRootPoleGuard) throw SingularConfiguration("energy: root at cosh(theta_j)");
    e += 4.0 * sinh(tj) / d;
  }
  return e + bulk_energy(j, p, true);
}

}  // namespace

bool evaluate_gaudin_bae(const GaudinParams& p, const std::vector<cplx>& x, double pole_tol, std::vector<cplx>& f,
                         ComplexMatrix* jac) {
  if (p.kind == GaudinKind::Periodic) return periodic_eval(p, x, pole_tol, f, jac);
  return open_eval(p, x, pole_tol, f, jac);
}

std::vector<cplx> gaudin_bae_residual(const GaudinParams& p, const std::vector<cplx>& roots) {
  std::vector<cplx> f;
  if (!evaluate_gaudin_bae(p, roots, kRootPoleGuard, f, nullptr))
    throw SingularConfiguration("Bethe equations evaluated on a pole (coincident roots or root on a singular point)");
  return f;
}

double gaudin_bae_residual_norm(const GaudinParams& p, const std::vector<cplx>& roots) {
  double n = 0.0;
  for (cplx v : gaudin_bae_residual(p, roots)) n = std::max(n, std::abs(v));
  return n;
}

cplx energy_periodic(int j, const GaudinParams& p, const std::vector<cplx>& roots) {
  check_site(j, p);
  const cplx tj = p.theta[j - 1];
  cplx e = bulk_energy(j, p, false);
  for (cplx m : roots) {
    const cplx s = sinh((tj - m) / 2.0);
    if (std::abs(s) < kRootPoleGuard) throw SingularConfiguration("energy: root at theta_j");
    e += 2.0 * cosh((tj - m) / 2.0) / s;
  }
  return e;
}

cplx energy_constrained(int j, const GaudinParams& p, const std::vector<cplx>& roots) {
  check_site(j, p);
  const cplx tj = p.theta[j - 1];
  const cplx w = w_theta(tj, p.eps);
  if (std::abs(w) < kRootPoleGuard) throw SingularConfiguration("energy: w(theta_j) vanishes");
  return open_root_energy(j, p, roots) + 4.0 * exp(-2.0 * p.eps) * sinh(2.0 * tj) / w;
}

cplx energy_constrained_printed(int j, const GaudinParams& p, const std::vector<cplx>& roots) {
  check_site(j, p);
  const cplx s2 = sinh(2.0 * p.theta[j - 1]);
  return open_root_energy(j, p, roots) + 4.0 * exp(-2.0 * p.eps) * s2 / (1.0 - 4.0 * exp(-2.0 * p.eps) * s2 * s2);
}

cplx energy_diagonal(int j, const GaudinParams& p, const std::vector<cplx>& roots) {
  check_site(j, p);
  return open_root_energy(j, p, roots);
}

cplx energy(int j, const GaudinParams& p, const std::vector<cplx>& roots) {
  switch (p.kind) {
    case GaudinKind::Periodic: return energy_periodic(j, p, roots);
    case GaudinKind::Constrained: return energy_constrained(j, p, roots);
    case GaudinKind::Diagonal: return energy_diagonal(j, p, roots);
  }
  throw InvalidArgument("energy: unknown kind");
}

cplx fold_periodic(cplx mu) {
  double im = std::remainder(mu.imag(), 2.0 * kPi);  // [-pi, pi]
  if (im <= -kPi) im += 2.0 * kPi;
  return {mu.real(), im};
}

RootSet canonicalize(RootSet rs) {
  if (rs.kind == GaudinKind::Periodic)
    for (cplx& r : rs.roots) r = fold_periodic(r);
  std::sort(rs.roots.begin(), rs.roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  rs.m = static_cast<int>(rs.roots.size());
  rs.canonical = true;
  return rs;
}

double root_set_distance(GaudinKind kind, const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const auto dist = [&](cplx x, cplx y) {
    cplx d = x - y;
    if (kind == GaudinKind::Periodic) d = fold_periodic(d);
    return std::abs(d);
  };
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && worst < best; ++i) worst = std::max(worst, dist(a[i], b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ikg
