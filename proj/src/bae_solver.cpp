#include "ikg/bae_solver.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "ikg/errors.hpp"

namespace ikg {

using std::cosh;
using std::exp;

namespace {

using System = std::function<bool(const std::vector<cplx>&, std::vector<cplx>&, ComplexMatrix*)>;

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (cplx z : v) m = std::max(m, std::abs(z));
  return std::isfinite(m) ? m : std::numeric_limits<double>::infinity();
}

// Damped Newton with backtracking on max|f|. `admissible` rejects iterates
// outside the search domain.
bool damped_newton(const System& sys, std::vector<cplx>& x, double tol, int max_iter, int max_halvings,
                   const std::function<bool(const std::vector<cplx>&)>& admissible) {
  const std::size_t m = x.size();
  std::vector<cplx> f, fn, xn(m);
  ComplexMatrix jac;
  if (!sys(x, f, &jac)) return false;
  double norm = max_abs(f);
  for (int it = 0; it <= max_iter; ++it) {
    if (!std::isfinite(norm)) return false;
    if (norm < tol) return true;
    if (it == max_iter) break;
    Eigen::PartialPivLU<ComplexMatrix> lu(jac);
    ComplexVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = -f[i];
    const ComplexVector dx = lu.solve(rhs);
    if (!dx.allFinite()) return false;
    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= max_halvings; ++h, t *= 0.5) {
      for (std::size_t i = 0; i < m; ++i) xn[i] = x[i] + t * dx[i];
      if (!admissible(xn)) continue;
      if (!sys(xn, fn, nullptr)) continue;
      const double nn = max_abs(fn);
      if (nn < (1.0 - 1e-4 * t) * norm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) return false;
    x = xn;
    if (!sys(x, f, &jac)) return false;
    norm = max_abs(f);
  }
  return false;
}

// A rational residual f_j = sum_t n_t / d_t in cleared form sum_t n_t prod_{s != t} d_s.
struct Terms {
  std::vector<cplx> num, den;
  void add(cplx n, cplx d) {
    num.push_back(n);
    den.push_back(d);
  }
  cplx cleared() const {
    const std::size_t k = den.size();
    std::vector<cplx> prefix(k + 1, 1.0);
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * den[i];
    cplx suffix = 1.0, g = 0.0;
    for (std::size_t i = k; i-- > 0;) {
      g += num[i] * prefix[i] * suffix;
      suffix *= den[i];
    }
    return g;
  }
};

// Cleared equations: open kinds in the cosh variable, periodic in z = e^mu.
void cleared_values(const GaudinParams& p, const std::vector<cplx>& x, std::vector<cplx>& g) {
  const std::size_t m = x.size();
  g.assign(m, 0.0);
  if (p.kind == GaudinKind::Periodic) {
    std::vector<cplx> t(p.theta.size());
    for (std::size_t l = 0; l < t.size(); ++l) t[l] = exp(p.theta[l]);
    for (std::size_t j = 0; j < m; ++j) {
      Terms terms;
      for (cplx tl : t) terms.add(x[j] + tl, x[j] - tl);
      for (std::size_t l = 0; l < m; ++l) {
        if (l == j) continue;
        terms.add(-2.0 * (x[j] + x[l]), x[j] - x[l]);
        terms.add(x[j] - x[l], x[j] + x[l]);
      }
      g[j] = terms.cleared();
    }
    return;
  }
  const cplx a = exp(2.0 * p.eps) + 4.0;
  for (std::size_t j = 0; j < m; ++j) {
    Terms terms;
    for (cplx th : p.theta) terms.add(1.0, x[j] - cosh(th));
    if (p.kind == GaudinKind::Constrained) terms.add(4.0 * x[j], a - 4.0 * x[j] * x[j]);
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) terms.add(-(x[j] + 3.0 * x[k]), x[j] * x[j] - x[k] * x[k]);
    g[j] = terms.cleared();
  }
}

bool cleared_system(const GaudinParams& p, const std::vector<cplx>& x, std::vector<cplx>& g, ComplexMatrix* jac) {
  cleared_values(p, x, g);
  if (!jac) return true;
  const std::size_t m = x.size();
  jac->resize(m, m);
  std::vector<cplx> xp = x, gp, gm;
  for (std::size_t k = 0; k < m; ++k) {
    const double h = 1e-7 * (1.0 + std::abs(x[k]));
    xp[k] = x[k] + h;
    cleared_values(p, xp, gp);
    xp[k] = x[k] - h;
    cleared_values(p, xp, gm);
    xp[k] = x[k];
    for (std::size_t j = 0; j < m; ++j) (*jac)(j, k) = (gp[j] - gm[j]) / (2.0 * h);
  }
  return true;
}

bool within_bounds(const GaudinParams& p, const std::vector<cplx>& x, const SolverOptions& opt) {
  for (cplx z : x) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    if (p.kind == GaudinKind::Periodic ? std::abs(z.real()) > opt.periodic_real_bound
                                       : std::abs(z) > opt.open_root_bound)
      return false;
  }
  return true;
}

bool distinct(const GaudinParams& p, const std::vector<cplx>& x, double d) {
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      if (p.kind == GaudinKind::Periodic) {
        if (std::abs(fold_periodic(x[a] - x[b])) <= d) return false;
      } else if (std::abs(x[a] - x[b]) <= d || std::abs(x[a] + x[b]) <= d) {
        return false;
      }
    }
  return true;
}

}  // namespace

std::vector<cplx> seed_point(const GaudinParams& p, int m, std::uint64_t seed, int s) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(m)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<cplx> centres;
  for (cplx t : p.theta) {
    if (p.kind == GaudinKind::Periodic) {
      centres.push_back(t);
      centres.push_back(t + kI * kPi);
    } else {
      centres.push_back(cosh(t));
    }
  }
  std::vector<cplx> x;
  const auto disk = [&] {
    const cplx c = centres[static_cast<std::size_t>(uni(rng) * centres.size()) % centres.size()];
    return c + 3.0 * std::sqrt(uni(rng)) * std::polar(1.0, 2.0 * kPi * uni(rng));
  };
  const auto box = [&] { return cplx(-5.0 + 10.0 * uni(rng), -kPi + 2.0 * kPi * uni(rng)); };
  const auto far_real = [&] {
    const double mag = std::exp(std::log(5.0) + std::log(20.0) * uni(rng));  // |x| in [5, 100]
    return cplx(uni(rng) < 0.5 ? -mag : mag, 0.0);
  };
  if (p.kind == GaudinKind::Periodic) {
    for (int i = 0; i < m; ++i) x.push_back(uni(rng) < 0.5 ? disk() : box());
    return x;
  }
  // Open roots are real or come in conjugate pairs, and isolated roots far out
  // on the real axis occur (their basin is thin), so a share of the starts is
  // placed near the real axis, optionally with one far real component.
  double reach = 1.0;
  for (cplx c : centres) reach = std::max(reach, std::abs(c) + 1.0);
  const auto near_real = [&] { return cplx(reach * (2.0 * uni(rng) - 1.0), 0.25 * (uni(rng) - 0.5)); };
  const double strategy = uni(rng);
  if (strategy < 0.5) {
    for (int i = 0; i < m; ++i) {
      const double r = uni(rng);
      x.push_back(r < 0.4 ? disk() : r < 0.8 ? box() : far_real());
    }
  } else {
    for (int i = 0; i < m; ++i) x.push_back(near_real());
    if (strategy >= 0.75) x[static_cast<std::size_t>(uni(rng) * m) % m] = far_real();
  }
  return x;
}

bool newton_polish(const GaudinParams& p, std::vector<cplx>& x, const SolverOptions& opt) {
  const System sys = [&](const std::vector<cplx>& y, std::vector<cplx>& f, ComplexMatrix* j) {
    return evaluate_gaudin_bae(p, y, opt.pole_distance, f, j);
  };
  return damped_newton(sys, x, opt.tol, opt.max_iterations, opt.max_halvings,
                       [&](const std::vector<cplx>& y) { return within_bounds(p, y, opt); });
}

bool solve_from(const GaudinParams& p, std::vector<cplx> x0, const SolverOptions& opt, RootSet& out) {
  const bool periodic = p.kind == GaudinKind::Periodic;
  std::vector<cplx> y = x0;
  if (periodic)
    for (cplx& v : y) v = exp(v);
  const System cleared = [&](const std::vector<cplx>& v, std::vector<cplx>& g, ComplexMatrix* j) {
    return cleared_system(p, v, g, j);
  };
  const auto cleared_ok = [&](const std::vector<cplx>& v) {
    for (cplx z : v)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1e8 || (periodic && std::abs(z) < 1e-8))
        return false;
    return true;
  };
  std::vector<cplx> x;
  if (damped_newton(cleared, y, opt.tol, opt.max_iterations, opt.max_halvings, cleared_ok)) {
    x = y;
    if (periodic)
      for (cplx& v : x) v = std::log(v);
  } else {
    x = x0;
  }
  if (!newton_polish(p, x, opt)) return false;
  if (!within_bounds(p, x, opt) || !distinct(p, x, opt.dedup_distance)) return false;
  std::vector<cplx> f;
  if (!evaluate_gaudin_bae(p, x, opt.pole_distance, f, nullptr)) return false;
  out = canonicalize(RootSet{p.kind, static_cast<int>(x.size()), x, max_abs(f), false});
  return out.residual < opt.tol;
}

void merge_solutions(std::vector<RootSet>& into, const std::vector<RootSet>& more, double distance) {
  for (const RootSet& rs : more) {
    const bool seen = std::any_of(into.begin(), into.end(), [&](const RootSet& have) {
      return root_set_distance(rs.kind, have.roots, rs.roots) <= distance;
    });
    if (!seen) into.push_back(rs);
  }
  std::sort(into.begin(), into.end(), [](const RootSet& a, const RootSet& b) {
    if (a.m != b.m) return a.m < b.m;
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
      if (a.roots[i].real() != b.roots[i].real()) return a.roots[i].real() < b.roots[i].real();
      if (a.roots[i].imag() != b.roots[i].imag()) return a.roots[i].imag() < b.roots[i].imag();
    }
    return false;
  });
}

SolveReport solve_gaudin_bae(const GaudinParams& p, int m, const SolverOptions& opt) {
  if (m < 0) throw InvalidArgument("solve_gaudin_bae: negative root count");
  validate_gaudin(p);
  SolveReport rep;
  if (m == 0) {
    rep.solutions.push_back(RootSet{p.kind, 0, {}, 0.0, true});
    rep.attempted = rep.converged = 1;
    return rep;
  }
  std::vector<RootSet> found;
  for (int s = opt.first_start; s < opt.first_start + opt.starts; ++s) {
    ++rep.attempted;
    RootSet rs;
    if (!solve_from(p, seed_point(p, m, opt.seed, s), opt, rs)) continue;
    ++rep.converged;
    merge_solutions(found, {rs}, opt.dedup_distance);
  }
  rep.solutions = std::move(found);
  return rep;
}

}  // namespace ikg
