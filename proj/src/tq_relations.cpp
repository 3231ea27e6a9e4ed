#include "ikg/tq_relations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ikg/errors.hpp"
#include "ikg/ik_model.hpp"

namespace ikg {

using std::cosh;
using std::exp;
using std::sinh;

namespace {

constexpr double kQPole = 1e-14;

cplx checked(cplx denominator, const char* what) {
  if (std::abs(denominator) < kQPole) throw SingularConfiguration(std::string(what) + ": evaluation at a pole");
  return denominator;
}

const BoundaryParams& open_boundary(const ChainSpec& spec) {
  if (spec.periodic()) throw InvalidArgument("open chain function called on a periodic chain");
  return *spec.boundary;
}

// prod over alpha in {eps, eps'} of (1 + s 2 e^{-alpha} sinh(x)); 1 for diagonal.
cplx boundary_pair(const BoundaryParams& bp, double s, cplx x) {
  if (bp.kind == BoundaryKind::Diagonal) return 1.0;
  const cplx sh = sinh(x);
  return (1.0 + s * 2.0 * exp(-bp.eps) * sh) * (1.0 + s * 2.0 * bp.exp_neg_eps_prime * sh);
}

template <class F>
cplx product_over_sites(const ChainSpec& spec, F&& f) {
  cplx p = 1.0;
  for (cplx t : spec.theta) p *= f(t);
  return p;
}

}  // namespace

cplx q_tilde(cplx u, const std::vector<cplx>& roots, cplx eta) {
  cplx p = 1.0;
  for (cplx l : roots) p *= sinh((u - l - 2.0 * eta) / 2.0);
  return p;
}

cplx q1(cplx u, const std::vector<cplx>& roots, cplx eta) { return q_tilde(u, roots, eta); }

cplx q2(cplx u, const std::vector<cplx>& roots, cplx eta) {
  cplx p = 1.0;
  for (cplx l : roots) p *= sinh((u + l - 2.0 * eta) / 2.0);
  return p;
}

cplx q_symmetric(cplx u, const std::vector<cplx>& roots, cplx eta) { return q1(u, roots, eta) * q2(u, roots, eta); }

cplx a_tilde(cplx u, const ChainSpec& spec) {
  return product_over_sites(spec, [&](cplx t) { return r_entries(u - t, spec.eta).c; });
}

cplx d_tilde(cplx u, const ChainSpec& spec) {
  return product_over_sites(spec, [&](cplx t) { return r_entries(u - t, spec.eta).d; });
}

cplx b_tilde(cplx u, const ChainSpec& spec) {
  return product_over_sites(spec, [&](cplx t) { return r_entries(u - t, spec.eta).b; });
}

cplx open_a(cplx u, const ChainSpec& spec) {
  const BoundaryParams& bp = open_boundary(spec);
  const cplx h = spec.eta;
  const cplx sites = product_over_sites(spec, [&](cplx t) { return r_entries(u - t, h).c * r_entries(u + t, h).c; });
  return sites * boundary_pair(bp, -1.0, u - h) * sinh(u - 6.0 * h) * cosh(u - h) /
         (sinh(u - 2.0 * h) * cosh(u - 3.0 * h));
}

cplx open_d(cplx u, const ChainSpec& spec) {
  const BoundaryParams& bp = open_boundary(spec);
  const cplx h = spec.eta;
  const cplx sites = product_over_sites(spec, [&](cplx t) { return r_entries(u - t, h).d * r_entries(u + t, h).d; });
  return sites * boundary_pair(bp, -1.0, u - 5.0 * h) * sinh(u) * cosh(u - 5.0 * h) /
         (sinh(u - 4.0 * h) * cosh(u - 3.0 * h));
}

cplx open_b(cplx u, const ChainSpec& spec) {
  const BoundaryParams& bp = open_boundary(spec);
  const cplx h = spec.eta;
  const cplx sites = product_over_sites(spec, [&](cplx t) { return r_entries(u - t, h).b * r_entries(u + t, h).b; });
  return sites * boundary_pair(bp, 1.0, u - 3.0 * h) * sinh(u) * sinh(u - 6.0 * h) /
         (sinh(u - 2.0 * h) * sinh(u - 4.0 * h));
}

cplx open_c(cplx u, const ChainSpec& spec, cplx c0) {
  const cplx h = spec.eta;
  const cplx sites = product_over_sites(spec, [&](cplx t) {
    const REntries m = r_entries(u - t, h), p = r_entries(u + t, h);
    return m.c * p.c * m.d * p.d;
  });
  return std::pow(4.0, 1 - spec.n()) * c0 * sinh(u) * sinh(u - 6.0 * h) * sites;
}

cplx c0_constant(const ChainSpec& spec, const std::vector<cplx>& roots) {
  const BoundaryParams& bp = open_boundary(spec);
  if (bp.kind == BoundaryKind::Diagonal) return 0.0;
  const cplx h = spec.eta;
  const double nbar = static_cast<double>(roots.size());
  cplx sum = 0.0;
  for (cplx l : roots) sum += l;
  const cplx x = nbar * h - sum;
  return -2.0 * exp(-bp.eps) * bp.exp_neg_eps_prime * (cosh(bp.sigma_prime - bp.sigma + 2.0 * h) - cosh(x)) /
         checked(cosh(x / 2.0), "c0");
}

cplx tq_periodic(cplx u, const ChainSpec& spec, const QFunctionSet& q) {
  if (q.form != QForm::PeriodicQtilde) throw InvalidArgument("tq_periodic: needs the periodic Q-function");
  const cplx h = spec.eta, ipi = kI * kPi;
  const auto Q = [&](cplx x) { return q_tilde(x, q.roots, h); };
  const cplx qu = checked(Q(u), "tq_periodic"), qs = checked(Q(u - 2.0 * h + ipi), "tq_periodic");
  return a_tilde(u, spec) * Q(u + 4.0 * h) / qu + d_tilde(u, spec) * Q(u - 6.0 * h + ipi) / qs +
         b_tilde(u, spec) * Q(u - 4.0 * h) * Q(u + 2.0 * h + ipi) / (qs * qu);
}

cplx tq_open_inhomogeneous(cplx u, const ChainSpec& spec, const QFunctionSet& q) {
  if (q.form != QForm::OpenQ1Q2) throw InvalidArgument("tq_open_inhomogeneous: needs the Q1/Q2 pair");
  const std::size_t nbar = 4 * static_cast<std::size_t>(spec.n()) - 2;
  if (q.roots.size() != nbar) throw InvalidArgument("tq_open_inhomogeneous: needs 4N - 2 roots");
  const cplx h = spec.eta, ipi = kI * kPi;
  const auto Q1 = [&](cplx x) { return q1(x, q.roots, h); };
  const auto Q2 = [&](cplx x) { return q2(x, q.roots, h); };
  const cplx c0 = c0_constant(spec, q.roots);
  const cplx q1u = checked(Q1(u), "tq_open_inhomogeneous"), q2u = checked(Q2(u), "tq_open_inhomogeneous");
  const cplx q1s = checked(Q1(u - 2.0 * h + ipi), "tq_open_inhomogeneous");
  const cplx q2s = checked(Q2(u - 2.0 * h + ipi), "tq_open_inhomogeneous");
  const cplx homogeneous = open_a(u, spec) * Q1(u + 4.0 * h) / q2u + open_d(u, spec) * Q2(u - 6.0 * h + ipi) / q1s +
                           open_b(u, spec) * Q1(u + 2.0 * h + ipi) * Q2(u - 4.0 * h) / (q2s * q1u);
  const cplx bracket = open_c(u, spec, c0) * Q1(u + 2.0 * h + ipi) / (q1u * q2u) -
                       open_c(-u + 6.0 * h + ipi, spec, c0) * Q2(u - 4.0 * h) / (q1s * q2s);
  return homogeneous + bracket / checked(cosh(u - 3.0 * h), "tq_open_inhomogeneous");
}

namespace {

cplx tq_three_term(cplx u, const ChainSpec& spec, const std::vector<cplx>& roots) {
  const cplx h = spec.eta, ipi = kI * kPi;
  const auto Q = [&](cplx x) { return q_symmetric(x, roots, h); };
  const cplx qu = checked(Q(u), "T-Q"), qs = checked(Q(u - 2.0 * h + ipi), "T-Q");
  return open_a(u, spec) * Q(u + 4.0 * h) / qu + open_d(u, spec) * Q(u - 6.0 * h + ipi) / qs +
         open_b(u, spec) * Q(u + 2.0 * h + ipi) * Q(u - 4.0 * h) / (qs * qu);
}

}  // namespace

cplx tq_open_homogeneous(cplx u, const ChainSpec& spec, const QFunctionSet& q) {
  if (q.form != QForm::OpenSymmetricQ) throw InvalidArgument("tq_open_homogeneous: needs the symmetric Q-function");
  if (open_boundary(spec).kind != BoundaryKind::ConstrainedNonDiagonal)
    throw InvalidArgument("tq_open_homogeneous: needs a constrained boundary");
  return tq_three_term(u, spec, q.roots);
}

cplx tq_diagonal(cplx u, const ChainSpec& spec, const QFunctionSet& q) {
  if (q.form != QForm::DiagonalQ) throw InvalidArgument("tq_diagonal: needs the diagonal Q-function");
  if (open_boundary(spec).kind != BoundaryKind::Diagonal) throw InvalidArgument("tq_diagonal: needs a diagonal boundary");
  return tq_three_term(u, spec, q.roots);
}

std::vector<int> admissible_root_counts(int n, int k) {
  if (k <= -n) return {n - k};
  if (k >= n + 1) return {n + k + 1};
  std::vector<int> m{n - k};
  if (n + k - 1 != n - k) m.push_back(n + k - 1);
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<cplx> bae_residual_finite_eta(FiniteEtaBae kind, const std::vector<cplx>& roots, const ChainSpec& spec) {
  const cplx h = spec.eta, ipi = kI * kPi;
  std::vector<cplx> out;
  out.reserve(roots.size());
  switch (kind) {
    case FiniteEtaBae::Periodic: {
      const auto Q = [&](cplx x) { return q_tilde(x, roots, h); };
      for (cplx l : roots) {
        const cplx lhs = product_over_sites(spec, [&](cplx t) {
          return sinh((l - t - 2.0 * h) / 2.0) / checked(sinh((l - t + 2.0 * h) / 2.0), "BAE");
        });
        const cplx rhs = -Q(l - 2.0 * h) * Q(l + 4.0 * h + ipi) / checked(Q(l + 6.0 * h) * Q(l + ipi), "BAE");
        out.push_back(lhs - rhs);
      }
      break;
    }
    case FiniteEtaBae::OpenInhomogeneous: {
      const BoundaryParams& bp = open_boundary(spec);
      if (roots.size() != 4 * static_cast<std::size_t>(spec.n()) - 2)
        throw InvalidArgument("inhomogeneous BAE: needs 4N - 2 roots");
      const cplx c0 = c0_constant(spec, roots);
      const auto Q2 = [&](cplx x) { return q2(x, roots, h); };
      for (cplx l : roots) {
        const cplx lhs = boundary_pair(bp, 1.0, l - h) * cosh(l - h) / checked(4.0 * sinh(l) * sinh(l - 2.0 * h), "BAE");
        const cplx sites = product_over_sites(spec, [&](cplx t) {
          return sinh((l - t - 2.0 * h) / 2.0) * sinh((l + t - 2.0 * h) / 2.0) * cosh((l - t) / 2.0) * cosh((l + t) / 2.0);
        });
        const cplx rhs = -sites * c0 * Q2(l + ipi) / checked(Q2(l - 2.0 * h) * Q2(l + 2.0 * h), "BAE");
        out.push_back(lhs - rhs);
      }
      break;
    }
    case FiniteEtaBae::OpenConstrained:
    case FiniteEtaBae::OpenDiagonal: {
      const BoundaryParams& bp = open_boundary(spec);
      const auto Q = [&](cplx x) { return q_symmetric(x, roots, h); };
      for (cplx l : roots) {
        const cplx sites = product_over_sites(spec, [&](cplx t) {
          return sinh((l - t - 2.0 * h) / 2.0) * sinh((l + t - 2.0 * h) / 2.0) /
                 checked(sinh((l - t + 2.0 * h) / 2.0) * sinh((l + t + 2.0 * h) / 2.0), "BAE");
        });
        const cplx qratio = Q(l - 2.0 * h) * Q(l + 4.0 * h + ipi) / checked(Q(l + 6.0 * h) * Q(l + ipi), "BAE");
        if (kind == FiniteEtaBae::OpenConstrained) {
          cplx bnd = 1.0;
          if (bp.kind != BoundaryKind::Diagonal) {
            const cplx sp = sinh(l + h), sm = sinh(l - h);
            bnd = (1.0 - 2.0 * exp(-bp.eps) * sp) * (1.0 - 2.0 * bp.exp_neg_eps_prime * sp) /
                  checked((1.0 + 2.0 * exp(-bp.eps) * sm) * (1.0 + 2.0 * bp.exp_neg_eps_prime * sm), "BAE");
          }
          const cplx rhs = -sinh(l + 2.0 * h) * cosh(l - h) / checked(sinh(l - 2.0 * h) * cosh(l + h), "BAE") * qratio;
          out.push_back(sites * bnd - rhs);
        } else {
          const cplx lhs = sites * sinh(l - 2.0 * h) * cosh(l + h) / checked(sinh(l + 2.0 * h) * cosh(l - h), "BAE");
          out.push_back(lhs + qratio);
        }
      }
      break;
    }
  }
  return out;
}

cplx residue_to_residual_factor(int j, const ChainSpec& spec, const std::vector<cplx>& roots) {
  const cplx h = spec.eta, ipi = kI * kPi;
  const cplx l = roots.at(j);
  const cplx u = l + 2.0 * h;
  cplx dq1 = 0.5;  // derivative of Q1 at its zero u = lambda_j + 2 eta
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (static_cast<int>(k) != j) dq1 *= sinh((l - roots[k]) / 2.0);
  const cplx btheta = product_over_sites(spec, [&](cplx t) { return r_entries(u - t, h).b * r_entries(u + t, h).b; });
  const cplx s = sinh(u) * sinh(u - 6.0 * h);
  return q1(l + 4.0 * h + ipi, roots, h) / checked(dq1, "residue") * s * btheta * 4.0 * q2(l - 2.0 * h, roots, h) /
         checked(q2(l + ipi, roots, h) * cosh(l - h), "residue");
}

cplx tq_open_residue(int j, const ChainSpec& spec, const std::vector<cplx>& roots, double radius, int points) {
  const QFunctionSet q{QForm::OpenQ1Q2, roots};
  const cplx centre = roots.at(j) + 2.0 * spec.eta;
  cplx acc = 0.0;
  for (int p = 0; p < points; ++p) {
    const cplx z = radius * std::polar(1.0, 2.0 * kPi * p / points);
    acc += tq_open_inhomogeneous(centre + z, spec, q) * z;
  }
  return acc / double(points);
}

}  // namespace ikg
