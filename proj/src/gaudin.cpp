#include "ikg/gaudin.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <string>

#include "ikg/boundary.hpp"
#include "ikg/errors.hpp"
#include "ikg/ik_model.hpp"

namespace ikg {

using std::cosh;
using std::exp;
using std::sinh;

const char* to_string(GaudinKind k) {
  switch (k) {
    case GaudinKind::Periodic: return "periodic";
    case GaudinKind::Constrained: return "constrained";
    case GaudinKind::Diagonal: return "diagonal";
  }
  return "unknown";
}

GaudinKind gaudin_kind_from_string(const std::string& s) {
  if (s == "periodic") return GaudinKind::Periodic;
  if (s == "constrained") return GaudinKind::Constrained;
  if (s == "diagonal") return GaudinKind::Diagonal;
  throw InvalidArgument("unknown Gaudin kind '" + s + "'");
}

namespace {

void guard(cplx value, const std::string& what) {
  if (std::abs(value) < kPoleGuard) throw SingularConfiguration(what);
}

void check_site(int j, const GaudinParams& p) {
  if (j < 1 || j > p.n()) throw InvalidArgument("site " + std::to_string(j) + " outside 1.." + std::to_string(p.n()));
}

}  // namespace

void validate_gaudin(const GaudinParams& p) {
  const int n = p.n();
  if (n < 1) throw InvalidArgument("Gaudin family needs at least one site");
  for (int j = 0; j < n; ++j) {
    const cplx tj = p.theta[j];
    for (int l = 0; l < n; ++l) {
      if (l != j) guard(sinh(tj - p.theta[l]), "sinh(theta_j - theta_l) vanishes");
      if (p.kind != GaudinKind::Periodic && l != j) guard(sinh(tj + p.theta[l]), "sinh(theta_j + theta_l) vanishes");
    }
    if (p.kind != GaudinKind::Periodic) guard(sinh(tj), "sinh(theta_j) vanishes");
    if (p.kind == GaudinKind::Constrained) {
      guard(w_theta(tj, p.eps), "w(theta_j) vanishes");
      guard(cosh(tj), "cosh(theta_j) vanishes");
    }
  }
}

ChainSpec chain_spec(const GaudinParams& p, cplx eta) {
  ChainSpec s;
  s.theta = p.theta;
  s.eta = eta;
  if (p.kind == GaudinKind::Constrained) s.boundary = apply_constraints(p.eps, p.sigma, p.sigma_bar, eta);
  if (p.kind == GaudinKind::Diagonal) s.boundary = diagonal_boundary();
  return s;
}

ComplexMatrix gamma_onsite(cplx u, cplx eps, cplx sigma, cplx sigma_bar) {
  const auto& s = spin1_ops();
  const cplx sh = sinh(u);
  const cplx d = exp(2.0 * eps) - 4.0 * sh * sh;
  const cplx s2 = sigma_bar + 2.0;
  const cplx ee = exp(eps);
  ComplexMatrix g = -exp(-sigma) * sh * (4.0 * exp(u) - ee * s2) / d * (s.sm * s.sm);
  g -= exp(sigma) * sh * (4.0 * exp(-u) + ee * s2) / d * (s.sp * s.sp);
  g -= 4.0 * sinh(2.0 * u) / d * (s.sz * s.sz);
  g -= 4.0 * sh * (ee - s2 * sh) / d * s.sz;
  const cplx c2 = cosh(2.0 * u);
  g -= (exp(2.0 * eps) * (5.0 + 7.0 * c2) + 5.0 + 4.0 * c2 - 9.0 * cosh(4.0 * u)) / (sinh(2.0 * u) * d) * identity(3);
  return g;
}

ComplexMatrix build_periodic_gaudin(int j, const GaudinParams& p) {
  check_site(j, p);
  validate_gaudin(p);
  const int n = p.n();
  const cplx tj = p.theta[j - 1];
  ComplexMatrix h = ComplexMatrix::Zero(pow3(n), pow3(n));
  for (int l = 1; l <= n; ++l) {
    if (l == j) continue;
    const cplx x = tj - p.theta[l - 1];
    add_pair(h, 1.0 / sinh(x), build_classical_r(x), j, l, n);
  }
  return h;
}

ComplexMatrix build_open_gaudin(int j, const GaudinParams& p) {
  check_site(j, p);
  validate_gaudin(p);
  const int n = p.n();
  const cplx tj = p.theta[j - 1];
  const cplx w = w_theta(tj, p.eps);
  const ComplexMatrix kl = kron(Kminus0(tj, p.eps, p.sigma), identity(3));
  const ComplexMatrix kr = kron(Kplus0(tj, p.eps, p.sigma), identity(3));

  ComplexMatrix h = embed_site(gamma_onsite(tj, p.eps, p.sigma, p.sigma_bar), j, n);
  for (int l = 1; l <= n; ++l) {
    if (l == j) continue;
    const cplx xm = tj - p.theta[l - 1], xp = tj + p.theta[l - 1];
    add_pair(h, 1.0 / sinh(xm), build_classical_r(xm), j, l, n);
    // K^-_j r_{l,j} K^+_j written on the (j, l) ordering.
    const ComplexMatrix reflected = kl * swap9() * build_classical_r(xp) * swap9() * kr;
    add_pair(h, 1.0 / (w * sinh(xp)), reflected, j, l, n);
  }
  return h;
}

ComplexMatrix build_diagonal_gaudin(int j, const GaudinParams& p) {
  check_site(j, p);
  validate_gaudin(p);
  const int n = p.n();
  const cplx tj = p.theta[j - 1];
  ComplexMatrix h = (-6.0 / std::tanh(tj) - std::tanh(tj)) * identity(pow3(n));
  for (int l = 1; l <= n; ++l) {
    if (l == j) continue;
    const cplx xm = tj - p.theta[l - 1], xp = tj + p.theta[l - 1];
    add_pair(h, 1.0 / sinh(xm), build_classical_r(xm), j, l, n);
    add_pair(h, 1.0 / sinh(xp), build_classical_r(xp), l, j, n);
  }
  return h;
}

ComplexMatrix build_gaudin(int j, const GaudinParams& p) {
  switch (p.kind) {
    case GaudinKind::Periodic: return build_periodic_gaudin(j, p);
    case GaudinKind::Constrained: return build_open_gaudin(j, p);
    case GaudinKind::Diagonal: return build_diagonal_gaudin(j, p);
  }
  throw InvalidArgument("build_gaudin: unknown kind");
}

namespace {

void put(std::ostringstream& os, cplx z) {
  os << std::hex << std::bit_cast<std::uint64_t>(z.real()) << ':' << std::bit_cast<std::uint64_t>(z.imag()) << ';';
}

std::string cache_key(const GaudinParams& p) {
  std::ostringstream os;
  os << static_cast<int>(p.kind) << '|';
  for (cplx t : p.theta) put(os, t);
  if (p.kind == GaudinKind::Constrained) {
    put(os, p.eps);
    put(os, p.sigma);
    put(os, p.sigma_bar);
  }
  return os.str();
}

}  // namespace

std::shared_ptr<const GaudinFamily> gaudin_family(const GaudinParams& p) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const GaudinFamily>> cache;
  const std::string key = cache_key(p);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fam = std::make_shared<GaudinFamily>();
  fam->params = p;
  for (int j = 1; j <= p.n(); ++j) fam->operators.push_back(build_gaudin(j, p));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(fam)).first->second;
}

SectorDecomposition sector_decomposition(int n) {
  if (n < 1) throw InvalidArgument("sector_decomposition: need at least one site");
  SectorDecomposition s;
  const std::size_t dim = pow3(n);
  s.total_sz = ComplexMatrix::Zero(dim, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    int sz = 0;
    std::size_t rest = idx;
    for (int site = 0; site < n; ++site, rest /= 3) sz += 1 - static_cast<int>(rest % 3);
    s.total_sz(idx, idx) = double(sz);
    s.blocks[sz].push_back(idx);
  }
  return s;
}

Spectrum exact_spectrum(const ComplexMatrix& h, bool hermitian_hint) { return eig(h, hermitian_hint); }

}  // namespace ikg
