#include <atomic>
#include <stdexcept>

#include "ikg/kernels.hpp"

namespace ikg::kernels {

#if !defined(IKG_HAVE_AVX2_TU)
namespace avx2 {
bool available() { return false; }
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) { scalar::axpy(y, alpha, x, n); }
double max_abs(const cplx* x, std::size_t n) { return scalar::max_abs(x, n); }
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  return scalar::max_abs_diff(a, b, n);
}
}  // namespace avx2
#endif

#if !defined(IKG_HAVE_NEON_TU)
namespace neon {
bool available() { return false; }
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) { scalar::axpy(y, alpha, x, n); }
double max_abs(const cplx* x, std::size_t n) { return scalar::max_abs(x, n); }
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  return scalar::max_abs_diff(a, b, n);
}
}  // namespace neon
#endif

namespace {

struct Table {
  Isa isa;
  void (*axpy)(cplx*, cplx, const cplx*, std::size_t);
  double (*max_abs)(const cplx*, std::size_t);
  double (*max_abs_diff)(const cplx*, const cplx*, std::size_t);
};

constexpr Table kScalar{Isa::Scalar, scalar::axpy, scalar::max_abs, scalar::max_abs_diff};
constexpr Table kAvx2{Isa::Avx2, avx2::axpy, avx2::max_abs, avx2::max_abs_diff};
constexpr Table kNeon{Isa::Neon, neon::axpy, neon::max_abs, neon::max_abs_diff};

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2::available();
    case Isa::Neon: return neon::available();
  }
  return false;
}

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return &kAvx2;
    case Isa::Neon: return &kNeon;
    case Isa::Scalar: break;
  }
  return &kScalar;
}

std::atomic<const Table*>& active() {
  static std::atomic<const Table*> table{table_for(detected_isa())};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

Isa detected_isa() {
  if (avx2::available()) return Isa::Avx2;
  if (neon::available()) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() { return active().load()->isa; }

bool set_active_isa(Isa isa) {
  if (!isa_available(isa)) return false;
  active().store(table_for(isa));
  return true;
}

void axpy(std::span<cplx> y, cplx alpha, std::span<const cplx> x) {
  if (y.size() != x.size()) throw std::invalid_argument("kernels::axpy: length mismatch");
  active().load()->axpy(y.data(), alpha, x.data(), y.size());
}

double max_abs(std::span<const cplx> x) { return active().load()->max_abs(x.data(), x.size()); }

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("kernels::max_abs_diff: length mismatch");
  return active().load()->max_abs_diff(a.data(), b.data(), a.size());
}

}  // namespace ikg::kernels
