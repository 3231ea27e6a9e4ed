#pragma once

// Elementwise complex kernels used by the operator-application and residual
// paths. Each kernel has a scalar reference implementation and, where the
// target allows it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is
// picked once at runtime from the CPU feature bits; tests can pin a variant to
// check equivalence against the reference.

#include <complex>
#include <span>
#include <string_view>

namespace ikg::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

// Best variant supported by this CPU and build.
Isa detected_isa();

// Variant currently used by the dispatching entry points.
Isa active_isa();

// Pins the dispatching entry points to `isa`. Returns false (and leaves the
// selection unchanged) when the variant is unavailable on this machine.
bool set_active_isa(Isa isa);

// y += alpha * x.  Spans must have equal length.
void axpy(std::span<cplx> y, cplx alpha, std::span<const cplx> x);

// max_i |x_i|, 0 for empty input.
double max_abs(std::span<const cplx> x);

// max_i |a_i - b_i|.  Spans must have equal length.
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

namespace scalar {
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n);
double max_abs(const cplx* x, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool available();
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n);
double max_abs(const cplx* x, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
}  // namespace avx2

namespace neon {
bool available();
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n);
double max_abs(const cplx* x, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
}  // namespace neon

}  // namespace ikg::kernels
