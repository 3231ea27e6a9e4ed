#include "ikg/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace ikg::kernels::neon {

bool available() { return true; }

// One float64x2_t holds a single complex number (re, im).

void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  auto* yd = reinterpret_cast<double*>(y);
  const auto* xd = reinterpret_cast<const double*>(x);
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  const float64x2_t ai_signed = {-alpha.imag(), alpha.imag()};
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    const float64x2_t xs = vextq_f64(xv, xv, 1);  // (im, re)
    float64x2_t acc = vld1q_f64(yd + 2 * i);
    acc = vfmaq_f64(acc, ar, xv);
    acc = vfmaq_f64(acc, ai_signed, xs);
    vst1q_f64(yd + 2 * i, acc);
  }
}

double max_abs(const cplx* x, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(xd + 2 * i);
    m = std::max(m, vaddvq_f64(vmulq_f64(v, v)));
  }
  return std::sqrt(m);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t d = vsubq_f64(vld1q_f64(ad + 2 * i), vld1q_f64(bd + 2 * i));
    m = std::max(m, vaddvq_f64(vmulq_f64(d, d)));
  }
  return std::sqrt(m);
}

}  // namespace ikg::kernels::neon
