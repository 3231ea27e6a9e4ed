#include "ikg/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace ikg::kernels::scalar {

void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx(y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr));
  }
}

// Magnitudes are compared squared and rooted once so every variant rounds the
// same way.
double max_abs(const cplx* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = x[i].real();
    const double im = x[i].imag();
    m = std::max(m, re * re + im * im);
  }
  return std::sqrt(m);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a[i].real() - b[i].real();
    const double im = a[i].imag() - b[i].imag();
    m = std::max(m, re * re + im * im);
  }
  return std::sqrt(m);
}

}  // namespace ikg::kernels::scalar
