#include "schurlab/kernels.hpp"

namespace schurlab::kernels::detail {

// Real arithmetic is spelled out so the compiler does not route through the
// C99 NaN-aware complex multiply.
void cmul_scalar(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        const cd av = a[p * m + i];
        const cd bv = b[j * k + p];
        re += av.real() * bv.real() - av.imag() * bv.imag();
        im += av.imag() * bv.real() + av.real() * bv.imag();
      }
      c[j * m + i] = cd(re, im);
    }
  }
}

void caxpy_scalar(cd alpha, const cd* x, cd* y, std::size_t len) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cd(y[i].real() + (xr * ar - xi * ai), y[i].imag() + (xi * ar + xr * ai));
  }
}

}  // namespace schurlab::kernels::detail
