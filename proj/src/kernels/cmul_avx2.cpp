#include "schurlab/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define SCHURLAB_HAVE_AVX2 1
#else
#define SCHURLAB_HAVE_AVX2 0
#endif

namespace schurlab::kernels::detail {

#if SCHURLAB_HAVE_AVX2

namespace {

// Two interleaved complex doubles [r0 i0 r1 i1] times a broadcast scalar.
inline __m256d cmul_pair(__m256d x, __m256d br, __m256d bi) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(x, br, _mm256_mul_pd(swapped, bi));
}

}  // namespace

bool avx2_compiled() { return true; }

void cmul_avx2(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  auto* cdst = reinterpret_cast<double*>(c);
  const std::size_t m2 = m & ~std::size_t{1};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m2; i += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const cd bv = b[j * k + p];
        const __m256d x = _mm256_loadu_pd(ad + 2 * (p * m + i));
        acc = _mm256_add_pd(acc, cmul_pair(x, _mm256_set1_pd(bv.real()), _mm256_set1_pd(bv.imag())));
      }
      _mm256_storeu_pd(cdst + 2 * (j * m + i), acc);
    }
    if (m2 != m) {
      const std::size_t i = m - 1;
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

void caxpy_avx2(cd alpha, const cd* x, cd* y, std::size_t len) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const std::size_t len2 = len & ~std::size_t{1};
  for (std::size_t i = 0; i < len2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_pair(xv, ar, ai)));
  }
  if (len2 != len) caxpy_scalar(alpha, x + len2, y + len2, 1);
}

#else

bool avx2_compiled() { return false; }

void cmul_avx2(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
  cmul_scalar(a, b, c, m, k, n);
}

void caxpy_avx2(cd alpha, const cd* x, cd* y, std::size_t len) { caxpy_scalar(alpha, x, y, len); }

#endif

}  // namespace schurlab::kernels::detail
