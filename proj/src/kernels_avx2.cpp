// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the dense kernels. Compiled with -mavx2 for this file
// only; callers gate on runtime CPU detection. mul+add is kept separate
// (no FMA) so results stay bit-identical to the scalar reference.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

namespace mvr::kern::detail {

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    __m256d x0 = _mm256_loadu_pd(x + i);
    __m256d x1 = _mm256_loadu_pd(x + i + 4);
    y0 = _mm256_add_pd(y0, _mm256_mul_pd(va, x0));
    y1 = _mm256_add_pd(y1, _mm256_mul_pd(va, x1));
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d x0 = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(y0, _mm256_mul_pd(va, x0)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double* x, double alpha, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  for (; i < n; ++i) x[i] *= alpha;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, p);
  }
  // lanes: (a0+a2) + (a1+a3), matching the scalar reference
  const __m128d lo = _mm256_castpd256_pd128(acc);        // a0 a1
  const __m128d hi = _mm256_extractf128_pd(acc, 1);      // a2 a3
  const __m128d s = _mm_add_pd(lo, hi);                  // a0+a2, a1+a3
  double out = _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
  for (; i < n; ++i) out += x[i] * y[i];
  return out;
}

}  // namespace mvr::kern::detail

#endif
