// SPDX-License-Identifier: Apache-2.0

// NEON variants (aarch64). Two 2-lane registers emulate the 4-lane
// accumulator layout of the scalar reference; vmulq+vaddq keeps rounding
// identical to mul-then-add.

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

namespace mvr::kern::detail {

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t yv = vld1q_f64(y + i);
    yv = vaddq_f64(yv, vmulq_f64(va, vld1q_f64(x + i)));
    vst1q_f64(y + i, yv);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double* x, double alpha, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  for (; i < n; ++i) x[i] *= alpha;
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc02 = vdupq_n_f64(0.0);  // lanes a0 a1 -> holds a0,a1
  float64x2_t acc13 = vdupq_n_f64(0.0);  // lanes a2 a3
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc02 = vaddq_f64(acc02, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    acc13 = vaddq_f64(acc13, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  // (a0+a2) + (a1+a3)
  const float64x2_t s = vaddq_f64(acc02, acc13);
  double out = vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1);
  for (; i < n; ++i) out += x[i] * y[i];
  return out;
}

}  // namespace mvr::kern::detail

#endif
