// SPDX-License-Identifier: Apache-2.0

#include "mvr/kernels.hpp"

#include <stdexcept>

namespace mvr::kern {

namespace detail {

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* x, double alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

// Reference reduction order: four independent lane accumulators over
// blocks of 4, lanes combined pairwise at the end, then the tail. SIMD
// backends replicate this order exactly.
double dot_scalar(const double* x, const double* y, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 += x[i] * y[i];
    a1 += x[i + 1] * y[i + 1];
    a2 += x[i + 2] * y[i + 2];
    a3 += x[i + 3] * y[i + 3];
  }
  double acc = (a0 + a2) + (a1 + a3);
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void scale_avx2(double* x, double alpha, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
#else
bool avx2_supported() { return false; }
void axpy_avx2(double, const double*, double*, std::size_t) {}
void scale_avx2(double*, double, std::size_t) {}
double dot_avx2(const double*, const double*, std::size_t) { return 0.0; }
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
bool neon_supported() { return true; }
void axpy_neon(double alpha, const double* x, double* y, std::size_t n);
void scale_neon(double* x, double alpha, std::size_t n);
double dot_neon(const double* x, const double* y, std::size_t n);
#else
bool neon_supported() { return false; }
void axpy_neon(double, const double*, double*, std::size_t) {}
void scale_neon(double*, double, std::size_t) {}
double dot_neon(const double*, const double*, std::size_t) { return 0.0; }
#endif

struct Dispatch {
  Backend backend;
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double*, double, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
};

Dispatch make_dispatch(Backend b) {
  switch (b) {
    case Backend::avx2:
      return {Backend::avx2, &axpy_avx2, &scale_avx2, &dot_avx2};
    case Backend::neon:
      return {Backend::neon, &axpy_neon, &scale_neon, &dot_neon};
    case Backend::scalar:
    default:
      return {Backend::scalar, &axpy_scalar, &scale_scalar, &dot_scalar};
  }
}

Backend detect_best() {
  if (avx2_supported()) return Backend::avx2;
  if (neon_supported()) return Backend::neon;
  return Backend::scalar;
}

Dispatch g_dispatch = make_dispatch(detect_best());

}  // namespace detail

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  detail::g_dispatch.axpy(alpha, x, y, n);
}

void scale(double* x, double alpha, std::size_t n) {
  detail::g_dispatch.scale(x, alpha, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  return detail::g_dispatch.dot(x, y, n);
}

Backend active_backend() { return detail::g_dispatch.backend; }

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (detail::avx2_supported()) out.push_back(Backend::avx2);
  if (detail::neon_supported()) out.push_back(Backend::neon);
  return out;
}

void force_backend(Backend b) {
  if (b == Backend::avx2 && !detail::avx2_supported())
    throw std::runtime_error("kern: avx2 backend not available");
  if (b == Backend::neon && !detail::neon_supported())
    throw std::runtime_error("kern: neon backend not available");
  detail::g_dispatch = detail::make_dispatch(b);
}

void reset_backend() { detail::g_dispatch = detail::make_dispatch(detail::detect_best()); }

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    default: return "scalar";
  }
}

}  // namespace mvr::kern
