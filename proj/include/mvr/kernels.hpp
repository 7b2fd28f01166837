// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mvr::kern {

// Dense vector kernels used by the simplex inner loops. Reductions are
// specified with a fixed 4-lane accumulation order so that every backend
// produces bit-identical results (no FMA contraction anywhere).

enum class Backend { scalar, avx2, neon };

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

// x *= alpha
void scale(double* x, double alpha, std::size_t n);

// 4-lane blocked dot product: sum_k x[k]*y[k]
double dot(const double* x, const double* y, std::size_t n);

Backend active_backend();
std::vector<Backend> available_backends();

// Test hook: force a specific backend. Throws if it is not available on
// this machine. Not thread-safe; call before spawning worker threads.
void force_backend(Backend b);
void reset_backend();

std::string backend_name(Backend b);

}  // namespace mvr::kern
