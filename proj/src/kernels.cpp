#include "vqgen/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vqgen::kernels {

namespace {

std::atomic<Backend> g_backend{
#ifdef _OPENMP
    Backend::kParallel
#else
    Backend::kSerial
#endif
};

// below this many inner operations the fork/join overhead dominates
constexpr std::size_t kParallelCutoff = 1u << 15;

inline bool go_parallel(std::size_t work) {
  return g_backend.load(std::memory_order_relaxed) == Backend::kParallel &&
         work >= kParallelCutoff;
}

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
#ifndef _OPENMP
  b = Backend::kSerial;
#endif
  g_backend.store(b, std::memory_order_relaxed);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
             const double* a, const double* b, double* y, bool accumulate) {
  const bool par = go_parallel(m * k * n);
  const auto im = static_cast<std::int64_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t ii = 0; ii < im; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double* yi = y + i * n;
    if (!accumulate)
      for (std::size_t j = 0; j < n; ++j) yi[j] = 0.0;
    const double* ai = a + i * k;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double aik = ai[kk];
      const double* bk = b + kk * n;
      for (std::size_t j = 0; j < n; ++j) yi[j] += aik * bk[j];
    }
  }
  (void)par;
}

void gemm_tn(std::size_t m, std::size_t k, std::size_t n,
             const double* a, const double* b, double* y, bool accumulate) {
  const bool par = go_parallel(m * k * n);
  const auto im = static_cast<std::int64_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t ii = 0; ii < im; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double* yi = y + i * n;
    if (!accumulate)
      for (std::size_t j = 0; j < n; ++j) yi[j] = 0.0;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double aki = a[kk * m + i];
      const double* bk = b + kk * n;
      for (std::size_t j = 0; j < n; ++j) yi[j] += aki * bk[j];
    }
  }
  (void)par;
}

void gemm_nt(std::size_t m, std::size_t k, std::size_t n,
             const double* a, const double* b, double* y, bool accumulate) {
  const bool par = go_parallel(m * k * n);
  const auto im = static_cast<std::int64_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t ii = 0; ii < im; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double* ai = a + i * k;
    double* yi = y + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::size_t kk = 0; kk < k; ++kk) acc += ai[kk] * bj[kk];
      yi[j] = accumulate ? yi[j] + acc : acc;
    }
  }
  (void)par;
}

void softmax_rows(std::size_t m, std::size_t n,
                  const double* x, const unsigned char* mask, double* y) {
  const bool par = go_parallel(m * n * 8);
  const auto im = static_cast<std::int64_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t ii = 0; ii < im; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double* xi = x + i * n;
    const unsigned char* mi = mask ? mask + i * n : nullptr;
    double* yi = y + i * n;
    double mx = -HUGE_VAL;
    for (std::size_t j = 0; j < n; ++j)
      if ((!mi || mi[j]) && xi[j] > mx) mx = xi[j];
    if (mx == -HUGE_VAL) {  // fully masked row
      for (std::size_t j = 0; j < n; ++j) yi[j] = 0.0;
      continue;
    }
    double z = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      yi[j] = (!mi || mi[j]) ? std::exp(xi[j] - mx) : 0.0;
      z += yi[j];
    }
    const double inv = 1.0 / z;
    for (std::size_t j = 0; j < n; ++j) yi[j] *= inv;
  }
  (void)par;
}

void unary_apply(int op, std::size_t count, const double* x, double* y) {
  const bool par = go_parallel(count * 8);
  const auto ic = static_cast<std::int64_t>(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t ii = 0; ii < ic; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    switch (op) {
      case 0: y[i] = std::tanh(x[i]); break;
      case 1: y[i] = x[i] > 0.0 ? x[i] : 0.0; break;
      case 2: y[i] = 1.0 / (1.0 + std::exp(-x[i])); break;
      default: y[i] = std::exp(x[i]); break;
    }
  }
  (void)par;
}

}  // namespace vqgen::kernels
