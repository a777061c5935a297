#pragma once

#include <cstddef>

namespace vqgen::kernels {

// Serial is the reference implementation; Parallel runs the same loops under
// OpenMP with the work split across independent output rows, so both backends
// produce bit-identical results regardless of thread count.
enum class Backend { kSerial, kParallel };

Backend active_backend();
void set_backend(Backend b);
int max_threads();

// y[m x n] = A[m x k] * B[k x n]   (+= when accumulate)
void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
             const double* a, const double* b, double* y, bool accumulate);

// y[m x n] = A^T * B with A stored [k x m]
void gemm_tn(std::size_t m, std::size_t k, std::size_t n,
             const double* a, const double* b, double* y, bool accumulate);

// y[m x n] = A * B^T with B stored [n x k]
void gemm_nt(std::size_t m, std::size_t k, std::size_t n,
             const double* a, const double* b, double* y, bool accumulate);

// Row-wise masked softmax. mask may be null (all keys active); mask[i*n+j] != 0
// keeps key j of row i, masked-off entries get exactly 0. A fully masked row is
// the caller's contract violation and produces a row of zeros.
void softmax_rows(std::size_t m, std::size_t n,
                  const double* x, const unsigned char* mask, double* y);

// y[i] = f(x[i]) elementwise over count values; op: 0 tanh, 1 relu, 2 sigmoid, 3 exp
void unary_apply(int op, std::size_t count, const double* x, double* y);

}  // namespace vqgen::kernels
