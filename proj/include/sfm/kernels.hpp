#pragma once

#include <cstddef>

// Dense kernels backing Matrix arithmetic. Every kernel exists twice:
// kernels::serial is the reference, kernels::par is the OpenMP version.
// Both use the same per-element accumulation order, so results are
// bit-identical regardless of thread count. The par versions fall back
// to the serial loop when built without OpenMP.

namespace sfm::kernels {

namespace serial {

// c(n x m) = a(n x k) * b(k x m), row-major.
void matmul(const double* a, const double* b, double* c, int n, int k, int m);

// c(n x m) = a^T * b where a is (k x n), b is (k x m).
void matmul_ta(const double* a, const double* b, double* c, int n, int k, int m);

// c(n x m) = a * b^T where a is (n x k), b is (m x k).
void matmul_tb(const double* a, const double* b, double* c, int n, int k, int m);

// c(n x m), c[i][j] = squared euclidean distance between row i of a (n x d)
// and row j of b (m x d).
void pairwise_sqdist(const double* a, const double* b, double* c, int n, int m, int d);

} // namespace serial

namespace par {

void matmul(const double* a, const double* b, double* c, int n, int k, int m);
void matmul_ta(const double* a, const double* b, double* c, int n, int k, int m);
void matmul_tb(const double* a, const double* b, double* c, int n, int k, int m);
void pairwise_sqdist(const double* a, const double* b, double* c, int n, int m, int d);

} // namespace par

// Process-wide switch consumed by the dispatch wrappers below. Defaults to
// true when compiled with OpenMP. Flipping it never changes results, only
// which lane runs.
bool parallel_enabled();
void set_parallel(bool on);

void matmul(const double* a, const double* b, double* c, int n, int k, int m);
void matmul_ta(const double* a, const double* b, double* c, int n, int k, int m);
void matmul_tb(const double* a, const double* b, double* c, int n, int k, int m);
void pairwise_sqdist(const double* a, const double* b, double* c, int n, int m, int d);

} // namespace sfm::kernels
