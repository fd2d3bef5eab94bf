#include "sfm/kernels.hpp"

#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfm::kernels {

// Parallelizing tiny products costs more than it saves; below this many
// multiply-adds the par lane runs the loop single-threaded (same code path,
// same result either way).
static constexpr long kParThreshold = 1 << 15;

namespace serial {

void matmul(const double* a, const double* b, double* c, int n, int k, int m) {
    std::memset(c, 0, sizeof(double) * static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        const double* ai = a + static_cast<size_t>(i) * k;
        double* ci = c + static_cast<size_t>(i) * m;
        for (int r = 0; r < k; ++r) {
            const double av = ai[r];
            const double* br = b + static_cast<size_t>(r) * m;
            for (int j = 0; j < m; ++j) ci[j] += av * br[j];
        }
    }
}

void matmul_ta(const double* a, const double* b, double* c, int n, int k, int m) {
    std::memset(c, 0, sizeof(double) * static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        double* ci = c + static_cast<size_t>(i) * m;
        for (int r = 0; r < k; ++r) {
            const double av = a[static_cast<size_t>(r) * n + i];
            const double* br = b + static_cast<size_t>(r) * m;
            for (int j = 0; j < m; ++j) ci[j] += av * br[j];
        }
    }
}

void matmul_tb(const double* a, const double* b, double* c, int n, int k, int m) {
    for (int i = 0; i < n; ++i) {
        const double* ai = a + static_cast<size_t>(i) * k;
        double* ci = c + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const double* bj = b + static_cast<size_t>(j) * k;
            double acc = 0.0;
            for (int r = 0; r < k; ++r) acc += ai[r] * bj[r];
            ci[j] = acc;
        }
    }
}

void pairwise_sqdist(const double* a, const double* b, double* c, int n, int m, int d) {
    for (int i = 0; i < n; ++i) {
        const double* ai = a + static_cast<size_t>(i) * d;
        double* ci = c + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const double* bj = b + static_cast<size_t>(j) * d;
            double acc = 0.0;
            for (int r = 0; r < d; ++r) {
                const double diff = ai[r] - bj[r];
                acc += diff * diff;
            }
            ci[j] = acc;
        }
    }
}

} // namespace serial

namespace par {

// Row i of the output is owned by exactly one thread and accumulated in the
// same order as the serial lane, so the two lanes agree bit for bit.

void matmul(const double* a, const double* b, double* c, int n, int k, int m) {
    const long work = static_cast<long>(n) * k * m;
#pragma omp parallel for schedule(static) if (work >= kParThreshold)
    for (int i = 0; i < n; ++i) {
        const double* ai = a + static_cast<size_t>(i) * k;
        double* ci = c + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) ci[j] = 0.0;
        for (int r = 0; r < k; ++r) {
            const double av = ai[r];
            const double* br = b + static_cast<size_t>(r) * m;
            for (int j = 0; j < m; ++j) ci[j] += av * br[j];
        }
    }
}

void matmul_ta(const double* a, const double* b, double* c, int n, int k, int m) {
    const long work = static_cast<long>(n) * k * m;
#pragma omp parallel for schedule(static) if (work >= kParThreshold)
    for (int i = 0; i < n; ++i) {
        double* ci = c + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) ci[j] = 0.0;
        for (int r = 0; r < k; ++r) {
            const double av = a[static_cast<size_t>(r) * n + i];
            const double* br = b + static_cast<size_t>(r) * m;
            for (int j = 0; j < m; ++j) ci[j] += av * br[j];
        }
    }
}

void matmul_tb(const double* a, const double* b, double* c, int n, int k, int m) {
    const long work = static_cast<long>(n) * k * m;
#pragma omp parallel for schedule(static) if (work >= kParThreshold)
    for (int i = 0; i < n; ++i) {
        const double* ai = a + static_cast<size_t>(i) * k;
        double* ci = c + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const double* bj = b + static_cast<size_t>(j) * k;
            double acc = 0.0;
            for (int r = 0; r < k; ++r) acc += ai[r] * bj[r];
            ci[j] = acc;
        }
    }
}

void pairwise_sqdist(const double* a, const double* b, double* c, int n, int m, int d) {
    const long work = static_cast<long>(n) * m * d;
#pragma omp parallel for schedule(static) if (work >= kParThreshold)
    for (int i = 0; i < n; ++i) {
        const double* ai = a + static_cast<size_t>(i) * d;
        double* ci = c + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const double* bj = b + static_cast<size_t>(j) * d;
            double acc = 0.0;
            for (int r = 0; r < d; ++r) {
                const double diff = ai[r] - bj[r];
                acc += diff * diff;
            }
            ci[j] = acc;
        }
    }
}

} // namespace par

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
} // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

void matmul(const double* a, const double* b, double* c, int n, int k, int m) {
    if (parallel_enabled()) par::matmul(a, b, c, n, k, m);
    else serial::matmul(a, b, c, n, k, m);
}

void matmul_ta(const double* a, const double* b, double* c, int n, int k, int m) {
    if (parallel_enabled()) par::matmul_ta(a, b, c, n, k, m);
    else serial::matmul_ta(a, b, c, n, k, m);
}

void matmul_tb(const double* a, const double* b, double* c, int n, int k, int m) {
    if (parallel_enabled()) par::matmul_tb(a, b, c, n, k, m);
    else serial::matmul_tb(a, b, c, n, k, m);
}

void pairwise_sqdist(const double* a, const double* b, double* c, int n, int m, int d) {
    if (parallel_enabled()) par::pairwise_sqdist(a, b, c, n, m, d);
    else serial::pairwise_sqdist(a, b, c, n, m, d);
}

} // namespace sfm::kernels
