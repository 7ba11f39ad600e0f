#include "mpm/simd/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace mpm::simd {

namespace {

// Operand order of the max/min intrinsics mirrors the scalar ternaries so results are bitwise equal.

__attribute__((target("avx2"))) void push_avx2(const double* x, const double* y, std::size_t n, ChartPoint c,
                                              double* out) {
    const __m256d w1 = _mm256_set1_pd(c.w1), w2 = _mm256_set1_pd(c.w2);
    const __m256d kx = _mm256_set1_pd(c.kx), ky = _mm256_set1_pd(c.ky);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), w1), kx);
        __m256d b = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(y + i), w2), ky);
        _mm256_storeu_pd(out + i, _mm256_max_pd(b, a));
    }
    for (; i < n; ++i) {
        double a = (x[i] - c.w1) * c.kx;
        double b = (y[i] - c.w2) * c.ky;
        out[i] = a < b ? b : a;
    }
}

__attribute__((target("avx2"))) void minmax_avx2(const double* v, std::size_t n, double* lo, double* hi) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        _mm256_storeu_pd(lo + i, _mm256_min_pd(x, _mm256_loadu_pd(lo + i)));
        _mm256_storeu_pd(hi + i, _mm256_max_pd(x, _mm256_loadu_pd(hi + i)));
    }
    for (; i < n; ++i) {
        lo[i] = v[i] < lo[i] ? v[i] : lo[i];
        hi[i] = v[i] > hi[i] ? v[i] : hi[i];
    }
}

__attribute__((target("avx2"))) double deviation_avx2(const double* lo, const double* hi, const double* c,
                                                      std::size_t n, PowerKind kind, double p) {
    __m256d acc = _mm256_setzero_pd();
    double tail = 0;
    std::size_t i = 0;
    if (kind != PowerKind::General) {
        for (; i + 4 <= n; i += 4) {
            __m256d cv = _mm256_loadu_pd(c + i);
            __m256d up = _mm256_sub_pd(_mm256_loadu_pd(hi + i), cv);
            __m256d down = _mm256_sub_pd(cv, _mm256_loadu_pd(lo + i));
            __m256d d = _mm256_max_pd(down, up);
            if (kind == PowerKind::One)
                acc = _mm256_add_pd(acc, d);
            else if (kind == PowerKind::Two)
                acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
            else
                acc = _mm256_max_pd(d, acc);
        }
    }
    for (; i < n; ++i) {
        double up = hi[i] - c[i], down = c[i] - lo[i];
        double d = up < down ? down : up;
        switch (kind) {
            case PowerKind::One: tail += d; break;
            case PowerKind::Two: tail += d * d; break;
            case PowerKind::Infinity: tail = tail < d ? d : tail; break;
            case PowerKind::General: tail += std::pow(d, p); break;
        }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    if (kind == PowerKind::Infinity) {
        double m = tail;
        for (double l : lanes) m = m < l ? l : m;
        return m;
    }
    return ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3])) + tail;
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels k{"avx2", push_avx2, minmax_avx2, deviation_avx2};
    return __builtin_cpu_supports("avx2") ? &k : nullptr;
}

}  // namespace mpm::simd

#else

namespace mpm::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace mpm::simd

#endif
