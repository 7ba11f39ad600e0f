#pragma once

#include <cstddef>

namespace mpm::simd {

// One point of the line chart: push(a) = max((a.x - w1) * kx, (a.y - w2) * ky).
struct ChartPoint {
    double w1, w2, kx, ky;
};

enum class PowerKind { One, Two, Infinity, General };

struct Kernels {
    const char* name;
    void (*push)(const double* x, const double* y, std::size_t n, ChartPoint c, double* out);
    // lo = min(lo, v), hi = max(hi, v), elementwise.
    void (*minmax)(const double* v, std::size_t n, double* lo, double* hi);
    // Sum of d_i^p (max of d_i for Infinity) with d_i = max(hi_i - c_i, c_i - lo_i).
    double (*deviation)(const double* lo, const double* hi, const double* c, std::size_t n, PowerKind kind,
                        double p);
};

const Kernels& scalar_kernels();
// nullptr when the CPU or the build lacks AVX2.
const Kernels* avx2_kernels();
// AVX2 when available unless MPM_SIMD=scalar is set; chosen once per process.
const Kernels& active_kernels();

}  // namespace mpm::simd
