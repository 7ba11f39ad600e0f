#include "mpm/simd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace mpm::simd {

namespace {

void push_scalar(const double* x, const double* y, std::size_t n, ChartPoint c, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double a = (x[i] - c.w1) * c.kx;
        double b = (y[i] - c.w2) * c.ky;
        out[i] = a < b ? b : a;
    }
}

void minmax_scalar(const double* v, std::size_t n, double* lo, double* hi) {
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = v[i] < lo[i] ? v[i] : lo[i];
        hi[i] = v[i] > hi[i] ? v[i] : hi[i];
    }
}

double deviation_scalar(const double* lo, const double* hi, const double* c, std::size_t n, PowerKind kind,
                        double p) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double up = hi[i] - c[i], down = c[i] - lo[i];
        double d = up < down ? down : up;
        switch (kind) {
            case PowerKind::One: acc += d; break;
            case PowerKind::Two: acc += d * d; break;
            case PowerKind::Infinity: acc = acc < d ? d : acc; break;
            case PowerKind::General: acc += std::pow(d, p); break;
        }
    }
    return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", push_scalar, minmax_scalar, deviation_scalar};
    return k;
}

}  // namespace mpm::simd
