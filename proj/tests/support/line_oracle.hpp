#pragma once

// Direct evaluation of the line chart, written independently of the library's kernels.

#include <algorithm>
#include <cmath>

namespace oracle {

// Parameter of the first point of the chart line (s, mu) dominating (x, y).
inline double chart_push(double x, double y, double s, double mu) {
    double v1 = mu < 0 ? 1 / (1 + mu) : 1;
    double v2 = mu > 0 ? 1 / (1 - mu) : 1;
    double w1 = std::max(s, 0.0), w2 = std::max(-s, 0.0);
    // 1/0 = inf at |mu| = 1, and (finite)/inf = 0 gives the limit value.
    return std::max((x - w1) / v1, (y - w2) / v2);
}

}  // namespace oracle
