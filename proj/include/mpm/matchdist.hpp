#pragma once

#include "mpm/lines.hpp"
#include "mpm/pnorm.hpp"
#include "mpm/presentation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mpm::matchdist {

// Chart of admissible lines. s >= 0: w = (s, 0); s < 0: w = (0, -s).
// mu >= 0: v = (1, 1/(1-mu)); mu < 0: v = (1/(1+mu), 1). |mu| = 1 are the axis-parallel limits.
struct LineParam {
    Rational s, mu;
};

lines::AnyLine line_of_param(const LineParam& q);

struct ParamBox {
    double s_lo, s_hi, mu_lo, mu_hi;
    double s_center() const { return (s_lo + s_hi) / 2; }
    double mu_center() const { return (mu_lo + mu_hi) / 2; }
};

enum class BoundMode {
    Corner,     // exact range of each push over the box, from its corners and axis crossings
    Lipschitz,  // per-parameter Lipschitz estimate, looser
};

// Upper bound on || (max over lines l in box of |push_l(a) - push_center(a)|)_a ||_p.
double local_bound(std::span<const Grade> labels, const ParamBox& box, const PExponent& p,
                   BoundMode mode = BoundMode::Corner);

struct Options {
    double epsilon = 0.05;
    std::size_t max_depth = 80;  // binary splits
    std::size_t max_evaluations = 5'000'000;
    unsigned threads = 0;  // 0: MPM_THREADS or the hardware concurrency
    std::size_t batch = 64;
    BoundMode mode = BoundMode::Corner;
};

struct DistanceReport {
    double lower = 0;
    double upper = 0;
    PExponent p{Rational(1)};
    double epsilon = 0;
    std::size_t lines_evaluated = 0;
    bool converged = false;
    std::size_t max_depth_reached = 0;
    // Best line, in the chart of the translated problem and in original coordinates.
    std::optional<ParamBox> argmax_box;
    std::optional<lines::AdmissibleLine> argmax_line;
};

DistanceReport approx_matching_distance(const Presentation& M, const Presentation& N, const PExponent& p,
                                        const Options& options = {});

// Max over the given lines of the Wasserstein distance between the restricted barcodes.
NormValue sampled_lower_bound(const Presentation& M, const Presentation& N, const PExponent& p,
                              std::span<const lines::AnyLine> lines);

unsigned default_thread_count();

}  // namespace mpm::matchdist
