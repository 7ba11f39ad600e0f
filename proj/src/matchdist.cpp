#include "mpm/matchdist.hpp"

#include "mpm/errors.hpp"
#include "mpm/onepar.hpp"
#include "mpm/simd/kernels.hpp"
#include "mpm/wasserstein.hpp"
#include "worker_pool.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

namespace mpm::matchdist {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

simd::ChartPoint chart(double s, double mu) {
    return {s > 0 ? s : 0.0, s < 0 ? -s : 0.0, mu < 0 ? 1 + mu : 1.0, mu > 0 ? 1 - mu : 1.0};
}

simd::PowerKind power_kind(const PExponent& p) {
    if (p.is_infinite()) return simd::PowerKind::Infinity;
    if (auto k = p.integer()) {
        if (*k == 1) return simd::PowerKind::One;
        if (*k == 2) return simd::PowerKind::Two;
    }
    return simd::PowerKind::General;
}

// Parameter values at which every push attains its extremes over the box: the corners, plus the
// axis crossings s = 0 and mu = 0, where the chart switches formulas.
std::vector<double> breakpoints(double lo, double hi) {
    std::vector<double> v{lo};
    if (lo < 0 && 0 < hi) v.push_back(0);
    if (hi != lo) v.push_back(hi);
    return v;
}

// Label coordinates of one presentation, rows first.
struct Side {
    const Presentation* P = nullptr;
    std::vector<double> x, y;
    std::size_t rows = 0;
    std::size_t size() const { return x.size(); }
};

Side make_side(std::span<const Grade> labels, const Rational& dx, const Rational& dy) {
    Side s;
    for (const auto& g : labels) {
        s.x.push_back(to_double(g[0] - dx));
        s.y.push_back(to_double(g[1] - dy));
    }
    return s;
}

struct Scratch {
    std::vector<double> center, tmp, lo, hi;
};

// Pushes of all labels of `side` onto the line with chart coordinates (s, mu).
void push_all(const simd::Kernels& k, const Side& side, double s, double mu, std::vector<double>& out) {
    out.resize(side.size());
    k.push(side.x.data(), side.y.data(), side.size(), chart(s, mu), out.data());
}

double side_bound(const simd::Kernels& k, const Side& side, const ParamBox& box, const PExponent& p,
                  BoundMode mode, const std::vector<double>& center, Scratch& sc) {
    const std::size_t n = side.size();
    if (n == 0) return 0;
    auto kind = power_kind(p);
    double pd = p.is_infinite() ? inf : p.as_double();
    double sum;
    if (mode == BoundMode::Corner) {
        sc.lo.assign(n, inf);
        sc.hi.assign(n, -inf);
        for (double s : breakpoints(box.s_lo, box.s_hi))
            for (double mu : breakpoints(box.mu_lo, box.mu_hi)) {
                push_all(k, side, s, mu, sc.tmp);
                k.minmax(sc.tmp.data(), n, sc.lo.data(), sc.hi.data());
            }
        sum = k.deviation(sc.lo.data(), sc.hi.data(), center.data(), n, kind, pd);
    } else {
        double hs = (box.s_hi - box.s_lo) / 2, hmu = (box.mu_hi - box.mu_lo) / 2;
        double smax = std::max(std::fabs(box.s_lo), std::fabs(box.s_hi));
        sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = hs + hmu * (std::max(std::fabs(side.x[i]), std::fabs(side.y[i])) + smax);
            sum = kind == simd::PowerKind::Infinity ? std::max(sum, d) : sum + power_of(d, p);
        }
    }
    return root_of(sum, p);
}

struct Problem {
    Side M, N;
    PExponent p;
    BoundMode mode;
    double slack = 0;
    double cap = inf;  // valid on every line when both sides share a matrix
};

struct Box {
    ParamBox b;
    std::size_t depth = 0;
    double value = 0;  // Wasserstein distance along the center line
    double upper = 0;
    double parent_upper = std::numeric_limits<double>::infinity();
};

double center_value(const simd::Kernels& k, const Problem& pr, double s, double mu, Scratch& a, Scratch& b) {
    push_all(k, pr.M, s, mu, a.center);
    push_all(k, pr.N, s, mu, b.center);
    auto bars = [](const Side& side, const std::vector<double>& pushed) {
        std::span<const double> all(pushed);
        return onepar::barcode_fast(side.P->field(), side.P->columns(), all.first(side.rows),
                                    all.subspan(side.rows));
    };
    auto bm = bars(pr.M, a.center), bn = bars(pr.N, b.center);
    return wasserstein::distance_fast(bm, bn, pr.p);
}

void evaluate(const simd::Kernels& k, const Problem& pr, Box& box, Scratch& a, Scratch& b) {
    box.value = center_value(k, pr, box.b.s_center(), box.b.mu_center(), a, b);
    double vm = side_bound(k, pr.M, box.b, pr.p, pr.mode, a.center, a);
    double vn = side_bound(k, pr.N, box.b, pr.p, pr.mode, b.center, b);
    box.upper = std::min(box.value + vm + vn + pr.slack, pr.cap);
}

std::pair<ParamBox, ParamBox> halves(const ParamBox& b, bool along_s) {
    ParamBox x = b, y = b;
    if (along_s) {
        x.s_hi = y.s_lo = b.s_center();
    } else {
        x.mu_hi = y.mu_lo = b.mu_center();
    }
    return {x, y};
}

double bound_only(const simd::Kernels& k, const Problem& pr, const ParamBox& b, Scratch& a, Scratch& c) {
    push_all(k, pr.M, b.s_center(), b.mu_center(), a.center);
    push_all(k, pr.N, b.s_center(), b.mu_center(), c.center);
    return side_bound(k, pr.M, b, pr.p, pr.mode, a.center, a) + side_bound(k, pr.N, b, pr.p, pr.mode, c.center, c);
}

// Halves the box along the axis that leaves the smaller total local bound.
void split(const simd::Kernels& k, const Problem& pr, double C, const Box& parent, Box& x, Box& y, Scratch& a,
           Scratch& c) {
    const ParamBox& b = parent.b;
    double est[2];
    for (int axis = 0; axis < 2; ++axis) {
        auto [h1, h2] = halves(b, axis == 0);
        est[axis] = bound_only(k, pr, h1, a, c) + bound_only(k, pr, h2, a, c);
    }
    bool along_s;
    if (std::fabs(est[0] - est[1]) > 1e-9 * (1 + est[0] + est[1]))
        along_s = est[0] < est[1];
    else
        along_s = (b.s_hi - b.s_lo) / (2 * C) >= (b.mu_hi - b.mu_lo) / 2;
    auto [h1, h2] = halves(b, along_s);
    x.b = h1;
    y.b = h2;
    x.depth = y.depth = parent.depth + 1;
    x.parent_upper = y.parent_upper = parent.upper;
}

struct ByUpper {
    bool operator()(const Box& x, const Box& y) const {
        if (x.upper != y.upper) return x.upper < y.upper;
        if (x.depth != y.depth) return x.depth > y.depth;
        if (x.b.s_lo != y.b.s_lo) return x.b.s_lo > y.b.s_lo;
        return x.b.mu_lo > y.b.mu_lo;
    }
};

std::optional<lines::AdmissibleLine> original_line(double s, double mu, const Rational& dx, const Rational& dy) {
    if (std::fabs(mu) >= 1) return std::nullopt;
    Rational S(s), MU(mu);
    Grade v = MU >= 0 ? Grade(Rational(1), 1 / (1 - MU)) : Grade(1 / (1 + MU), Rational(1));
    Grade w(Rational(S > 0 ? S : Rational(0)) + dx, Rational(S < 0 ? Rational(-S) : Rational(0)) + dy);
    return lines::canonicalize_line(v, w);
}

void require_two_parameters(const Presentation& P) {
    if (P.n_params() != 2) throw DataError("matching distance needs 2-parameter presentations");
}

}  // namespace

unsigned default_thread_count() {
    if (const char* env = std::getenv("MPM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

lines::AnyLine line_of_param(const LineParam& q) {
    Rational zero(0), one(1);
    if (q.mu < -1 || q.mu > 1) throw DataError("mu must lie in [-1, 1]");
    Rational w1 = q.s > 0 ? q.s : zero, w2 = q.s < 0 ? Rational(-q.s) : zero;
    if (q.mu == 1) return lines::LimitLine{0, w1};
    if (q.mu == -1) return lines::LimitLine{1, w2};
    Grade v = q.mu >= 0 ? Grade(one, one / (one - q.mu)) : Grade(one / (one + q.mu), one);
    return lines::AdmissibleLine(v, Grade(w1, w2));
}

double local_bound(std::span<const Grade> labels, const ParamBox& box, const PExponent& p, BoundMode mode) {
    Side side = make_side(labels, Rational(0), Rational(0));
    const auto& k = simd::active_kernels();
    Scratch sc;
    push_all(k, side, box.s_center(), box.mu_center(), sc.center);
    std::vector<double> center = sc.center;
    return side_bound(k, side, box, p, mode, center, sc);
}

DistanceReport approx_matching_distance(const Presentation& M, const Presentation& N, const PExponent& p,
                                        const Options& options) {
    require_two_parameters(M);
    require_two_parameters(N);
    if (!(options.epsilon > 0)) throw DataError("epsilon must be positive");

    DistanceReport report;
    report.p = p;
    report.epsilon = options.epsilon;

    // Translate jointly into the nonnegative quadrant; lines with |s| > C restrict like |s| = C.
    auto lm = M.labels(), ln = N.labels();
    std::optional<Rational> dx, dy;
    for (const auto* ls : {&lm, &ln})
        for (const auto& g : *ls) {
            if (!dx || g[0] < *dx) dx = g[0];
            if (!dy || g[1] < *dy) dy = g[1];
        }
    if (!dx) dx = dy = Rational(0);
    Problem pr{make_side(lm, *dx, *dy), make_side(ln, *dx, *dy), p, options.mode};
    pr.M.P = &M;
    pr.M.rows = M.rows();
    pr.N.P = &N;
    pr.N.rows = N.rows();
    double C = 0;
    for (const Side* s : {&pr.M, &pr.N})
        for (std::size_t i = 0; i < s->size(); ++i) C = std::max({C, s->x[i], s->y[i]});
    if (C == 0) C = 1;
    pr.slack = 1e-9 * (1 + C);

    if (M.same_matrix(N)) {
        NormAccumulator acc(p);
        for (std::size_t i = 0; i < lm.size(); ++i)
            acc.add(std::max(abs(lm[i][0] - ln[i][0]), abs(lm[i][1] - ln[i][1])));
        auto cap = acc.result();
        pr.cap = cap.exact && *cap.exact == 0 ? 0.0 : std::nextafter(cap.value * (1 + 1e-12), inf);
    }

    const auto& kernels = simd::active_kernels();
    unsigned threads = options.threads ? options.threads : default_thread_count();
    detail::WorkerPool pool(threads);
    std::vector<Scratch> scratch(2 * pool.size());

    Box root{{-C, C, -1, 1}, 0, 0, 0};
    evaluate(kernels, pr, root, scratch[0], scratch[1]);
    report.lines_evaluated = 1;
    report.lower = root.value;
    report.argmax_box = root.b;
    if (std::isinf(root.value)) {
        // Essential bar counts do not depend on the line.
        report.upper = inf;
        report.converged = true;
        return report;
    }

    std::priority_queue<Box, std::vector<Box>, ByUpper> live;
    if (root.upper > report.lower) live.push(root);
    const double eps = options.epsilon;
    bool stopped = false;
    std::vector<Box> batch, children;
    while (!live.empty() && live.top().upper - report.lower > eps) {
        batch.clear();
        while (!live.empty() && batch.size() < options.batch && live.top().upper - report.lower > eps) {
            if (live.top().depth >= options.max_depth) {
                stopped = true;
                break;
            }
            batch.push_back(live.top());
            live.pop();
        }
        if (batch.empty()) break;
        children.assign(2 * batch.size(), Box{});
        pool.parallel_for(batch.size(), [&](std::size_t i, unsigned w) {
            split(kernels, pr, C, batch[i], children[2 * i], children[2 * i + 1], scratch[2 * w], scratch[2 * w + 1]);
            evaluate(kernels, pr, children[2 * i], scratch[2 * w], scratch[2 * w + 1]);
            evaluate(kernels, pr, children[2 * i + 1], scratch[2 * w], scratch[2 * w + 1]);
        });
        report.lines_evaluated += children.size();
        for (const Box& c : children) {
            report.max_depth_reached = std::max(report.max_depth_reached, c.depth);
            if (c.value > c.parent_upper + 1e-9 * (1 + c.parent_upper))
                throw ComputationError("line value " + std::to_string(c.value) + " exceeds the bound " +
                                       std::to_string(c.parent_upper) + " of its enclosing box");
            if (c.value > report.lower) {
                report.lower = c.value;
                report.argmax_box = c.b;
            }
        }
        for (const Box& c : children)
            if (c.upper > report.lower) live.push(c);
        if (stopped || report.lines_evaluated >= options.max_evaluations) {
            stopped = true;
            break;
        }
    }

    double top = live.empty() ? report.lower : live.top().upper;
    report.upper = std::max(report.lower, std::min(top, pr.cap));
    report.converged = !stopped && report.upper - report.lower <= eps;
    report.argmax_line = original_line(report.argmax_box->s_center(), report.argmax_box->mu_center(), *dx, *dy);
    return report;
}

NormValue sampled_lower_bound(const Presentation& M, const Presentation& N, const PExponent& p,
                              std::span<const lines::AnyLine> ls) {
    require_two_parameters(M);
    require_two_parameters(N);
    NormValue best;
    best.exact = Rational(0);
    for (const auto& l : ls) {
        auto d = wasserstein::distance(lines::barcode_along_line(M, l), lines::barcode_along_line(N, l), p);
        if (compare(d, best) > 0) best = d;
    }
    return best;
}

}  // namespace mpm::matchdist
