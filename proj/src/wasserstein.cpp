#include "mpm/wasserstein.hpp"

#include "assignment.hpp"
#include "mpm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace mpm::wasserstein {

namespace {

// |x|^p, or |x| when p = inf. Rational arithmetic only for integer p.
Rational term(const Rational& x, const PExponent& p) { return *exact_power(x, p); }
double term(double x, const PExponent& p) { return power_of(x, p); }

template <class T>
struct Costs {
    const PExponent& p;

    T combine(const T& a, const T& b) const { return p.is_infinite() ? std::max(a, b) : T(a + b); }

    // Both bars finite.
    T pair(const BasicBar<T>& a, const BasicBar<T>& b) const {
        return combine(term(T(a.birth - b.birth), p), term(T(a.death - b.death), p));
    }
    // Both essential: infinity minus infinity contributes nothing.
    T essential_pair(const BasicBar<T>& a, const BasicBar<T>& b) const { return term(T(a.birth - b.birth), p); }
    T diagonal(const BasicBar<T>& a) const {
        T half = T(a.death - a.birth) / T(2);
        T t = term(half, p);
        return p.is_infinite() ? t : T(t + t);
    }
};

template <class T>
struct Split {
    std::vector<std::size_t> finite, essential;
};

template <class T>
Split<T> split(std::span<const BasicBar<T>> bars) {
    Split<T> s;
    for (std::size_t i = 0; i < bars.size(); ++i) (bars[i].essential ? s.essential : s.finite).push_back(i);
    return s;
}

template <class T>
struct Solved {
    bool infinite = false;
    T total{0};
    Matching matching;
};

template <class T>
Solved<T> solve(std::span<const BasicBar<T>> B, std::span<const BasicBar<T>> C, const PExponent& p) {
    Solved<T> out;
    Costs<T> costs{p};
    auto sb = split(B), sc = split(C);
    if (sb.essential.size() != sc.essential.size()) {
        out.infinite = true;
        return out;
    }

    // Sorted order matches essential bars optimally for every convex cost.
    auto by_birth = [](std::span<const BasicBar<T>> bars) {
        return [bars](std::size_t i, std::size_t j) {
            return bars[i].birth < bars[j].birth || (bars[i].birth == bars[j].birth && i < j);
        };
    };
    std::sort(sb.essential.begin(), sb.essential.end(), by_birth(B));
    std::sort(sc.essential.begin(), sc.essential.end(), by_birth(C));
    for (std::size_t k = 0; k < sb.essential.size(); ++k) {
        out.total = costs.combine(out.total, costs.essential_pair(B[sb.essential[k]], C[sc.essential[k]]));
        out.matching.pairs.emplace_back(sb.essential[k], sc.essential[k]);
    }

    const std::size_t n = sb.finite.size(), m = sc.finite.size(), N = n + m;
    if (N == 0) return out;

    // Rows: finite bars of B, then diagonal copies for C. Columns: finite bars of C, then diagonal copies for B.
    detail::CostMatrix<T> a(N, std::vector<T>(N, T(0)));
    std::vector<std::vector<char>> allowed(N, std::vector<char>(N, 1));
    T forbidden(1);
    for (std::size_t i = 0; i < n; ++i) forbidden += costs.diagonal(B[sb.finite[i]]);
    for (std::size_t j = 0; j < m; ++j) forbidden += costs.diagonal(C[sc.finite[j]]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = costs.pair(B[sb.finite[i]], C[sc.finite[j]]);
        for (std::size_t k = 0; k < n; ++k) {
            a[i][m + k] = k == i ? costs.diagonal(B[sb.finite[i]]) : forbidden;
            allowed[i][m + k] = k == i;
        }
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < m; ++j) {
            a[n + k][j] = k == j ? costs.diagonal(C[sc.finite[j]]) : forbidden;
            allowed[n + k][j] = k == j;
        }

    auto assign = p.is_infinite() ? detail::bottleneck_assignment(a, allowed) : detail::min_cost_assignment(a);
    for (std::size_t i = 0; i < N; ++i) {
        out.total = costs.combine(out.total, a[i][assign[i]]);
        if (i < n && assign[i] < m) out.matching.pairs.emplace_back(sb.finite[i], sc.finite[assign[i]]);
    }
    std::sort(out.matching.pairs.begin(), out.matching.pairs.end());
    return out;
}

NormValue to_norm(const Solved<Rational>& s, const PExponent& p) {
    NormValue v;
    if (s.infinite) {
        v.infinite = true;
        v.value = std::numeric_limits<double>::infinity();
        return v;
    }
    v.exact = s.total;
    v.value = p.is_infinite() ? to_double(s.total) : root_to_double(s.total, *p.integer());
    return v;
}

NormValue to_norm(const Solved<double>& s, const PExponent& p) {
    NormValue v;
    v.infinite = s.infinite;
    v.value = s.infinite ? std::numeric_limits<double>::infinity() : root_of(s.total, p);
    return v;
}

std::vector<FastBar> to_fast(const Barcode& b) {
    std::vector<FastBar> out;
    out.reserve(b.size());
    for (const auto& bar : b) out.push_back({to_double(bar.birth), bar.essential ? 0.0 : to_double(bar.death), bar.essential});
    return out;
}

bool exact_capable(const PExponent& p) { return p.is_infinite() || p.integer().has_value(); }

}  // namespace

NormValue matching_cost(const Barcode& B, const Barcode& C, const Matching& m, const PExponent& p) {
    std::vector<char> usedB(B.size()), usedC(C.size());
    for (auto [i, j] : m.pairs) {
        if (i >= B.size() || j >= C.size()) throw DataError("matching index out of range");
        if (usedB[i] || usedC[j]) throw DataError("bar matched twice");
        usedB[i] = usedC[j] = 1;
    }
    NormAccumulator acc(p);
    auto add_pair = [&](const Bar& a, const Bar& b) {
        if (a.essential != b.essential) {
            acc.add_infinite();
            return;
        }
        acc.add(abs(a.birth - b.birth));
        if (!a.essential) acc.add(abs(a.death - b.death));
    };
    auto add_unmatched = [&](const Bar& a) {
        if (a.essential) {
            acc.add_infinite();
            return;
        }
        Rational half = (a.death - a.birth) / 2;
        acc.add(half);
        acc.add(half);
    };
    for (auto [i, j] : m.pairs) add_pair(B[i], C[j]);
    for (std::size_t i = 0; i < B.size(); ++i)
        if (!usedB[i]) add_unmatched(B[i]);
    for (std::size_t j = 0; j < C.size(); ++j)
        if (!usedC[j]) add_unmatched(C[j]);
    return acc.result();
}

Result optimal(const Barcode& B, const Barcode& C, const PExponent& p) {
    if (exact_capable(p)) {
        auto s = solve<Rational>(std::span<const Bar>(B), std::span<const Bar>(C), p);
        return {to_norm(s, p), std::move(s.matching)};
    }
    auto fb = to_fast(B), fc = to_fast(C);
    auto s = solve<double>(std::span<const FastBar>(fb), std::span<const FastBar>(fc), p);
    return {to_norm(s, p), std::move(s.matching)};
}

NormValue distance(const Barcode& B, const Barcode& C, const PExponent& p) { return optimal(B, C, p).distance; }

double distance_fast(std::span<const FastBar> B, std::span<const FastBar> C, const PExponent& p) {
    return to_norm(solve<double>(B, C, p), p).value;
}

namespace {

// Exhaustive enumeration: B bar i is left unmatched or paired with any unused C bar.
template <class T>
Solved<T> enumerate(std::span<const BasicBar<T>> B, std::span<const BasicBar<T>> C, const PExponent& p) {
    Costs<T> costs{p};
    Solved<T> best;
    bool have_best = false;
    std::vector<char> usedC(C.size());
    Matching current;
    std::function<void(std::size_t, T)> rec = [&](std::size_t i, T acc) {
        if (i == B.size()) {
            for (std::size_t j = 0; j < C.size(); ++j) {
                if (usedC[j]) continue;
                if (C[j].essential) return;
                acc = costs.combine(acc, costs.diagonal(C[j]));
            }
            if (!have_best || acc < best.total) {
                best.total = acc;
                best.matching = current;
                have_best = true;
            }
            return;
        }
        if (!B[i].essential) rec(i + 1, costs.combine(acc, costs.diagonal(B[i])));
        for (std::size_t j = 0; j < C.size(); ++j) {
            if (usedC[j] || C[j].essential != B[i].essential) continue;
            usedC[j] = 1;
            current.pairs.emplace_back(i, j);
            rec(i + 1, costs.combine(acc, B[i].essential ? costs.essential_pair(B[i], C[j]) : costs.pair(B[i], C[j])));
            current.pairs.pop_back();
            usedC[j] = 0;
        }
    };
    rec(0, T(0));
    best.infinite = !have_best;
    return best;
}

}  // namespace

NormValue brute_force(const Barcode& B, const Barcode& C, const PExponent& p) {
    if (B.size() + C.size() > 12) throw DataError("brute force search limited to 12 bars in total");
    if (exact_capable(p)) return to_norm(enumerate<Rational>(std::span<const Bar>(B), std::span<const Bar>(C), p), p);
    auto fb = to_fast(B), fc = to_fast(C);
    return to_norm(enumerate<double>(std::span<const FastBar>(fb), std::span<const FastBar>(fc), p), p);
}

}  // namespace mpm::wasserstein
