#pragma once

// Square assignment problems over an ordered scalar type (Rational or double).

#include <algorithm>
#include <cstddef>
#include <vector>

namespace mpm::detail {

template <class T>
using CostMatrix = std::vector<std::vector<T>>;

// Shortest augmenting path (Hungarian) algorithm; returns the column assigned to each row.
template <class T>
std::vector<std::size_t> min_cost_assignment(const CostMatrix<T>& a) {
    const std::size_t n = a.size();
    std::vector<T> u(n + 1, T(0)), v(n + 1, T(0)), minv(n + 1, T(0));
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(used.begin(), used.end(), 0);
        std::vector<char> seen(n + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = p[j0], j1 = 0;
            T delta(0);
            bool have_delta = false;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                T cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (!seen[j] || cur < minv[j]) {
                    minv[j] = cur;
                    seen[j] = 1;
                    way[j] = j0;
                }
                if (!have_delta || minv[j] < delta) {
                    delta = minv[j];
                    have_delta = true;
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<std::size_t> row_to_col(n);
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j]) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

// Perfect matching using only allowed edges; empty result when none exists.
inline bool perfect_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t n,
                             std::vector<std::size_t>& row_to_col) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> col_to_row(n, none);
    std::vector<char> visited(n);
    auto augment = [&](auto&& self, std::size_t r) -> bool {
        for (std::size_t c : adj[r]) {
            if (visited[c]) continue;
            visited[c] = 1;
            if (col_to_row[c] == none || self(self, col_to_row[c])) {
                col_to_row[c] = r;
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, r)) return false;
    }
    row_to_col.assign(n, 0);
    for (std::size_t c = 0; c < n; ++c) row_to_col[col_to_row[c]] = c;
    return true;
}

// Minimises the largest used cost; allowed[i][j] false marks forbidden pairs.
template <class T>
std::vector<std::size_t> bottleneck_assignment(const CostMatrix<T>& a, const std::vector<std::vector<char>>& allowed) {
    const std::size_t n = a.size();
    std::vector<T> values;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (allowed[i][j]) values.push_back(a[i][j]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::size_t> best;
    std::size_t lo = 0, hi = values.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (allowed[i][j] && !(values[mid] < a[i][j])) adj[i].push_back(j);
        std::vector<std::size_t> m;
        if (perfect_matching(adj, n, m)) {
            best = std::move(m);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return best;
}

}  // namespace mpm::detail
