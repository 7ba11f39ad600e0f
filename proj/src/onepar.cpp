#include "mpm/onepar.hpp"

#include "mpm/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mpm::onepar {

namespace {

template <class T>
std::vector<std::size_t> order_by(std::span<const T> labels) {
    std::vector<std::size_t> idx(labels.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    return idx;
}

struct RankedEntry {
    std::uint32_t rank;
    Coeff value;
};

// a += c * b, both sorted by rank.
void add_scaled(const PrimeField& f, std::vector<RankedEntry>& a, Coeff c, const std::vector<RankedEntry>& b,
                std::vector<RankedEntry>& scratch) {
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].rank < b[j].rank)) {
            scratch.push_back(a[i++]);
        } else if (i == a.size() || b[j].rank < a[i].rank) {
            scratch.push_back({b[j].rank, f.mul(c, b[j].value)});
            ++j;
        } else {
            Coeff v = f.add(a[i].value, f.mul(c, b[j].value));
            if (v) scratch.push_back({a[i].rank, v});
            ++i;
            ++j;
        }
    }
    a.swap(scratch);
}

std::vector<Rational> labels_1d(const std::vector<Grade>& g) {
    std::vector<Rational> out;
    out.reserve(g.size());
    for (const auto& x : g) out.push_back(x[0]);
    return out;
}

void require_one_parameter(const Presentation& p) {
    if (p.n_params() != 1) throw DataError("expected a 1-parameter presentation");
}

}  // namespace

template <class T>
std::vector<PivotPair> pivot_pairs(const PrimeField& field, std::span<const SparseColumn> columns,
                                   std::span<const T> row_labels, std::span<const T> col_labels) {
    auto row_order = order_by(row_labels);
    std::vector<std::uint32_t> rank(row_labels.size());
    for (std::size_t k = 0; k < row_order.size(); ++k) rank[row_order[k]] = static_cast<std::uint32_t>(k);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(row_labels.size(), none);  // rank -> reduced column slot
    std::vector<std::vector<RankedEntry>> reduced;
    std::vector<RankedEntry> work, scratch;
    std::vector<PivotPair> pairs;

    for (std::size_t j : order_by(col_labels)) {
        work.clear();
        for (const auto& e : columns[j]) work.push_back({rank[e.row], e.value});
        std::sort(work.begin(), work.end(), [](const RankedEntry& a, const RankedEntry& b) { return a.rank < b.rank; });
        while (!work.empty() && owner[work.back().rank] != none) {
            const auto& pivot = reduced[owner[work.back().rank]];
            Coeff c = field.neg(field.div(work.back().value, pivot.back().value));
            add_scaled(field, work, c, pivot, scratch);
        }
        if (work.empty()) continue;
        owner[work.back().rank] = reduced.size();
        pairs.push_back({row_order[work.back().rank], j});
        reduced.push_back(work);
    }
    return pairs;
}

template std::vector<PivotPair> pivot_pairs<Rational>(const PrimeField&, std::span<const SparseColumn>,
                                                      std::span<const Rational>, std::span<const Rational>);
template std::vector<PivotPair> pivot_pairs<double>(const PrimeField&, std::span<const SparseColumn>,
                                                    std::span<const double>, std::span<const double>);

std::vector<wasserstein::FastBar> barcode_fast(const PrimeField& field, std::span<const SparseColumn> columns,
                                               std::span<const double> row_labels,
                                               std::span<const double> col_labels) {
    std::vector<wasserstein::FastBar> bars;
    std::vector<char> paired(row_labels.size());
    for (auto [r, c] : pivot_pairs(field, columns, row_labels, col_labels)) {
        paired[r] = 1;
        if (row_labels[r] < col_labels[c]) bars.push_back({row_labels[r], col_labels[c], false});
    }
    for (std::size_t r = 0; r < row_labels.size(); ++r)
        if (!paired[r]) bars.push_back({row_labels[r], 0.0, true});
    return bars;
}

Barcode barcode_of(const Presentation& p) {
    require_one_parameter(p);
    auto rl = labels_1d(p.row_labels()), cl = labels_1d(p.col_labels());
    Barcode bars;
    std::vector<char> paired(p.rows());
    for (auto [r, c] : pivot_pairs<Rational>(p.field(), p.columns(), rl, cl)) {
        paired[r] = 1;
        if (rl[r] != cl[c]) bars.push_back(finite_bar(rl[r], cl[c]));
    }
    for (std::size_t r = 0; r < p.rows(); ++r)
        if (!paired[r]) bars.push_back(essential_bar(rl[r]));
    return bars;
}

NormalForm reduce_to_normal_form(const Presentation& p, std::vector<Operation>* log) {
    require_one_parameter(p);
    const PrimeField& f = p.field();
    const std::size_t R = p.rows(), C = p.cols();
    auto rl = labels_1d(p.row_labels()), cl = labels_1d(p.col_labels());
    std::vector<std::vector<Coeff>> m(C, std::vector<Coeff>(R, 0));  // column-major
    for (std::size_t j = 0; j < C; ++j)
        for (const auto& e : p.column(j)) m[j][e.row] = e.value;

    auto row_order = order_by<Rational>(rl);
    std::vector<std::size_t> rank(R);
    for (std::size_t k = 0; k < R; ++k) rank[row_order[k]] = k;
    auto low = [&](std::size_t j) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < R; ++i)
            if (m[j][i] && (!best || rank[i] > rank[*best])) best = i;
        return best;
    };

    // Column phase: lowest pivots, earlier columns added into later ones.
    std::vector<std::optional<std::size_t>> pivot_row(C);
    std::vector<std::optional<std::size_t>> column_of_row(R);
    for (std::size_t j : order_by<Rational>(cl)) {
        while (auto r = low(j)) {
            if (!column_of_row[*r]) break;
            std::size_t k = *column_of_row[*r];
            Coeff c = f.neg(f.div(m[j][*r], m[k][*r]));
            for (std::size_t i = 0; i < R; ++i)
                if (m[k][i]) m[j][i] = f.add(m[j][i], f.mul(c, m[k][i]));
            if (log) log->push_back({Operation::AddColumn, j, k, c});
        }
        if (auto r = low(j)) {
            pivot_row[j] = *r;
            column_of_row[*r] = j;
        }
    }

    // Row phase: clear everything above each pivot using the pivot row.
    for (std::size_t j = 0; j < C; ++j) {
        if (!pivot_row[j]) continue;
        std::size_t r = *pivot_row[j];
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || !m[j][i]) continue;
            Coeff c = f.neg(f.div(m[j][i], m[j][r]));
            for (std::size_t k = 0; k < C; ++k)
                if (m[k][r]) m[k][i] = f.add(m[k][i], f.mul(c, m[k][r]));
            if (log) log->push_back({Operation::AddRow, i, r, c});
        }
    }

    std::vector<SparseColumn> cols(C);
    for (std::size_t j = 0; j < C; ++j)
        for (std::size_t i = 0; i < R; ++i)
            if (m[j][i]) cols[j].push_back({static_cast<std::uint32_t>(i), m[j][i]});
    return {Presentation(f, 1, p.row_labels(), p.col_labels(), std::move(cols)), std::move(pivot_row)};
}

std::vector<Rational> interpolation_breakpoints(std::span<const Rational> L0, std::span<const Rational> L1) {
    if (L0.size() != L1.size()) throw DataError("label vectors differ in length");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < L0.size(); ++i)
        for (std::size_t j = i + 1; j < L0.size(); ++j) {
            Rational d0 = L0[i] - L0[j], d1 = L1[i] - L1[j];
            if (d0 == d1) continue;  // constant difference: equal everywhere or nowhere
            Rational t = d0 / (d0 - d1);
            if (t > 0 && t < 1) out.push_back(t);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mpm::onepar
