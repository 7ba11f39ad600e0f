#include "mpm/presdist.hpp"

#include "mpm/errors.hpp"
#include "mpm/invariants.hpp"
#include "assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace mpm::presdist {

NormValue grades_distance(std::span<const Grade> a, std::span<const Grade> b, const PExponent& p) {
    if (a.size() != b.size()) throw DataError("label vectors of different lengths");
    NormAccumulator acc(p);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) throw DataError("grades with different numbers of parameters");
        for (std::size_t c = 0; c < a[i].size(); ++c) acc.add(abs(Rational(a[i][c] - b[i][c])));
    }
    return acc.result();
}

NormValue label_distance(const Presentation& P, const Presentation& Q, const PExponent& p) {
    if (!P.same_matrix(Q)) throw DataError("label distance needs presentations with the same matrix");
    if (P.n_params() != Q.n_params()) throw DataError("presentations with different numbers of parameters");
    auto a = P.labels(), b = Q.labels();
    return grades_distance(a, b, p);
}

NormValue label_distance(const PairedPresentations& pp, const PExponent& p) {
    return label_distance(pp.first, pp.second, p);
}

namespace {

double approx_cost(const Grade& a, const Grade& b, const PExponent& p) {
    double s = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        double d = std::fabs(to_double(a[c] - b[c]));
        s += p.is_infinite() ? d : power_of(d, p);
    }
    return s;
}

// Embeds the matrix of A (fewer rows) into the matrix of B.
class Embedder {
public:
    Embedder(const Presentation& A, const Presentation& B, const PExponent& p) : A_(A), B_(B), p_(p) {
        dense_a_.assign(A.rows(), std::vector<Coeff>(A.cols(), 0));
        dense_b_.assign(B.rows(), std::vector<Coeff>(B.cols(), 0));
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (const Entry& e : A.column(j)) dense_a_[e.row][j] = e.value;
        for (std::size_t j = 0; j < B.cols(); ++j)
            for (const Entry& e : B.column(j)) dense_b_[e.row][j] = e.value;
    }

    std::optional<Presentation> run() {
        if (A_.cols() > B_.cols()) return std::nullopt;
        rho_.clear();
        used_.assign(B_.rows(), false);
        std::vector<std::vector<std::size_t>> compat(A_.cols());
        for (auto& c : compat) {
            c.resize(B_.cols());
            std::iota(c.begin(), c.end(), 0);
        }
        dfs(0, compat);
        return best_;
    }

private:
    void dfs(std::size_t i, const std::vector<std::vector<std::size_t>>& compat) {
        if (budget_ == 0 || (best_value_ && best_value_->value == 0)) return;
        --budget_;
        if (i == A_.rows()) {
            complete();
            return;
        }
        std::vector<std::size_t> cand;
        for (std::size_t b = 0; b < B_.rows(); ++b)
            if (!used_[b]) cand.push_back(b);
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
            return approx_cost(A_.row_labels()[i], B_.row_labels()[x], p_) <
                   approx_cost(A_.row_labels()[i], B_.row_labels()[y], p_);
        });
        for (std::size_t b : cand) {
            std::vector<std::vector<std::size_t>> next(A_.cols());
            bool ok = true;
            for (std::size_t j = 0; j < A_.cols() && ok; ++j) {
                for (std::size_t k : compat[j])
                    if (dense_b_[b][k] == dense_a_[i][j]) next[j].push_back(k);
                ok = !next[j].empty();
            }
            if (!ok) continue;
            used_[b] = true;
            rho_.push_back(b);
            dfs(i + 1, next);
            rho_.pop_back();
            used_[b] = false;
        }
    }

    void complete() {
        const std::size_t nb = B_.cols(), na = A_.cols();
        // Columns of B usable for column j of A: equal on the mapped rows, zero elsewhere.
        if (na > nb) return;
        const double forbidden = 1e15;
        detail::CostMatrix<double> cost(nb, std::vector<double>(nb, 0));
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k) {
                bool ok = true;
                for (std::size_t x = 0; x < B_.rows() && ok; ++x) {
                    Coeff want = 0;
                    for (std::size_t i = 0; i < rho_.size(); ++i)
                        if (rho_[i] == x) want = dense_a_[i][j];
                    ok = dense_b_[x][k] == want;
                }
                cost[j][k] = ok ? approx_cost(A_.col_labels()[j], B_.col_labels()[k], p_) : forbidden;
            }
        auto assign = detail::min_cost_assignment(cost);
        std::vector<std::ptrdiff_t> owner(nb, -1);
        for (std::size_t j = 0; j < na; ++j) {
            if (cost[j][assign[j]] >= forbidden) return;
            owner[assign[j]] = static_cast<std::ptrdiff_t>(j);
        }

        std::vector<std::optional<Grade>> row_label(B_.rows()), col_label(nb);
        for (std::size_t i = 0; i < rho_.size(); ++i) row_label[rho_[i]] = A_.row_labels()[i];
        for (std::size_t k = 0; k < nb; ++k)
            if (owner[k] >= 0) col_label[k] = A_.col_labels()[owner[k]];
        // Leftover columns: zero ones keep their label, others must resolve leftover rows one at a time.
        std::vector<std::size_t> pending;
        for (std::size_t k = 0; k < nb; ++k) {
            if (owner[k] >= 0) continue;
            if (B_.column(k).empty())
                col_label[k] = B_.col_labels()[k];
            else
                pending.push_back(k);
        }
        for (bool progress = true; progress && !pending.empty();) {
            progress = false;
            for (auto it = pending.begin(); it != pending.end(); ++it) {
                std::size_t k = *it, open = SIZE_MAX, count = 0;
                for (const Entry& e : B_.column(k))
                    if (!row_label[e.row]) open = e.row, ++count;
                if (count != 1) continue;
                // New generator and its relation share a label above the other rows in the column.
                const Grade &bu = B_.row_labels()[open], &bv = B_.col_labels()[k];
                Grade L = bu;
                for (std::size_t c = 0; c < L.size(); ++c) L[c] = (bu[c] + bv[c]) / 2;
                for (const Entry& e : B_.column(k))
                    if (e.row != open) L = join(L, *row_label[e.row]);
                row_label[open] = L;
                col_label[k] = L;
                pending.erase(it);
                progress = true;
                break;
            }
        }
        if (!pending.empty()) return;
        for (const auto& l : row_label)
            if (!l) return;
        std::vector<Grade> rows, cols;
        for (auto& l : row_label) rows.push_back(*l);
        for (auto& l : col_label) cols.push_back(*l);
        Presentation cand;
        try {
            cand = relabel(B_, std::move(rows), std::move(cols));
        } catch (const DataError&) {
            return;
        }
        NormValue v = label_distance(cand, B_, p_);
        if (!best_value_ || compare(v, *best_value_) < 0) {
            best_value_ = v;
            best_ = std::move(cand);
        }
    }

    const Presentation &A_, &B_;
    PExponent p_;
    std::vector<std::vector<Coeff>> dense_a_, dense_b_;
    std::vector<std::size_t> rho_;
    std::vector<bool> used_;
    std::size_t budget_ = 200000;
    std::optional<Presentation> best_;
    std::optional<NormValue> best_value_;
};

}  // namespace

std::optional<PairedPresentations> pad_and_pair(const Presentation& P, const Presentation& Q, const PExponent& p) {
    if (!(P.field() == Q.field())) throw DataError("presentations over different fields");
    if (P.n_params() != Q.n_params()) throw DataError("presentations with different numbers of parameters");
    bool swap = P.rows() > Q.rows();
    const Presentation &A = swap ? Q : P, &B = swap ? P : Q;
    auto e = Embedder(A, B, p).run();
    if (!e) return std::nullopt;
    if (swap) return PairedPresentations{B, *e};
    return PairedPresentations{*e, B};
}

bool same_hilbert_function(const Presentation& P, const Presentation& Q) {
    if (P.n_params() != Q.n_params()) return false;
    std::vector<std::set<Rational>> coords(P.n_params());
    for (const auto* X : {&P, &Q})
        for (const auto& g : X->labels())
            for (std::size_t c = 0; c < g.size(); ++c) coords[c].insert(g[c]);
    for (auto& s : coords) {
        if (s.empty()) s.insert(Rational(0));
        s.insert(*s.begin() - 1);
    }
    std::vector<Rational> xs(coords[0].begin(), coords[0].end());
    std::vector<Rational> ys = P.n_params() == 2 ? std::vector<Rational>(coords[1].begin(), coords[1].end())
                                                 : std::vector<Rational>{Rational(0)};
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Grade g = P.n_params() == 2 ? Grade(x, y) : Grade(x);
            if (hilbert_dim(P, g) != hilbert_dim(Q, g)) return false;
        }
    return true;
}

ChainBound chain_upper_bound(std::span<const PairedPresentations> chain, const PExponent& p) {
    ChainBound r;
    bool exact = p.is_infinite() || p.value() == 1;
    if (exact) r.exact = Rational(0);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k && !same_hilbert_function(chain[k - 1].second, chain[k].first))
            throw DataError("chain links " + std::to_string(k - 1) + " and " + std::to_string(k) +
                            " do not share a module");
        NormValue d = label_distance(chain[k], p);
        if (d.infinite) {
            r.value = std::numeric_limits<double>::infinity();
            r.exact.reset();
            return r;
        }
        r.value += d.value;
        if (exact) *r.exact += *d.exact;
    }
    if (exact) r.value = to_double(*r.exact);
    return r;
}

BoundsReport bounds(const Presentation& M, const Presentation& N, const PExponent& p,
                    const matchdist::Options& options) {
    BoundsReport r;
    r.lower = matchdist::approx_matching_distance(M, N, p, options);
    r.notes.push_back("lower: matching distance lower bound, best of " + std::to_string(r.lower.lines_evaluated) +
                      " lines");
    r.pairing = pad_and_pair(M, N, p);
    if (r.pairing) {
        r.upper = label_distance(*r.pairing, p);
        r.notes.push_back("upper: label distance of a pairing of presentations on one matrix (" +
                          std::to_string(r.pairing->first.rows()) + "x" + std::to_string(r.pairing->first.cols()) +
                          ")");
    } else {
        r.notes.push_back("upper: no pairing found; no finite upper bound reported");
    }
    return r;
}

}  // namespace mpm::presdist
