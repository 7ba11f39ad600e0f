#include "mpm/invariants.hpp"

#include "mpm/errors.hpp"
#include "mpm/linalg.hpp"

namespace mpm {

namespace {

std::vector<DenseVec> relations_below(const Presentation& p, const Grade& t) {
    std::vector<DenseVec> out;
    for (std::size_t j = 0; j < p.cols(); ++j)
        if (p.col_labels()[j] <= t) out.push_back(to_dense(p.column(j), p.rows()));
    return out;
}

}  // namespace

std::size_t hilbert_dim(const Presentation& p, const Grade& g) {
    std::size_t gens = 0;
    for (const auto& r : p.row_labels())
        if (r <= g) ++gens;
    return gens - rank_of_columns(p.field(), relations_below(p, g));
}

std::size_t rank_invariant(const Presentation& p, const Grade& s, const Grade& t) {
    if (!(s <= t)) throw DataError("rank invariant needs s <= t, got " + s.str() + " and " + t.str());
    auto rel = relations_below(p, t);
    std::size_t rank_r = rank_of_columns(p.field(), rel);
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (!(p.row_labels()[i] <= s)) continue;
        DenseVec e(p.rows(), 0);
        e[i] = 1;
        rel.push_back(std::move(e));
    }
    return rank_of_columns(p.field(), std::move(rel)) - rank_r;
}

}  // namespace mpm
