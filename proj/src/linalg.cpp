#include "mpm/linalg.hpp"

namespace mpm {

namespace {

std::optional<std::size_t> last_nonzero(const DenseVec& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i]) return i;
    return std::nullopt;
}

void axpy(const PrimeField& f, DenseVec& y, Coeff a, const DenseVec& x) {
    if (a == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i]) y[i] = f.add(y[i], f.mul(a, x[i]));
}

}  // namespace

std::size_t rank_of_columns(const PrimeField& f, std::vector<DenseVec> cols) {
    if (cols.empty()) return 0;
    Echelon e(f, cols[0].size());
    for (auto& c : cols) e.insert(std::move(c), {});
    return e.rank();
}

DenseVec to_dense(const SparseColumn& c, std::size_t rows) {
    DenseVec v(rows, 0);
    for (const auto& e : c) v[e.row] = e.value;
    return v;
}

SparseColumn to_sparse(const DenseVec& v) {
    SparseColumn c;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) c.push_back({static_cast<std::uint32_t>(i), v[i]});
    return c;
}

Echelon::Echelon(PrimeField f, std::size_t dim, std::size_t tag_dim) : f_(f), dim_(dim), tag_dim_(tag_dim) {}

Echelon::Reduced Echelon::reduce(DenseVec v) const {
    Reduced r{std::move(v), DenseVec(tag_dim_, 0)};
    for (std::size_t i = r.residual.size(); i-- > 0;) {
        if (!r.residual[i]) continue;
        auto it = by_pivot_.find(i);
        if (it == by_pivot_.end()) continue;
        const Row& b = basis_[it->second];
        Coeff c = f_.div(r.residual[i], b.v[i]);
        axpy(f_, r.residual, f_.neg(c), b.v);
        axpy(f_, r.tag, c, b.tag);
    }
    return r;
}

bool Echelon::insert(DenseVec v, DenseVec tag) {
    tag.resize(tag_dim_, 0);
    Reduced r = reduce(std::move(v));
    auto p = last_nonzero(r.residual);
    if (!p) return false;
    // residual = v - sum r.tag_i * inserted_i, so its tag is tag - r.tag.
    for (std::size_t i = 0; i < tag_dim_; ++i) tag[i] = f_.sub(tag[i], r.tag[i]);
    by_pivot_[*p] = basis_.size();
    basis_.push_back({std::move(r.residual), std::move(tag)});
    return true;
}

}  // namespace mpm
