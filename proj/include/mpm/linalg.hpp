#pragma once

#include "mpm/field.hpp"
#include "mpm/presentation.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mpm {

// Dense vector over F_q.
using DenseVec = std::vector<Coeff>;

std::size_t rank_of_columns(const PrimeField& f, std::vector<DenseVec> cols);

DenseVec to_dense(const SparseColumn& c, std::size_t rows);
SparseColumn to_sparse(const DenseVec& v);

// Incremental column echelon form. Each inserted vector carries a tag vector
// recording its combination of the originally inserted vectors.
class Echelon {
public:
    Echelon(PrimeField f, std::size_t dim, std::size_t tag_dim = 0);

    // Reduces v against the basis; returns tag coefficients c with v - sum c_i * inserted_i reduced.
    // When v lies in the span, residual() is zero afterwards.
    struct Reduced {
        DenseVec residual;
        DenseVec tag;  // combination subtracted, in terms of inserted tags
    };
    Reduced reduce(DenseVec v) const;

    // Inserts v with the given tag; returns false when v was dependent.
    bool insert(DenseVec v, DenseVec tag);

    std::size_t rank() const { return basis_.size(); }

private:
    PrimeField f_;
    std::size_t dim_, tag_dim_;
    struct Row {
        DenseVec v;
        DenseVec tag;
    };
    std::vector<Row> basis_;
    std::unordered_map<std::size_t, std::size_t> by_pivot_;
};

}  // namespace mpm
