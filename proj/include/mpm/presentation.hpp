#pragma once

#include "mpm/field.hpp"
#include "mpm/grade.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mpm {

struct Entry {
    std::uint32_t row;
    Coeff value;
    bool operator==(const Entry&) const = default;
};

// Nonzero entries sorted by row index.
using SparseColumn = std::vector<Entry>;

// Graded matrix presenting coker: rows are generators, columns relations.
class Presentation {
public:
    Presentation() = default;
    // Validates shape, field range, sortedness and label order; throws DataError.
    Presentation(PrimeField field, std::size_t n_params, std::vector<Grade> row_labels,
                 std::vector<Grade> col_labels, std::vector<SparseColumn> columns);

    const PrimeField& field() const { return field_; }
    std::size_t n_params() const { return n_params_; }
    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::vector<Grade>& row_labels() const { return row_labels_; }
    const std::vector<Grade>& col_labels() const { return col_labels_; }
    const std::vector<SparseColumn>& columns() const { return columns_; }
    const SparseColumn& column(std::size_t j) const { return columns_[j]; }
    Coeff entry(std::size_t i, std::size_t j) const;

    // Rows first, then columns.
    std::vector<Grade> labels() const;

    // Same field, shape and entries; labels may differ.
    bool same_matrix(const Presentation& o) const;

    bool operator==(const Presentation&) const = default;

private:
    PrimeField field_{2};
    std::size_t n_params_ = 2;
    std::vector<Grade> row_labels_;
    std::vector<Grade> col_labels_;
    std::vector<SparseColumn> columns_;
};

// Same matrix, new labels (validated).
Presentation relabel(const Presentation& p, std::vector<Grade> row_labels, std::vector<Grade> col_labels);

}  // namespace mpm
