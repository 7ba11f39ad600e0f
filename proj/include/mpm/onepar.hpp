#pragma once

#include "mpm/barcode.hpp"
#include "mpm/presentation.hpp"
#include "mpm/wasserstein.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mpm::onepar {

// target += factor * source, on columns or on rows.
struct Operation {
    enum Kind { AddColumn, AddRow } kind;
    std::size_t target;
    std::size_t source;
    Coeff factor;
};

struct NormalForm {
    Presentation base;
    // pivot_row[j] is the row of the single nonzero entry of column j, if any.
    std::vector<std::optional<std::size_t>> pivot_row;
};

// Requires a 1-parameter presentation. Every logged operation is admissible.
NormalForm reduce_to_normal_form(const Presentation& p, std::vector<Operation>* log = nullptr);

Barcode barcode_of(const Presentation& p);

struct PivotPair {
    std::size_t row, col;
};

// Pivot pairs of the column reduction for the given label values; T is Rational or double.
// Zero columns yield no pair; rows without a pair are essential.
template <class T>
std::vector<PivotPair> pivot_pairs(const PrimeField& field, std::span<const SparseColumn> columns,
                                   std::span<const T> row_labels, std::span<const T> col_labels);

// Barcode of the module whose presentation has the given matrix and label values.
std::vector<wasserstein::FastBar> barcode_fast(const PrimeField& field, std::span<const SparseColumn> columns,
                                               std::span<const double> row_labels,
                                               std::span<const double> col_labels);

// All t in (0,1) where two interpolated labels (1-t)L0 + tL1 meet while differing elsewhere.
std::vector<Rational> interpolation_breakpoints(std::span<const Rational> L0, std::span<const Rational> L1);

}  // namespace mpm::onepar
