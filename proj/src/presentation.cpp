#include "mpm/presentation.hpp"

#include "mpm/errors.hpp"

#include <algorithm>

namespace mpm {

Presentation::Presentation(PrimeField field, std::size_t n_params, std::vector<Grade> row_labels,
                           std::vector<Grade> col_labels, std::vector<SparseColumn> columns)
    : field_(field),
      n_params_(n_params),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      columns_(std::move(columns)) {
    if (n_params_ != 1 && n_params_ != 2) throw DataError("number of parameters must be 1 or 2");
    if (columns_.size() != col_labels_.size())
        throw DataError("column count does not match the number of column labels");
    for (const auto& g : row_labels_)
        if (g.size() != n_params_) throw DataError("row label " + g.str() + " has the wrong dimension");
    for (const auto& g : col_labels_)
        if (g.size() != n_params_) throw DataError("column label " + g.str() + " has the wrong dimension");
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        const auto& col = columns_[j];
        for (std::size_t k = 0; k < col.size(); ++k) {
            const Entry& e = col[k];
            if (e.row >= row_labels_.size())
                throw DataError("column " + std::to_string(j) + " refers to missing row " + std::to_string(e.row));
            if (e.value == 0 || !field_.contains(e.value))
                throw DataError("entry in column " + std::to_string(j) + " is not a nonzero element of F_" +
                                std::to_string(field_.q()));
            if (k && col[k - 1].row >= e.row)
                throw DataError("column " + std::to_string(j) + " has unsorted or repeated row indices");
            if (!(row_labels_[e.row] <= col_labels_[j]))
                throw DataError("label order violated: row " + std::to_string(e.row) + " " +
                                row_labels_[e.row].str() + " is not <= column " + std::to_string(j) + " " +
                                col_labels_[j].str());
        }
    }
}

Coeff Presentation::entry(std::size_t i, std::size_t j) const {
    const auto& col = columns_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    return it != col.end() && it->row == i ? it->value : 0;
}

std::vector<Grade> Presentation::labels() const {
    std::vector<Grade> out = row_labels_;
    out.insert(out.end(), col_labels_.begin(), col_labels_.end());
    return out;
}

bool Presentation::same_matrix(const Presentation& o) const {
    return field_ == o.field_ && rows() == o.rows() && columns_ == o.columns_;
}

Presentation relabel(const Presentation& p, std::vector<Grade> row_labels, std::vector<Grade> col_labels) {
    std::size_t n = row_labels.empty() ? (col_labels.empty() ? p.n_params() : col_labels[0].size())
                                       : row_labels[0].size();
    return Presentation(p.field(), n, std::move(row_labels), std::move(col_labels), p.columns());
}

}  // namespace mpm
