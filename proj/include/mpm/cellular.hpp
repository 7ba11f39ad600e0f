#pragma once

#include "mpm/field.hpp"
#include "mpm/grade.hpp"
#include "mpm/pnorm.hpp"
#include "mpm/presentation.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpm::cellular {

struct Cell {
    std::string id;
    std::size_t dim = 0;
    Grade grade;
    // (index of face cell, coefficient), nonzero coefficients only.
    std::vector<std::pair<std::size_t, Coeff>> boundary;
};

// Bifiltered (or filtered) cell complex with a monotone grade function.
class FilteredComplex {
public:
    FilteredComplex() = default;
    // Validates dimensions, face indices, monotonicity and that the boundary squares to zero; throws DataError.
    FilteredComplex(PrimeField field, std::size_t n_params, std::vector<Cell> cells);

    const PrimeField& field() const { return field_; }
    std::size_t n_params() const { return n_params_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::vector<Grade> grades() const;
    std::size_t max_dim() const;
    // Indices of the cells of dimension j, in file order.
    std::vector<std::size_t> cells_of_dim(std::size_t j) const;

private:
    PrimeField field_{2};
    std::size_t n_params_ = 2;
    std::vector<Cell> cells_;
};

// Same cells, new grades (validated).
FilteredComplex regrade(const FilteredComplex& X, std::vector<Grade> grades);

// ||(||f(c) - g(c)||_p)_c||_p over the cells of two regradings of one complex.
NormValue filtration_distance(const FilteredComplex& X, const FilteredComplex& Y, const PExponent& p);

// .cwf documents. "kind simplicial" switches cell lines to "<id> <dim> <grade…> : <vertex ids>" with
// boundaries derived from the faces (alternating signs in vertex declaration order).
FilteredComplex parse_complex(std::string_view text);
std::string serialize_complex(const FilteredComplex& X);

// Matrix of a map of free modules; rows are the codomain basis, columns the domain basis.
using FreeMorphism = Presentation;

// Boundary j-cells -> (j-1)-cells. For j = 0 the codomain is empty.
FreeMorphism boundary_morphism(const FilteredComplex& X, std::size_t j);

struct KernelBasis {
    std::vector<SparseColumn> columns;  // coordinates in the domain basis
    std::vector<Grade> grades;          // join of the grades of the support
    std::vector<std::size_t> leading;   // leading domain index in colex order, pairwise distinct
};

// Basis of ker γ that is a Gröbner basis for the colex order on the domain basis.
KernelBasis kernel_basis(const FreeMorphism& gamma);

// Same construction with the roles of the coordinates swapped; leading indices are lex-maximal.
KernelBasis kernel_basis_lex(const FreeMorphism& gamma);

struct GradeInjections {
    std::vector<std::size_t> jx, jy;  // kernel element -> domain index with equal x (resp. y) grade
};

GradeInjections grade_injections(const FreeMorphism& gamma, const KernelBasis& C);

Presentation homology_presentation(const FilteredComplex& X, std::size_t j);

struct Lift {
    FilteredComplex f, g;
};

// One vertex, a 1-cell per row and a 2-cell per column with boundary the shared matrix.
Lift lift_presentations(const Presentation& M, const Presentation& N);

}  // namespace mpm::cellular
