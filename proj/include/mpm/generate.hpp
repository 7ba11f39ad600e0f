#pragma once

// Random fixtures for experiments and tests; deterministic for a given seed.

#include "mpm/cellular.hpp"
#include "mpm/presentation.hpp"

#include <cstdint>
#include <random>

namespace mpm::generate {

using Rng = std::mt19937_64;

struct ComplexShape {
    std::size_t vertices = 5;
    std::size_t edges = 7;
    std::size_t triangles = 3;
    std::size_t n_params = 2;
    std::uint32_t q = 2;
    int spread = 6;  // vertex grades in [0, spread]^n; each cell adds up to spread/2 to its faces' join
};

// Simplicial complex with a monotone integer grade function.
cellular::FilteredComplex random_complex(Rng& rng, const ComplexShape& shape);

// Each grade moved by an integer in [-shift, shift] per coordinate, then raised to the join of its faces.
cellular::FilteredComplex perturb(Rng& rng, const cellular::FilteredComplex& X, int shift);

// Integer labels in [0, spread]^n; each admissible entry nonzero with the given density.
Presentation random_presentation(Rng& rng, std::size_t n_params, std::size_t rows, std::size_t cols,
                                 std::uint32_t q = 2, int spread = 6, double density = 0.5);

}  // namespace mpm::generate
