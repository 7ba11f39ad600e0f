#pragma once

#include "mpm/barcode.hpp"
#include "mpm/pnorm.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mpm::wasserstein {

// Pairs of (index into B, index into C); everything else is unmatched.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// cost(sigma, p); throws DataError on invalid indices.
NormValue matching_cost(const Barcode& B, const Barcode& C, const Matching& m, const PExponent& p);

struct Result {
    NormValue distance;
    Matching matching;  // empty when the distance is infinite
};

// Optimal matching. Exact p-th powers for integer p and p = inf, floating point otherwise.
Result optimal(const Barcode& B, const Barcode& C, const PExponent& p);
NormValue distance(const Barcode& B, const Barcode& C, const PExponent& p);

// Exhaustive search over all matchings; requires |B| + |C| <= 12.
NormValue brute_force(const Barcode& B, const Barcode& C, const PExponent& p);

using FastBar = BasicBar<double>;
// Floating point distance for inner loops; +inf when essential counts differ.
double distance_fast(std::span<const FastBar> B, std::span<const FastBar> C, const PExponent& p);

}  // namespace mpm::wasserstein
