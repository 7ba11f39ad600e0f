#pragma once

#include "mpm/matchdist.hpp"
#include "mpm/pnorm.hpp"
#include "mpm/presentation.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mpm::presdist {

// ||(||a_i - b_i||_p)_i||_p for equally long grade vectors.
NormValue grades_distance(std::span<const Grade> a, std::span<const Grade> b, const PExponent& p);

// Two presentations with one underlying matrix.
struct PairedPresentations {
    Presentation first, second;
};

// d^p of the pair; throws DataError when the matrices differ.
NormValue label_distance(const Presentation& P, const Presentation& Q, const PExponent& p);
NormValue label_distance(const PairedPresentations& pp, const PExponent& p);

// Re-presents the presentation with fewer rows on the other one's matrix: its rows and columns are
// mapped into the other matrix, leftover rows get redundant relations (a column pivoting on the new row
// at the row's own label) and leftover zero columns copy their label. Among the embeddings found by a
// bounded search the one with the least label distance is kept. nullopt when none exists.
std::optional<PairedPresentations> pad_and_pair(const Presentation& P, const Presentation& Q, const PExponent& p);

struct ChainBound {
    double value = 0;
    std::optional<Rational> exact;  // p = 1 or inf
};

// Sum of label distances along a chain; consecutive links must present the same module (checked on a grid
// of grades). Throws DataError otherwise.
ChainBound chain_upper_bound(std::span<const PairedPresentations> chain, const PExponent& p);

// Compares Hilbert functions on the grid spanned by all label coordinates.
bool same_hilbert_function(const Presentation& P, const Presentation& Q);

struct BoundsReport {
    matchdist::DistanceReport lower;
    std::optional<NormValue> upper;  // unset when no pairing was found
    std::optional<PairedPresentations> pairing;
    std::vector<std::string> notes;
};

BoundsReport bounds(const Presentation& M, const Presentation& N, const PExponent& p,
                    const matchdist::Options& options = {});

}  // namespace mpm::presdist
