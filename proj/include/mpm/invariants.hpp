#pragma once

#include "mpm/grade.hpp"
#include "mpm/presentation.hpp"

#include <cstddef>

namespace mpm {

// dim coker(P) at g.
std::size_t hilbert_dim(const Presentation& p, const Grade& g);

// Rank of coker(P)_s -> coker(P)_t; requires s <= t.
std::size_t rank_invariant(const Presentation& p, const Grade& s, const Grade& t);

}  // namespace mpm
