#pragma once

#include "mpm/barcode.hpp"
#include "mpm/presentation.hpp"

#include <random>

namespace gen {

using Rng = std::mt19937_64;

// Integer-valued rational in [lo, hi], divided by den.
mpm::Rational rational(Rng& rng, int lo, int hi, int den = 1);

mpm::Grade grade(Rng& rng, std::size_t n, int lo, int hi, int den = 1);

// Random presentation: labels on a grid of spacing 1/den, entries only where the label order allows,
// each allowed entry nonzero with probability density.
mpm::Presentation presentation(Rng& rng, std::size_t n, std::size_t rows, std::size_t cols, std::uint32_t q = 2,
                               int lo = 0, int hi = 6, int den = 1, double density = 0.5);

// Same matrix as p with fresh labels that keep every nonzero entry admissible.
mpm::Presentation relabeled(Rng& rng, const mpm::Presentation& p, int lo, int hi, int den = 1);

mpm::Barcode barcode(Rng& rng, std::size_t max_bars, int lo = 0, int hi = 8, int den = 2,
                     double essential_prob = 0.15);

}  // namespace gen
