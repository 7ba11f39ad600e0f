#pragma once

#include "mpm/rational.hpp"

#include <string>
#include <vector>

namespace mpm {

// [birth, death) with death = +inf when essential (death is then ignored).
template <class T>
struct BasicBar {
    T birth{};
    T death{};
    bool essential = false;

    bool operator==(const BasicBar& o) const {
        return birth == o.birth && essential == o.essential && (essential || death == o.death);
    }
};

using Bar = BasicBar<Rational>;
using Barcode = std::vector<Bar>;

inline Bar finite_bar(Rational b, Rational d) { return Bar{std::move(b), std::move(d), false}; }
inline Bar essential_bar(Rational b) { return Bar{std::move(b), Rational(0), true}; }

// Throws DataError unless birth < death for every bar.
void validate(const Barcode& b);

// Sorted copy, so that equal multisets compare equal.
Barcode canonical(Barcode b);
bool same_multiset(const Barcode& a, const Barcode& b);

std::string bar_str(const Bar& b);

}  // namespace mpm
