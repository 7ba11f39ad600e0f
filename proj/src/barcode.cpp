#include "mpm/barcode.hpp"

#include "mpm/errors.hpp"

#include <algorithm>

namespace mpm {

void validate(const Barcode& b) {
    for (const auto& bar : b)
        if (!bar.essential && !(bar.birth < bar.death))
            throw DataError("bar " + bar_str(bar) + " is empty");
}

Barcode canonical(Barcode b) {
    std::sort(b.begin(), b.end(), [](const Bar& x, const Bar& y) {
        if (x.birth != y.birth) return x.birth < y.birth;
        if (x.essential != y.essential) return y.essential;
        return !x.essential && x.death < y.death;
    });
    return b;
}

bool same_multiset(const Barcode& a, const Barcode& b) {
    return a.size() == b.size() && canonical(a) == canonical(b);
}

std::string bar_str(const Bar& b) {
    return "[" + format_rational(b.birth) + ", " + (b.essential ? std::string("inf") : format_rational(b.death)) + ")";
}

}  // namespace mpm
