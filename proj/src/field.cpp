#include "mpm/field.hpp"

#include "mpm/errors.hpp"

#include <string>

namespace mpm {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw DataError("field characteristic " + std::to_string(q) + " is not prime");
}

Coeff PrimeField::reduce(long long v) const {
    long long r = v % static_cast<long long>(q_);
    return static_cast<Coeff>(r < 0 ? r + q_ : r);
}

Coeff PrimeField::inv(Coeff a) const {
    if (a == 0) throw DataError("division by zero in F_" + std::to_string(q_));
    // Fermat: a^(q-2)
    std::uint64_t result = 1, base = a, e = q_ - 2;
    while (e) {
        if (e & 1) result = result * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<Coeff>(result);
}

}  // namespace mpm
