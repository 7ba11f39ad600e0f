#pragma once

#include <cstdint>

namespace mpm {

using Coeff = std::uint32_t;

// Arithmetic in F_q, residues stored in [0, q).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q = 2);

    std::uint32_t q() const { return q_; }
    bool contains(long long v) const { return v >= 0 && v < static_cast<long long>(q_); }
    Coeff reduce(long long v) const;

    Coeff add(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + b) % q_); }
    Coeff sub(Coeff a, Coeff b) const { return add(a, neg(b)); }
    Coeff neg(Coeff a) const { return a == 0 ? 0 : q_ - a; }
    Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>(std::uint64_t{a} * b % q_); }
    Coeff inv(Coeff a) const;
    Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint32_t q);

}  // namespace mpm
