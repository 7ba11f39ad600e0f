#pragma once

#include "mpm/rational.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace mpm {

// A point of Q^n, n in {1, 2}, compared in the product order.
class Grade {
public:
    Grade() = default;
    explicit Grade(Rational x);
    Grade(Rational x, Rational y);
    Grade(std::initializer_list<Rational> coords);

    std::size_t size() const { return n_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }

    bool operator==(const Grade&) const = default;
    // Product order; not a total order, so no operator<.
    bool operator<=(const Grade& o) const;

    std::string str() const;

private:
    std::array<Rational, 2> c_{};
    std::size_t n_ = 0;
};

Grade join(const Grade& a, const Grade& b);
Grade meet(const Grade& a, const Grade& b);

// Strict total orders used for Groebner leads: colex compares y first, lex x first.
bool colex_less(const Grade& a, const Grade& b);
bool lex_less(const Grade& a, const Grade& b);

}  // namespace mpm
