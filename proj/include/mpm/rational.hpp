#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mpm {

using Rational = mpq_class;

// Accepts integers, decimals with optional exponent ("-1.25e-3") and "p/q".
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Decimal when the denominator has only factors 2 and 5, "p/q" otherwise.
// parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& x);

// 12 significant digits, the CLI's default numeric style.
std::string format_double(double x, int significant = 12);

double to_double(const Rational& x);

Rational abs(const Rational& x);

// x^e for a non-negative integer exponent.
Rational pow(const Rational& x, unsigned long e);

}  // namespace mpm
