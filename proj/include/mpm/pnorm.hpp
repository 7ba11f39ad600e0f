#pragma once

#include "mpm/rational.hpp"

#include <optional>
#include <string>

namespace mpm {

// p in [1, inf].
class PExponent {
public:
    explicit PExponent(Rational p);
    static PExponent infinity();
    // "inf", "infinity" or a rational literal.
    static PExponent parse(const std::string& text);

    bool is_infinite() const { return infinite_; }
    const Rational& value() const { return p_; }
    // Set when p is a finite integer.
    std::optional<unsigned long> integer() const;
    double as_double() const;
    std::string str() const;

private:
    PExponent() = default;
    Rational p_{1};
    bool infinite_ = false;
};

// A p-norm result. For integer p, exact holds value^p; for p = inf it holds the value itself.
// Non-integer p has no exact form.
struct NormValue {
    bool infinite = false;
    std::optional<Rational> exact;
    double value = 0;
};

// Correctly rounded x^(1/k) for x >= 0.
double root_to_double(const Rational& x, unsigned long k);

// Accumulates an lp norm of non-negative magnitudes.
class NormAccumulator {
public:
    explicit NormAccumulator(PExponent p);
    void add(const Rational& magnitude);
    // Adds an already raised term |x|^p (or |x| when p = inf).
    void add_power(const Rational& term);
    void add_infinite() { infinite_ = true; }
    NormValue result() const;

private:
    PExponent p_;
    std::optional<unsigned long> k_;
    bool infinite_ = false;
    Rational exact_{0};
    double approx_ = 0;
};

// |x|^p, or |x| for p = inf, exact when p is an integer.
std::optional<Rational> exact_power(const Rational& x, const PExponent& p);

// Floating p-norm helpers for the fast paths.
double power_of(double x, const PExponent& p);
double root_of(double s, const PExponent& p);

// -1, 0, 1; exact when both sides carry exact values.
int compare(const NormValue& a, const NormValue& b);

}  // namespace mpm
