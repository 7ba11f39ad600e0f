#include "mpm/pnorm.hpp"

#include "mpm/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mpm {

PExponent::PExponent(Rational p) : p_(std::move(p)) {
    if (p_ < 1) throw DataError("p must be at least 1, got " + format_rational(p_));
}

PExponent PExponent::infinity() {
    PExponent e;
    e.infinite_ = true;
    return e;
}

PExponent PExponent::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
    try {
        return PExponent(parse_rational(text));
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("bad exponent: ") + e.what());
    }
}

std::optional<unsigned long> PExponent::integer() const {
    if (infinite_ || p_.get_den() != 1 || !p_.get_num().fits_ulong_p()) return std::nullopt;
    return p_.get_num().get_ui();
}

double PExponent::as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : to_double(p_);
}

std::string PExponent::str() const { return infinite_ ? "inf" : format_rational(p_); }

double root_to_double(const Rational& x, unsigned long k) {
    if (k == 1) return to_double(x);
    mpfr_t t;
    mpfr_init2(t, 256);
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    mpfr_rootn_ui(t, t, k, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

NormAccumulator::NormAccumulator(PExponent p) : p_(std::move(p)), k_(p_.integer()) {}

void NormAccumulator::add(const Rational& magnitude) {
    if (p_.is_infinite()) {
        if (magnitude > exact_) exact_ = magnitude;
    } else if (k_) {
        exact_ += pow(magnitude, *k_);
    } else {
        approx_ += std::pow(to_double(magnitude), p_.as_double());
    }
}

void NormAccumulator::add_power(const Rational& term) {
    if (p_.is_infinite()) {
        if (term > exact_) exact_ = term;
    } else if (k_) {
        exact_ += term;
    } else {
        approx_ += to_double(term);
    }
}

NormValue NormAccumulator::result() const {
    NormValue r;
    if (infinite_) {
        r.infinite = true;
        r.value = std::numeric_limits<double>::infinity();
        return r;
    }
    if (p_.is_infinite()) {
        r.exact = exact_;
        r.value = to_double(exact_);
    } else if (k_) {
        r.exact = exact_;
        r.value = root_to_double(exact_, *k_);
    } else {
        r.value = std::pow(approx_, 1.0 / p_.as_double());
    }
    return r;
}

std::optional<Rational> exact_power(const Rational& x, const PExponent& p) {
    if (p.is_infinite()) return abs(x);
    if (auto k = p.integer()) return pow(abs(x), *k);
    return std::nullopt;
}

double power_of(double x, const PExponent& p) {
    x = std::fabs(x);
    if (p.is_infinite()) return x;
    if (auto k = p.integer()) {
        if (*k == 1) return x;
        if (*k == 2) return x * x;
    }
    return std::pow(x, p.as_double());
}

double root_of(double s, const PExponent& p) {
    if (p.is_infinite()) return s;
    if (auto k = p.integer()) {
        if (*k == 1) return s;
        if (*k == 2) return std::sqrt(s);
    }
    return std::pow(s, 1.0 / p.as_double());
}

int compare(const NormValue& a, const NormValue& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite ? 0 : (a.infinite ? 1 : -1);
    if (a.exact && b.exact) return *a.exact < *b.exact ? -1 : (*b.exact < *a.exact ? 1 : 0);
    return a.value < b.value ? -1 : (b.value < a.value ? 1 : 0);
}

}  // namespace mpm
