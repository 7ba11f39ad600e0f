#include "mpm/rational.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mpm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        bool neg = false;
        if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
            neg = num[0] == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class n{std::string(num), 10}, d{std::string(den), 10};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(neg ? mpz_class(-n) : n, d);
        r.canonicalize();
        return r;
    }

    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = s.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
            eneg = ex[0] == '-';
            ex.remove_prefix(1);
        }
        if (!all_digits(ex) || ex.size() > 6) bad(text);
        exponent = std::stol(std::string(ex));
        if (eneg) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view ip = s, fp;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        ip = s.substr(0, dot);
        fp = s.substr(dot + 1);
        if (!fp.empty() && !all_digits(fp)) bad(text);
    }
    if (!ip.empty() && !all_digits(ip)) bad(text);
    if (ip.empty() && fp.empty()) bad(text);

    mpz_class digits{std::string(ip) + std::string(fp), 10};
    exponent -= static_cast<long>(fp.size());
    Rational r;
    if (exponent >= 0)
        r = Rational(digits * pow10(static_cast<unsigned long>(exponent)));
    else
        r = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

std::string format_rational(const Rational& x) {
    mpz_class den = x.get_den();
    unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (den != 1) return x.get_str();
    if (twos == 0 && fives == 0) return x.get_num().get_str();

    unsigned long k = std::max(twos, fives);
    mpz_class scaled = x.get_num() * pow10(k) / x.get_den();
    bool neg = scaled < 0;
    mpz_abs(scaled.get_mpz_t(), scaled.get_mpz_t());
    std::string digits = scaled.get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    return neg ? "-" + digits : digits;
}

std::string format_double(double x, int significant) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    if (x == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, x);
    return buf;
}

double to_double(const Rational& x) {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational pow(const Rational& x, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.get_den().get_mpz_t(), e);
    return Rational(n, d);
}

}  // namespace mpm
