#include "mpm/grade.hpp"

#include <cassert>
#include <stdexcept>

namespace mpm {

Grade::Grade(Rational x) : c_{std::move(x), Rational(0)}, n_(1) {}

Grade::Grade(Rational x, Rational y) : c_{std::move(x), std::move(y)}, n_(2) {}

Grade::Grade(std::initializer_list<Rational> coords) : n_(coords.size()) {
    if (n_ < 1 || n_ > 2) throw std::invalid_argument("grades have 1 or 2 coordinates");
    std::size_t i = 0;
    for (const auto& c : coords) c_[i++] = c;
}

bool Grade::operator<=(const Grade& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (c_[i] > o.c_[i]) return false;
    return true;
}

std::string Grade::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += format_rational(c_[i]);
    }
    return s + ")";
}

Grade join(const Grade& a, const Grade& b) {
    Grade r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > r[i]) r[i] = b[i];
    return r;
}

Grade meet(const Grade& a, const Grade& b) {
    Grade r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] < r[i]) r[i] = b[i];
    return r;
}

bool colex_less(const Grade& a, const Grade& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool lex_less(const Grade& a, const Grade& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace mpm
