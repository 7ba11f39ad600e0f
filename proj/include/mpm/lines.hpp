#pragma once

#include "mpm/barcode.hpp"
#include "mpm/grade.hpp"
#include "mpm/presentation.hpp"

#include <string_view>
#include <variant>

namespace mpm::lines {

// l(t) = t v + w with v > 0 and min(v) = 1.
class AdmissibleLine {
public:
    // Throws DataError unless v > 0 with smallest coordinate 1.
    AdmissibleLine(Grade v, Grade w);

    const Grade& v() const { return v_; }
    const Grade& w() const { return w_; }
    Grade at(const Rational& t) const;
    bool is_canonical() const;  // min(w) == 0

    bool operator==(const AdmissibleLine&) const = default;

private:
    Grade v_, w_;
};

// Axis-parallel limit of admissible lines: only coordinate `axis` constrains the push.
struct LimitLine {
    std::size_t axis;
    Rational offset;
    bool operator==(const LimitLine&) const = default;
};

using AnyLine = std::variant<AdmissibleLine, LimitLine>;

AdmissibleLine canonicalize_line(const Grade& v_raw, const Grade& w_raw);
// t0 with canonical.at(t) = original.at(t - t0); pushes onto the canonical line are larger by t0.
Rational canonical_shift(const AdmissibleLine& l);

// Minimal t with l(t) >= a.
Rational push(const AdmissibleLine& l, const Grade& a);
// max(a[axis] - offset, 0).
Rational push(const LimitLine& l, const Grade& a);
Rational push(const AnyLine& l, const Grade& a);

Presentation restrict_presentation(const Presentation& p, const AnyLine& l);
Barcode barcode_along_line(const Presentation& p, const AnyLine& l);

// "v1,v2;w1,w2" with exact decimals or fractions.
AdmissibleLine parse_line(std::string_view text);
std::string format_line(const AdmissibleLine& l);

}  // namespace mpm::lines
