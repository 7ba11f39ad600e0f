#include "mpm/lines.hpp"

#include "mpm/errors.hpp"
#include "mpm/onepar.hpp"

#include <algorithm>

namespace mpm::lines {

namespace {

void require_two(const Grade& g, const char* what) {
    if (g.size() != 2) throw DataError(std::string(what) + " must have two coordinates");
}

}  // namespace

AdmissibleLine::AdmissibleLine(Grade v, Grade w) : v_(std::move(v)), w_(std::move(w)) {
    require_two(v_, "line direction");
    require_two(w_, "line base point");
    if (v_[0] <= 0 || v_[1] <= 0) throw DataError("line direction " + v_.str() + " is not positive");
    if (std::min(v_[0], v_[1]) != 1) throw DataError("line direction " + v_.str() + " must have smallest coordinate 1");
}

Grade AdmissibleLine::at(const Rational& t) const { return Grade(t * v_[0] + w_[0], t * v_[1] + w_[1]); }

bool AdmissibleLine::is_canonical() const { return std::min(w_[0], w_[1]) == 0; }

AdmissibleLine canonicalize_line(const Grade& v_raw, const Grade& w_raw) {
    require_two(v_raw, "line direction");
    require_two(w_raw, "line base point");
    if (v_raw[0] <= 0 || v_raw[1] <= 0) throw DataError("line direction " + v_raw.str() + " is not positive");
    Rational m = std::min(v_raw[0], v_raw[1]);
    Grade v(v_raw[0] / m, v_raw[1] / m);
    Rational t = std::min(w_raw[0] / v[0], w_raw[1] / v[1]);
    return AdmissibleLine(v, Grade(w_raw[0] - t * v[0], w_raw[1] - t * v[1]));
}

Rational canonical_shift(const AdmissibleLine& l) {
    return std::min(l.w()[0] / l.v()[0], l.w()[1] / l.v()[1]);
}

Rational push(const AdmissibleLine& l, const Grade& a) {
    require_two(a, "pushed grade");
    return std::max((a[0] - l.w()[0]) / l.v()[0], (a[1] - l.w()[1]) / l.v()[1]);
}

Rational push(const LimitLine& l, const Grade& a) {
    require_two(a, "pushed grade");
    return std::max(Rational(a[l.axis] - l.offset), Rational(0));
}

Rational push(const AnyLine& l, const Grade& a) {
    return std::visit([&](const auto& x) { return push(x, a); }, l);
}

Presentation restrict_presentation(const Presentation& p, const AnyLine& l) {
    if (p.n_params() != 2) throw DataError("restriction to a line needs a 2-parameter presentation");
    std::vector<Grade> rows, cols;
    for (const auto& g : p.row_labels()) rows.emplace_back(push(l, g));
    for (const auto& g : p.col_labels()) cols.emplace_back(push(l, g));
    return Presentation(p.field(), 1, std::move(rows), std::move(cols), p.columns());
}

Barcode barcode_along_line(const Presentation& p, const AnyLine& l) {
    return onepar::barcode_of(restrict_presentation(p, l));
}

AdmissibleLine parse_line(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw DataError("line literal must look like 'v1,v2;w1,w2'");
    auto pair = [&](std::string_view s) {
        auto comma = s.find(',');
        if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos)
            throw DataError("line literal must look like 'v1,v2;w1,w2'");
        auto trim = [](std::string_view x) {
            while (!x.empty() && x.front() == ' ') x.remove_prefix(1);
            while (!x.empty() && x.back() == ' ') x.remove_suffix(1);
            return x;
        };
        try {
            return Grade(parse_rational(trim(s.substr(0, comma))), parse_rational(trim(s.substr(comma + 1))));
        } catch (const std::invalid_argument& e) {
            throw DataError(std::string("bad line literal: ") + e.what());
        }
    };
    return AdmissibleLine(pair(text.substr(0, semi)), pair(text.substr(semi + 1)));
}

std::string format_line(const AdmissibleLine& l) {
    return format_rational(l.v()[0]) + "," + format_rational(l.v()[1]) + ";" + format_rational(l.w()[0]) + "," +
           format_rational(l.w()[1]);
}

}  // namespace mpm::lines
