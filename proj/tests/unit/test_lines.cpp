#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

#include "mpm/errors.hpp"
#include "mpm/invariants.hpp"
#include "mpm/lines.hpp"
#include "mpm/onepar.hpp"
#include "mpm/wasserstein.hpp"

using namespace mpm;
using namespace mpm::lines;

namespace {

Barcode bc(const char* s) { return parse_barcode(s); }
AdmissibleLine line(int v1, int v2, int w1, int w2) { return AdmissibleLine(Grade{v1, v2}, Grade{w1, w2}); }

AdmissibleLine random_line(gen::Rng& rng) {
    Rational slope = gen::rational(rng, 1, 4, 3);
    Grade v = rng() % 2 ? Grade(Rational(1), slope) : Grade(slope, Rational(1));
    return AdmissibleLine(v, gen::grade(rng, 2, -3, 3, 2));
}

}  // namespace

TEST_CASE("canonical lines") {
    auto a = canonicalize_line(Grade{2, 4}, Grade{0, 0});
    CHECK(a.v() == Grade{1, 2});
    CHECK(a.w() == Grade{0, 0});
    auto b = canonicalize_line(Grade{1, 1}, Grade{3, 1});
    CHECK(b.v() == Grade{1, 1});
    CHECK(b.w() == Grade{2, 0});
    CHECK(b.is_canonical());
    CHECK_THROWS_AS(canonicalize_line(Grade{0, 1}, Grade{0, 0}), DataError);
    CHECK_THROWS_AS(canonicalize_line(Grade{-1, 1}, Grade{0, 0}), DataError);
    CHECK_THROWS_AS(AdmissibleLine(Grade{2, 3}, Grade{0, 0}), DataError);
    CHECK(canonical_shift(line(1, 1, 3, 1)) == 1);
}

TEST_CASE("push onto a line") {
    CHECK(push(line(1, 2, 0, 0), Grade{3, 1}) == 3);
    CHECK(push(line(1, 1, 2, 0), Grade{3, 4}) == 4);
    CHECK(push(line(1, 1, 0, 0), Grade{Rational(7, 3), Rational(7, 3)}) == Rational(7, 3));
    CHECK(push(LimitLine{0, 2}, Grade{5, 100}) == 3);
    CHECK(push(LimitLine{1, 0}, Grade{5, -1}) == 0);
}

TEST_CASE("restriction of the stability example to the diagonal") {
    auto p = fixtures::load(fixtures::stability_h0_f);
    auto r = restrict_presentation(p, line(1, 1, 0, 0));
    CHECK(r.n_params() == 1);
    CHECK(r.row_labels() == std::vector<Grade>{Grade(Rational(0)), Grade(Rational(0))});
    CHECK(r.col_labels() == std::vector<Grade>{Grade(Rational(4)), Grade(Rational(3)), Grade(Rational(4))});
    CHECK(r.columns() == p.columns());

    auto free = parse_presentation("fpm 1\nparams 2\nrows 2\n1 2\n3 0\ncols 0\n");
    auto rf = restrict_presentation(free, line(1, 1, 0, 0));
    CHECK(rf.row_labels() == std::vector<Grade>{Grade(Rational(2)), Grade(Rational(3))});
    CHECK(rf.cols() == 0);

    // Labels lying on the line restrict to their own parameters.
    auto on = parse_presentation("fpm 1\nparams 2\nrows 1\n1 3\ncols 1\n2 5 : 0 1\n");
    auto ro = restrict_presentation(on, line(1, 2, 0, 1));
    CHECK(ro.row_labels()[0][0] == 1);
    CHECK(ro.col_labels()[0][0] == 2);
}

TEST_CASE("barcodes along lines for the stability example") {
    auto diag = line(1, 1, 0, 0);
    CHECK(same_multiset(barcode_along_line(fixtures::load(fixtures::stability_h0_f), diag), bc("0 inf\n0 3")));
    CHECK(same_multiset(barcode_along_line(fixtures::load(fixtures::stability_h0_g), diag), bc("0 inf\n0 2")));
    CHECK(same_multiset(barcode_along_line(fixtures::load(fixtures::stability_h1_f), line(1, 1, 2, 0)),
                        bc("3 inf\n4 inf")));
}

TEST_CASE("push is 1-Lipschitz for the sup norm and monotone") {
    gen::Rng rng(71);
    for (int t = 0; t < 5000; ++t) {
        auto l = random_line(rng);
        Grade a = gen::grade(rng, 2, -5, 5, 3), b = gen::grade(rng, 2, -5, 5, 3);
        Rational sup = std::max(abs(a[0] - b[0]), abs(a[1] - b[1]));
        REQUIRE(abs(push(l, a) - push(l, b)) <= sup);
        Grade c = join(a, b);
        REQUIRE(push(l, a) <= push(l, c));
        // l(push(a)) >= a, and nothing smaller works.
        REQUIRE(a <= l.at(push(l, a)));
        REQUIRE_FALSE(a <= l.at(push(l, a) - Rational(1, 1000)));
    }
}

TEST_CASE("restriction commutes with the Hilbert function") {
    gen::Rng rng(73);
    for (int t = 0; t < 100; ++t) {
        auto p = gen::presentation(rng, 2, rng() % 7, rng() % 7, 2, 0, 5);
        auto l = random_line(rng);
        auto r = restrict_presentation(p, l);
        for (int k = 0; k < 10; ++k) {
            Rational s = gen::rational(rng, -4, 8, 3);
            REQUIRE(hilbert_dim(r, Grade(s)) == hilbert_dim(p, l.at(s)));
        }
    }
}

TEST_CASE("canonicalising a line translates barcodes and keeps distances") {
    gen::Rng rng(79);
    for (int t = 0; t < 100; ++t) {
        auto p = gen::presentation(rng, 2, rng() % 6, rng() % 6, 2, 0, 5);
        auto q = gen::presentation(rng, 2, rng() % 6, rng() % 6, 2, 0, 5);
        auto l = random_line(rng);
        auto c = canonicalize_line(l.v(), l.w());
        Rational t0 = canonical_shift(l);
        Barcode shifted;
        for (auto b : barcode_along_line(p, l)) {
            b.birth += t0;
            if (!b.essential) b.death += t0;
            shifted.push_back(b);
        }
        REQUIRE(same_multiset(shifted, barcode_along_line(p, c)));
        for (const char* ps : {"1", "inf"}) {
            auto pe = PExponent::parse(ps);
            auto d1 = wasserstein::distance(barcode_along_line(p, l), barcode_along_line(q, l), pe);
            auto d2 = wasserstein::distance(barcode_along_line(p, c), barcode_along_line(q, c), pe);
            REQUIRE(compare(d1, d2) == 0);
        }
    }
}

TEST_CASE("axis-parallel limit pushes are limits of admissible pushes") {
    gen::Rng rng(83);
    Rational eps(1, 1000000);
    for (int t = 0; t < 500; ++t) {
        Grade a = gen::grade(rng, 2, 0, 6, 2);
        Rational s = gen::rational(rng, 0, 6, 2);
        // Steep line through (s, 0): v = (1, 1/eps).
        AdmissibleLine steep(Grade(Rational(1), 1 / eps), Grade(s, Rational(0)));
        REQUIRE(abs(push(steep, a) - push(LimitLine{0, s}, a)) <= a[1] * eps);
        AdmissibleLine flat(Grade(1 / eps, Rational(1)), Grade(Rational(0), s));
        REQUIRE(abs(push(flat, a) - push(LimitLine{1, s}, a)) <= a[0] * eps);
    }
}

TEST_CASE("line literals") {
    auto l = parse_line("1,2;0.5,-1/3");
    CHECK(l.v() == Grade{1, 2});
    CHECK(l.w() == Grade(Rational(1, 2), Rational(-1, 3)));
    CHECK(format_line(l) == "1,2;0.5,-1/3");
    CHECK_THROWS_AS(parse_line("1,1"), DataError);
    CHECK_THROWS_AS(parse_line("0,1;0,0"), DataError);
    CHECK_THROWS_AS(parse_line("1,x;0,0"), DataError);
}
