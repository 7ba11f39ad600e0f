#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "mpm/errors.hpp"
#include "mpm/invariants.hpp"
#include "mpm/io.hpp"
#include "mpm/pnorm.hpp"

using namespace mpm;

TEST_CASE("rational literals parse exactly") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-2.50") == Rational(-5, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("010") == Rational(10));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("007/010") == Rational(7, 10));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1.2.3"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rational formatting round-trips") {
    for (const char* s : {"0", "1", "-1", "0.5", "-0.125", "1/3", "-7/12", "12.04", "0.0001"}) {
        Rational x = parse_rational(s);
        CHECK(parse_rational(format_rational(x)) == x);
    }
    CHECK(format_rational(Rational(1, 4)) == "0.25");
    CHECK(format_rational(Rational(-3, 20)) == "-0.15");
    CHECK(format_rational(Rational(1, 3)) == "1/3");
    CHECK(format_double(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("prime field arithmetic") {
    PrimeField f5(5);
    CHECK(f5.mul(3, 2) == 1);
    CHECK(f5.inv(3) == 2);
    CHECK(f5.neg(1) == 4);
    CHECK(f5.reduce(-1) == 4);
    CHECK_THROWS_AS(PrimeField(4), DataError);
    for (std::uint32_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
}

TEST_CASE("grades use the product order") {
    Grade a{1, 2}, b{2, 2}, c{0, 3};
    CHECK(a <= b);
    CHECK_FALSE(a <= c);
    CHECK_FALSE(c <= a);
    CHECK(join(a, c) == Grade{1, 3});
    CHECK(meet(a, c) == Grade{0, 2});
    CHECK(colex_less(Grade{5, 1}, Grade{0, 2}));
    CHECK(lex_less(Grade{0, 2}, Grade{5, 1}));
}

TEST_CASE("parse the H0 presentation of the stability example") {
    Presentation p = fixtures::load(fixtures::stability_h0_f);
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 3);
    CHECK(p.n_params() == 2);
    CHECK(p.col_labels()[1] == Grade{3, 3});
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(p.entry(0, j) == 0);
        CHECK(p.entry(1, j) == 1);
    }
}

TEST_CASE("free module with no relations") {
    Presentation p = parse_presentation("fpm 1\nfield 2\nparams 2\nrows 1\n0 0\ncols 0\n");
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 0);
    CHECK(hilbert_dim(p, Grade{-1, -1}) == 0);
    CHECK(hilbert_dim(p, Grade{0, 0}) == 1);
}

TEST_CASE("parse errors report problems with line numbers") {
    SUBCASE("label order") {
        const char* doc = "fpm 1\nparams 2\nrows 1\n5 0\ncols 1\n1 4 : 0 1\n";
        try {
            parse_presentation(doc);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 6);
            CHECK(std::string(e.what()).find("label order violated") != std::string::npos);
        }
    }
    SUBCASE("coefficient outside the field") {
        CHECK_THROWS_AS(parse_presentation("fpm 1\nfield 3\nparams 1\nrows 1\n0\ncols 1\n1 : 0 3\n"), ParseError);
    }
    SUBCASE("syntax") {
        CHECK_THROWS_AS(parse_presentation("fpm 2\nparams 1\nrows 0\ncols 0\n"), ParseError);
        CHECK_THROWS_AS(parse_presentation("fpm 1\nparams 1\nrows 1\n\ncols 0\n"), ParseError);
        CHECK_THROWS_AS(parse_presentation("fpm 1\nparams 1\nrows 1\n0\ncols 1\n1 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_presentation("fpm 1\nfield 4\nparams 1\nrows 0\ncols 0\n"), ParseError);
    }
}

TEST_CASE("decimal and fractional labels, comments, compact colon") {
    Presentation p = parse_presentation("# header\nfpm 1\nparams 2\nrows 1\n0.5 1/3 # gen\ncols 1\n1.25 2: 0 1\n");
    CHECK(p.row_labels()[0] == Grade(Rational(1, 2), Rational(1, 3)));
    CHECK(p.col_labels()[0] == Grade(Rational(5, 4), Rational(2)));
}

TEST_CASE("hilbert function and rank invariant of the stability example") {
    Presentation p = fixtures::load(fixtures::stability_h0_f);
    CHECK(hilbert_dim(p, Grade{2, 2}) == 2);
    CHECK(hilbert_dim(p, Grade{5, 5}) == 1);
    CHECK(rank_invariant(p, Grade{0, 0}, Grade{2, 2}) == 2);
    CHECK(rank_invariant(p, Grade{0, 0}, Grade{5, 5}) == 1);
    CHECK(oracle::rank_invariant(p, Grade{0, 0}, Grade{5, 5}) == 1);
    CHECK(rank_invariant(p, Grade{-1, -1}, Grade{-1, -1}) == 0);
    CHECK_THROWS_AS(rank_invariant(p, Grade{1, 1}, Grade{0, 5}), DataError);
}

TEST_CASE("hilbert_dim and rank_invariant agree with the dense oracle") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t q = trial % 2 ? 2 : 5;
        std::size_t n = trial % 3 ? 2 : 1;
        auto p = gen::presentation(rng, n, 1 + rng() % 12, rng() % 13, q, 0, 5);
        for (int k = 0; k < 10; ++k) {
            Grade s = gen::grade(rng, n, -1, 6), t = s;
            for (std::size_t i = 0; i < n; ++i) t[i] += gen::rational(rng, 0, 3);
            REQUIRE(hilbert_dim(p, s) == oracle::hilbert_dim(p, s));
            REQUIRE(rank_invariant(p, s, t) == oracle::rank_invariant(p, s, t));
            REQUIRE(rank_invariant(p, s, t) <= std::min(hilbert_dim(p, s), hilbert_dim(p, t)));
        }
    }
}

TEST_CASE("presentation text round-trips") {
    gen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = gen::presentation(rng, 1 + trial % 2, rng() % 8, rng() % 8, trial % 2 ? 3 : 2, -3, 4, 4);
        auto text = serialize_presentation(p);
        auto back = parse_presentation(text);
        REQUIRE(back == p);
        REQUIRE(serialize_presentation(back) == text);
    }
}

TEST_CASE("barcode text round-trips") {
    Barcode b = parse_barcode("0 2\n1/3 inf\n# comment\n-0.5 4\n");
    REQUIRE(b.size() == 3);
    CHECK(b[1].essential);
    CHECK(same_multiset(parse_barcode(serialize_barcode(b)), b));
    CHECK_THROWS_AS(parse_barcode("2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_barcode("2\n"), ParseError);
}

TEST_CASE("p exponents and norm accumulation") {
    CHECK(PExponent::parse("inf").is_infinite());
    CHECK(*PExponent::parse("2").integer() == 2);
    CHECK_FALSE(PExponent::parse("1.5").integer());
    CHECK_THROWS_AS(PExponent::parse("0.5"), DataError);
    NormAccumulator acc(PExponent(Rational(2)));
    acc.add(Rational(3));
    acc.add(Rational(4));
    auto r = acc.result();
    CHECK(*r.exact == 25);
    CHECK(r.value == 5.0);
    CHECK(root_to_double(Rational(2), 2) == std::sqrt(2.0));
}
