#include <doctest.h>

#include "generators.hpp"

#include "mpm/errors.hpp"
#include "mpm/io.hpp"
#include "mpm/wasserstein.hpp"

#include <cmath>

using namespace mpm;
namespace W = mpm::wasserstein;

namespace {

PExponent P(const char* s) { return PExponent::parse(s); }
Barcode bc(const char* s) { return parse_barcode(s); }

}  // namespace

TEST_CASE("matching cost of small fixed matchings") {
    CHECK(*W::matching_cost(bc("0 2"), {}, {}, P("1")).exact == 2);
    auto c = W::matching_cost(bc("0 inf"), bc("1 inf"), {{{0, 0}}}, P("inf"));
    CHECK(*c.exact == 1);
    CHECK(*W::matching_cost(bc("0 2"), bc("1 3"), {{{0, 0}}}, P("1")).exact == 2);
    CHECK(W::matching_cost(bc("0 inf"), {}, {}, P("1")).infinite);
    CHECK(W::matching_cost(bc("0 inf"), bc("0 1"), {{{0, 0}}}, P("2")).infinite);
    CHECK_THROWS_AS(W::matching_cost(bc("0 1"), bc("0 1"), {{{0, 1}}}, P("1")), DataError);
    CHECK_THROWS_AS(W::matching_cost(bc("0 1\n0 2"), bc("0 1"), {{{0, 0}, {1, 0}}}, P("1")), DataError);
}

TEST_CASE("optimal distances on hand examples") {
    CHECK(*W::distance(bc("0 2"), bc("1 3"), P("1")).exact == 2);
    CHECK(*W::distance(bc("0 2"), bc("1 3"), P("inf")).exact == 1);
    CHECK(*W::distance(bc("0 1\n0 3"), bc("0 3"), P("inf")).exact == Rational(1, 2));
    CHECK(*W::brute_force(bc("0 1\n0 3"), bc("0 3"), P("inf")).exact == Rational(1, 2));
    CHECK(*W::brute_force({}, {}, P("3")).exact == 0);
    CHECK(W::brute_force(bc("0 inf"), {}, P("1")).infinite);
    CHECK(W::distance(bc("0 inf\n1 inf"), bc("0 inf"), P("2")).infinite);
    auto r = W::optimal(bc("0 2"), bc("1 3"), P("2"));
    CHECK(*r.distance.exact == 2);
    CHECK(r.distance.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    REQUIRE(r.matching.pairs.size() == 1);
}

TEST_CASE("identical barcodes are at distance zero") {
    gen::Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        auto b = gen::barcode(rng, 8);
        for (const char* p : {"1", "2", "inf", "1.5"}) CHECK(W::distance(b, b, P(p)).value == 0);
    }
}

TEST_CASE("optimal matching agrees with exhaustive search") {
    gen::Rng rng(17);
    for (int t = 0; t < 400; ++t) {
        auto b = gen::barcode(rng, 6), c = gen::barcode(rng, 6);
        for (const char* ps : {"1", "2", "3", "inf"}) {
            auto p = P(ps);
            auto fast = W::optimal(b, c, p);
            auto slow = W::brute_force(b, c, p);
            REQUIRE(fast.distance.infinite == slow.infinite);
            if (slow.infinite) continue;
            REQUIRE(*fast.distance.exact == *slow.exact);
            // The reported matching realises the optimum.
            REQUIRE(*W::matching_cost(b, c, fast.matching, p).exact == *slow.exact);
        }
        auto p = P("1.5");
        auto fast = W::distance(b, c, p), slow = W::brute_force(b, c, p);
        if (!slow.infinite) REQUIRE(fast.value == doctest::Approx(slow.value).epsilon(1e-12));
    }
}

TEST_CASE("metric properties on random barcodes") {
    gen::Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        auto a = gen::barcode(rng, 7, 0, 8, 2, 0), b = gen::barcode(rng, 7, 0, 8, 2, 0),
             c = gen::barcode(rng, 7, 0, 8, 2, 0);
        for (const char* ps : {"1", "2", "inf"}) {
            auto p = P(ps);
            auto ab = W::distance(a, b, p), ba = W::distance(b, a, p);
            REQUIRE(*ab.exact == *ba.exact);
            double ac = W::distance(a, c, p).value, bc_ = W::distance(b, c, p).value;
            REQUIRE(ac <= ab.value + bc_ + 1e-9);
        }
        // Monotone in p and convergent to the bottleneck value.
        double d1 = W::distance(a, b, P("1")).value, d2 = W::distance(a, b, P("2")).value,
               d3 = W::distance(a, b, P("3")).value, dinf = W::distance(a, b, P("inf")).value;
        REQUIRE(d1 >= d2 - 1e-12);
        REQUIRE(d2 >= d3 - 1e-12);
        REQUIRE(d3 >= dinf - 1e-12);
        double d64 = W::distance(a, b, P("64")).value;
        double bars = static_cast<double>(a.size() + b.size());
        REQUIRE(d64 >= dinf - 1e-12);
        REQUIRE(d64 <= std::pow(2 * std::max(bars, 1.0), 1.0 / 64) * dinf + 1e-12);
    }
}

TEST_CASE("floating point path agrees with the exact path") {
    gen::Rng rng(29);
    for (int t = 0; t < 200; ++t) {
        auto a = gen::barcode(rng, 8), b = gen::barcode(rng, 8);
        std::vector<W::FastBar> fa, fb;
        for (auto& x : a) fa.push_back({to_double(x.birth), x.essential ? 0 : to_double(x.death), x.essential});
        for (auto& x : b) fb.push_back({to_double(x.birth), x.essential ? 0 : to_double(x.death), x.essential});
        for (const char* ps : {"1", "2", "inf"}) {
            auto exact = W::distance(a, b, P(ps));
            double fast = W::distance_fast(fa, fb, P(ps));
            if (exact.infinite)
                REQUIRE(std::isinf(fast));
            else
                REQUIRE(fast == doctest::Approx(exact.value).epsilon(1e-12));
        }
    }
}
