#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

#include "mpm/errors.hpp"
#include "mpm/onepar.hpp"
#include "mpm/presdist.hpp"
#include "mpm/wasserstein.hpp"

using namespace mpm;
using namespace mpm::presdist;

namespace {

PExponent P(const char* s) { return PExponent::parse(s); }

Presentation q_at(int r) {
    return Presentation(PrimeField(3), 2, {Grade{r, r}}, {}, {});
}

// Q^(0,0) on the matrix [1; -1].
Presentation q00_on_triangle_matrix() {
    auto m = fixtures::load(fixtures::triangle_m);
    return relabel(m, {Grade{0, 0}, Grade{0, 0}}, {Grade{0, 0}});
}

}  // namespace

TEST_CASE("label distance examples") {
    auto f = fixtures::load(fixtures::stability_h0_f), g = fixtures::load(fixtures::stability_h0_g);
    CHECK(*label_distance(f, g, P("1")).exact == 2);
    CHECK(*label_distance(f, g, P("2")).exact == 2);  // squared
    CHECK(label_distance(f, g, P("2")).value == doctest::Approx(std::sqrt(2.0)));
    CHECK(*label_distance(f, g, P("inf")).exact == 1);
    auto m = fixtures::load(fixtures::triangle_m);
    auto q = q00_on_triangle_matrix();
    CHECK(same_hilbert_function(q, q_at(0)));
    CHECK(*label_distance(m, q, P("1")).exact == 2);
    CHECK(*label_distance(m, q, P("inf")).exact == 1);
    CHECK(*label_distance(m, m, P("3")).exact == 0);
    CHECK_THROWS_AS(label_distance(m, f, P("1")), DataError);
}

TEST_CASE("pairing examples") {
    auto pr = pad_and_pair(q_at(0), q_at(10), P("1"));
    REQUIRE(pr);
    CHECK(pr->first.rows() == 1);
    CHECK(*label_distance(*pr, P("1")).exact == 20);
    CHECK(label_distance(*pr, P("2")).value == doctest::Approx(std::sqrt(2.0) * 10));

    auto f = fixtures::load(fixtures::stability_h0_f);
    auto same = pad_and_pair(f, f, P("2"));
    REQUIRE(same);
    CHECK(same->first == f);
    CHECK(*label_distance(*same, P("2")).exact == 0);

    auto m = fixtures::load(fixtures::triangle_m);
    for (const char* ps : {"1", "2", "inf"}) {
        auto mq = pad_and_pair(m, q_at(0), P(ps));
        REQUIRE(mq);
        CHECK(mq->first.rows() == 2);
        CHECK(mq->second.cols() == 1);
        CHECK(same_hilbert_function(mq->first, m));
        CHECK(same_hilbert_function(mq->second, q_at(0)));
        CHECK(label_distance(*mq, P(ps)).value == doctest::Approx(std::pow(2.0, 1 / P(ps).as_double())));
    }
    CHECK_THROWS_AS(pad_and_pair(f, m, P("1")), DataError);
}

TEST_CASE("chains") {
    auto m = fixtures::load(fixtures::triangle_m);
    auto a = pad_and_pair(m, q_at(0), P("1")), b = pad_and_pair(q_at(0), q_at(10), P("1"));
    REQUIRE(a);
    REQUIRE(b);
    std::vector<PairedPresentations> chain{*a, *b};
    auto c = chain_upper_bound(chain, P("1"));
    CHECK(*c.exact == 22);
    CHECK(c.value == 22);
    CHECK(*c.exact < 40);
    CHECK(*chain_upper_bound(std::span(chain).first(1), P("1")).exact == 2);
    CHECK(chain_upper_bound({}, P("1")).value == 0);
    std::vector<PairedPresentations> broken{*b, *a};
    CHECK_THROWS_AS(chain_upper_bound(broken, P("1")), DataError);
}

TEST_CASE("label distance decreases in p") {
    gen::Rng rng(301);
    for (int t = 0; t < 200; ++t) {
        auto A = gen::presentation(rng, 2, 1 + rng() % 5, rng() % 5, 2, -4, 4, 2, 0.5);
        auto B = gen::relabeled(rng, A, -4, 4, 2);
        double prev = std::numeric_limits<double>::infinity();
        std::optional<Rational> prev_exact;
        for (const char* ps : {"1", "3/2", "2", "3", "inf"}) {
            auto d = label_distance(A, B, P(ps));
            REQUIRE(d.value <= prev * (1 + 1e-12));
            prev = d.value;
        }
        // Exact for p = 1 against p = inf: the max never exceeds the sum.
        REQUIRE(*label_distance(A, B, P("inf")).exact <= *label_distance(A, B, P("1")).exact);
    }
}

TEST_CASE("one-parameter pairs: Wasserstein below label distance") {
    gen::Rng rng(303);
    for (int t = 0; t < 200; ++t) {
        auto A = gen::presentation(rng, 1, 1 + rng() % 6, rng() % 6, 2, 0, 6, 2, 0.5);
        auto B = gen::relabeled(rng, A, 0, 6, 2);
        for (const char* ps : {"1", "2", "inf"}) {
            auto w = wasserstein::distance(onepar::barcode_of(A), onepar::barcode_of(B), P(ps));
            auto l = label_distance(A, B, P(ps));
            REQUIRE(compare(w, l) <= 0);
        }
    }
}

TEST_CASE("pairings present the original modules") {
    gen::Rng rng(305);
    int found = 0;
    for (int t = 0; t < 120; ++t) {
        auto A = gen::presentation(rng, 2, 1 + rng() % 3, rng() % 3, 2, 0, 4, 1, 0.6);
        Presentation B = t % 2 ? gen::relabeled(rng, A, 0, 4, 1) : gen::presentation(rng, 2, 1 + rng() % 4, rng() % 4, 2, 0, 4, 1, 0.6);
        auto pr = pad_and_pair(A, B, P("1"));
        if (t % 2) {
            REQUIRE(pr);
            REQUIRE(compare(label_distance(*pr, P("1")), label_distance(A, B, P("1"))) <= 0);
        }
        if (!pr) continue;
        ++found;
        REQUIRE(pr->first.same_matrix(pr->second));
        REQUIRE(same_hilbert_function(pr->first, A));
        REQUIRE(same_hilbert_function(pr->second, B));
    }
    CHECK(found > 60);
}

TEST_CASE("bounds reports") {
    auto f = fixtures::load(fixtures::stability_h0_f), g = fixtures::load(fixtures::stability_h0_g);
    auto same = bounds(f, f, P("1"));
    CHECK(same.lower.lower == 0);
    CHECK(same.upper->value == 0);
    auto r = bounds(f, g, P("1"), {.epsilon = 0.05});
    CHECK(r.lower.lower >= 1);
    REQUIRE(r.upper);
    CHECK(r.upper->value <= 2);
    CHECK(r.lower.lower <= r.upper->value + 0.05);
    auto t = bounds(fixtures::load(fixtures::triangle_m), q_at(0), P("inf"), {.epsilon = 0.05});
    REQUIRE(t.upper);
    CHECK(t.upper->value <= 1);
    CHECK(t.lower.lower <= t.upper->value + 0.05);
}
