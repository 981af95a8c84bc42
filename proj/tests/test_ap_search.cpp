#include "apdecomp/ap_search.hpp"
#include "apdecomp/golden.hpp"

#include "doctest.h"

#include <algorithm>

using namespace apd;

namespace {

bool contains(const std::vector<ApDecomposition>& decs, const golden::Dec& g) {
    return std::any_of(decs.begin(), decs.end(),
                       [&](const auto& d) { return golden::matches(d, g); });
}

} // namespace

TEST_CASE("find_3ap on small moduli") {
    auto d31 = find_3ap(Modulus(31), false);
    REQUIRE(d31.size() == 2);
    CHECK(d31[0].diff == 3);
    CHECK(d31[0].first == 30);
    CHECK(d31[0].orders() == std::vector<i64>{2, 5, 3});

    CHECK(find_3ap(Modulus(71), false).empty());
    CHECK(find_3ap(Modulus(273), false).size() == 108);
}

TEST_CASE("count_3ap matches selected reference counts") {
    CHECK(count_3ap(Modulus(175)).strong == 6);
    CHECK(count_3ap(Modulus(605)).strong == 0);
    CHECK(count_3ap(Modulus(775)).strong == 188);
    // definitional consistency
    auto c = count_3ap(Modulus(91));
    CHECK(c.strong == i64(find_3ap(Modulus(91), false).size()));
}

TEST_CASE("introduction examples all turn up in the search") {
    for (const auto& g : golden::intro_examples) {
        CAPTURE(g.n);
        CHECK(contains(find_3ap(Modulus(g.n), false), g));
    }
}

TEST_CASE("canonicalize picks the smaller difference and is idempotent") {
    Modulus m(31);
    auto d = *make_decomposition(m, 30, 3, 3);
    CHECK(canonicalize(d) == d);
    auto e = *make_decomposition(m, 5, 28, 3);
    auto ce = canonicalize(e);
    CHECK(ce.first == 30);
    CHECK(ce.diff == 3);
    CHECK(canonicalize(ce) == ce);
}

TEST_CASE("reversal symmetry on a modest range") {
    for (i64 n = 3; n <= 150; ++n) {
        Modulus m(n);
        for (const auto& d : find_3ap(m, true)) {
            auto r = reversed(d);
            auto rebuilt = make_decomposition(m, r.first, r.diff, 3);
            REQUIRE(rebuilt.has_value());
            CHECK(*rebuilt == r);
            CHECK(canonicalize(r) == d);
        }
    }
}

TEST_CASE("every search result passes the direct product test with AP generators") {
    for (i64 n : {91, 104, 275}) {
        Modulus m(n);
        for (const auto& d : find_3ap(m, true)) {
            CHECK(is_direct_product(m, d.factors));
            for (size_t i = 0; i < d.factors.size(); ++i)
                CHECK(d.factors[i].generator == (d.first + i64(i) * d.diff) % n);
        }
    }
}

TEST_CASE("feature tags") {
    auto tag = [](i64 n, i64 first, i64 diff) {
        return classify_features(*make_decomposition(Modulus(n), first, diff, 3));
    };
    CHECK(tag(61, 9, 2).orders_in_ap);
    CHECK(tag(455, 92, 1).consecutive_generators);
    CHECK(tag(91, 9, 9).x_equals_k);
    CHECK(tag(65, 61, 61).x_equals_k);
    CHECK(tag(275, 136, 138).outer_generators_differ_by_one);
    auto t703 = tag(703, 700, 1);
    CHECK(t703.negative_consecutive);
    CHECK(t703.consecutive_generators);
    CHECK_FALSE(tag(455, 92, 1).negative_consecutive);
}

TEST_CASE("multiplicity phenomena") {
    auto r211 = multiplicity_phenomena(Modulus(211));
    CHECK(r211.a);
    std::vector<std::vector<i64>> expect{{5, 6, 7}, {2, 7, 15}, {2, 3, 35}};
    for (const auto& ms : expect)
        CHECK(std::any_of(r211.groups.begin(), r211.groups.end(),
                          [&](const auto& g) { return g.order_multiset == ms; }));
    CHECK(multiplicity_phenomena(Modulus(547)).b);
    CHECK(multiplicity_phenomena(Modulus(191)).c);
}

TEST_CASE("double-barrelled pairs") {
    auto p67 = double_barrelled(Modulus(67));
    REQUIRE(p67.size() == 1);
    CHECK(p67[0].case_id == 1);
    const auto& g = golden::double_barrelled_1[0];
    CHECK((golden::matches(p67[0].d1, g.first) || golden::matches(p67[0].d1, g.second)));
    CHECK((golden::matches(p67[0].d2, g.first) || golden::matches(p67[0].d2, g.second)));

    auto p349 = double_barrelled(Modulus(349));
    REQUIRE(p349.size() == 1);
    CHECK(p349[0].case_id == 2);

    CHECK(double_barrelled(Modulus(31)).empty());
    CHECK_THROWS_AS(double_barrelled(Modulus(91)), family_error);
}

TEST_CASE("quartets reproduce the printed progressions") {
    for (const auto& g : golden::quartet_rows) {
        CAPTURE(g.n);
        auto qs = quartets(Modulus(g.n));
        bool found = false;
        for (const auto& q : qs) {
            CHECK(q.lambda == g.lambda);
            if (q.progression == g.prog1 && q.partner == g.prog2) found = true;
        }
        CHECK(found);
        // each quartet's four windows are valid and closed under the multipliers
        for (const auto& q : qs) {
            REQUIRE(q.windows.size() == 4);
            Modulus m(g.n);
            for (const auto& w : q.windows) CHECK(is_direct_product(m, w.factors));
            for (i64 u : q.multipliers) {
                for (const auto& w : q.windows) {
                    i64 first = mul_mod(u, w.factors[0].generator, g.n);
                    i64 second = mul_mod(u, w.factors[1].generator, g.n);
                    auto img = make_decomposition(m, first, reduce(second - first, g.n), 3);
                    REQUIRE(img.has_value());
                    auto c = canonicalize(*img);
                    CHECK(std::any_of(q.windows.begin(), q.windows.end(),
                                      [&](const auto& x) { return x == c; }));
                }
            }
        }
    }
}

TEST_CASE("quartets rejects out-of-family moduli by naming the failed condition") {
    CHECK_THROWS_WITH_AS(quartets(Modulus(31)), doctest::Contains("three distinct odd primes"),
                         family_error);
    CHECK_THROWS_WITH_AS(quartets(Modulus(315)), doctest::Contains("xi"), family_error);
}

TEST_CASE("the four-term window scan finds the end-product counterexample") {
    auto ws = four_term_windows(Modulus(315));
    bool found = false;
    for (const auto& w : ws) {
        if (w.terms == golden::quartet_counterexample.gens) {
            found = true;
            CHECK(w.orders == golden::quartet_counterexample.orders);
            CHECK_FALSE(w.last_is_product_of_rest);
            CHECK_FALSE(w.first_is_product_of_rest);
        }
    }
    CHECK(found);
}

TEST_CASE("4AP search") {
    auto d104 = find_4ap(Modulus(104), false);
    REQUIRE(d104.size() == 2);
    for (const auto& g : golden::fourap_104)
        CHECK(std::any_of(d104.begin(), d104.end(),
                          [&](const auto& d) { return golden::matches4(d, g); }));

    auto weak3613 = find_4ap(Modulus(3613), true);
    CHECK(std::any_of(weak3613.begin(), weak3613.end(), [&](const auto& d) {
        return d.weak && golden::matches4(d, golden::fourap_3613_weak);
    }));
}

TEST_CASE("results are deterministic across thread counts") {
    auto serial = find_3ap(Modulus(455), true, {1});
    auto parallel = find_3ap(Modulus(455), true, {4});
    CHECK(serial == parallel);
}
