#include "apdecomp/lifting.hpp"
#include "apdecomp/golden.hpp"

#include "doctest.h"

#include <algorithm>

using namespace apd;

namespace {

ApDecomposition dec_of(const golden::Dec& g) {
    Modulus m(g.n);
    auto d = make_decomposition(m, g.gens[0], reduce(g.gens[1] - g.gens[0], g.n), 3);
    REQUIRE(d.has_value());
    return *d;
}

bool result_set_matches(const std::vector<ApDecomposition>& results,
                        const std::vector<golden::Dec>& expected) {
    if (results.size() != expected.size()) return false;
    for (const auto& g : expected)
        if (!std::any_of(results.begin(), results.end(),
                         [&](const auto& d) { return golden::matches(canonicalize(d), g) ||
                                                     golden::matches(d, g); }))
            return false;
    return true;
}

} // namespace

TEST_CASE("lifts of an element") {
    auto l54 = lifts_of_element(54, Modulus(55), 5);
    REQUIRE(l54.size() == 5);
    auto sp = std::find_if(l54.begin(), l54.end(), [](auto& l) { return l.special; });
    REQUIRE(sp != l54.end());
    CHECK(sp->value == 274);
    CHECK(sp->order == 2);
    for (const auto& l : l54)
        CHECK(l.order == (l.special ? 2 : 10)); // non-special lifts gain the factor p

    auto l1 = lifts_of_element(1, Modulus(55), 5);
    auto sp1 = std::find_if(l1.begin(), l1.end(), [](auto& l) { return l.special; });
    REQUIRE(sp1 != l1.end());
    CHECK(sp1->value == 1);
    CHECK(sp1->order == 1);

    // coprime index: the spurious (non-unit) lift is excluded
    auto l4 = lifts_of_element(4, Modulus(31), 5);
    CHECK(l4.size() == 4);
    for (const auto& l : l4) CHECK(l.value % 5 != 0);
}

TEST_CASE("case classification") {
    CHECK(classify_case(dec_of(golden::eq3), 7).kind == LiftCaseKind::square_divides);
    auto c = classify_case(dec_of(golden::eq7), 5);
    CHECK(c.kind == LiftCaseKind::exactly_divides);
    CHECK(c.p_divisible_orders == 1);
    CHECK(classify_case(dec_of({31, {25, 30, 4}, {3, 2, 5}}), 5).kind == LiftCaseKind::coprime);
    CHECK_THROWS_AS(classify_case(dec_of(golden::eq7), 4), std::invalid_argument);
}

TEST_CASE("productivity") {
    CHECK(is_productive(dec_of({31, {25, 30, 4}, {3, 2, 5}}), 31));
    CHECK_FALSE(is_productive(dec_of(golden::eq4), 379));
    CHECK_FALSE(is_productive(dec_of(golden::eq5), 11));
    CHECK_FALSE(is_productive(dec_of(golden::eq6), 461));
    CHECK_THROWS_AS(is_productive(dec_of(golden::eq7), 5), family_error); // wrong subcase
}

TEST_CASE("lift enumeration follows the case analysis") {
    // no p-divisible order, productive: exactly three lifts
    auto r961 = lift_decompositions(dec_of({31, {25, 30, 4}, {3, 2, 5}}), 31);
    CHECK(r961.productive == true);
    CHECK(result_set_matches(r961.results, golden::u961_lifts));

    // one p-divisible order: 2(p-1) lifts, here 4 strong + 4 weak
    auto r275 = lift_decompositions(dec_of(golden::eq7), 5);
    CHECK(r275.results.size() == 8);
    std::vector<ApDecomposition> strong, weak;
    for (const auto& d : r275.results) (d.weak ? weak : strong).push_back(d);
    CHECK(weak.size() == 4);
    CHECK(result_set_matches(strong, golden::u275_strong_lifts));

    // same source, index 11: the special lifts are in AP, nothing lifts
    auto r605 = lift_decompositions(dec_of(golden::eq7), 11);
    CHECK(r605.productive == false);
    CHECK(r605.results.empty());

    // coprime index: the two lifts of the U_31 decomposition, spurious in AP
    auto r155 = lift_decompositions(dec_of({31, {25, 30, 4}, {3, 2, 5}}), 5);
    REQUIRE(r155.spurious_lifts.has_value());
    CHECK(*r155.spurious_lifts == std::array<i64, 3>{25, 30, 35});
    CHECK(result_set_matches(r155.results, golden::u155_pair));

    // two p-divisible orders: p(p-1) lifts from each of the 108 sources
    Modulus m273(273);
    auto sources = find_3ap(m273, false);
    REQUIRE(sources.size() == 108);
    i64 total = 0;
    for (const auto& d : sources) {
        auto rep = lift_decompositions(d, 3);
        CHECK(rep.lift_case.p_divisible_orders == 2);
        CHECK(rep.results.size() == 6);
        total += i64(rep.results.size());
    }
    CHECK(total == 648);
}

TEST_CASE("lift order and congruence laws") {
    for (const auto& g : {golden::eq7, golden::eq8}) {
        auto src = dec_of(g);
        auto rep = lift_decompositions(src, 5);
        for (const auto& res : rep.results) {
            for (int i = 0; i < 3; ++i) {
                CHECK(res.factors[i].generator % src.n == src.factors[i].generator);
                CHECK(res.factors[i].order % src.factors[i].order == 0);
                i64 ratio = res.factors[i].order / src.factors[i].order;
                CHECK((ratio == 1 || ratio == 5));
            }
        }
    }
}

TEST_CASE("iterated prime-power lifting") {
    auto eq2 = dec_of(golden::eq2);
    CHECK(golden::matches(canonicalize(lift_to_prime_power(eq2, 2)), golden::eq3));
    CHECK(golden::matches(canonicalize(lift_to_prime_power(eq2, 3)), golden::u343));

    // two orders stay fixed, the third gains p^(alpha-1)
    auto lifted = lift_to_prime_power(eq2, 3);
    std::vector<i64> ratios;
    for (int i = 0; i < 3; ++i)
        ratios.push_back(lifted.factors[i].order / eq2.factors[i].order);
    std::sort(ratios.begin(), ratios.end());
    CHECK(ratios == std::vector<i64>{1, 1, 49});

    CHECK_THROWS_AS(lift_to_prime_power(dec_of(golden::eq4), 2), family_error);
    CHECK_THROWS_AS(lift_to_prime_power(dec_of(golden::eq7), 2), family_error); // composite base
}

TEST_CASE("kp^2 provenance rows on a partial range") {
    auto rows = table3_report(650);
    for (const auto& g : golden::table3) {
        if (g.n > 650) continue;
        auto it = std::find_if(rows.begin(), rows.end(), [&](auto& r) { return r.n == g.n; });
        REQUIRE(it != rows.end());
        CHECK(it->total == g.total);
        CHECK(it->from_strong == g.from_strong);
        CHECK(it->from_weak == g.from_weak);
        CHECK(it->other == g.other);
        CHECK(it->star_strong == g.star_strong);
        CHECK(it->star_weak == g.star_weak);
    }
}

TEST_CASE("unproductive scan on a partial range") {
    auto hits = unproductive_prime_scan(500);
    REQUIRE(hits.size() == 2); // 11 and 379; 461 lies beyond this range
    CHECK(golden::matches(hits[0].dec, golden::eq5));
    CHECK(golden::matches(hits[1].dec, golden::eq4));
    CHECK(hits[1].special_lifts == golden::eq4_special_lifts);
}

TEST_CASE("the kp^3 value 875 refines the 175 decompositions") {
    Modulus m875(875), m175(175);
    auto decs = find_3ap(m875, false);
    REQUIRE(decs.size() == 6);
    for (const auto& d : decs) {
        i64 gens[3], ords[3];
        for (int i = 0; i < 3; ++i) {
            gens[i] = d.factors[i].generator % 175;
            ords[i] = order_mod(gens[i], m175);
        }
        CHECK(detail::direct_product_check(175, m175.phi(), gens, ords));
        for (int i = 0; i < 3; ++i) {
            // orders prime to 5 are unchanged; multiples of 5 become
            // multiples of 25
            if (ords[i] % 5 == 0) {
                CHECK(d.factors[i].order == 5 * ords[i]);
                CHECK(d.factors[i].order % 25 == 0);
            } else {
                CHECK(d.factors[i].order == ords[i]);
            }
        }
    }
}
