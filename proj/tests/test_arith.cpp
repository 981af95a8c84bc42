#include "apdecomp/arith.hpp"

#include "doctest.h"

#include <numeric>

using namespace apd;

namespace {

// independent oracle: linear scan for the multiplicative order
i64 order_by_scan(i64 x, i64 n) {
    i64 v = x % n, t = 1;
    while (v != 1) {
        v = v * x % n;
        ++t;
    }
    return t;
}

} // namespace

TEST_CASE("factorize basics") {
    CHECK(factorize(91) == Factorization{{7, 1}, {13, 1}});
    CHECK(factorize(875) == Factorization{{5, 3}, {7, 1}});
    CHECK(factorize(1).empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(200'000'000), std::out_of_range);
}

TEST_CASE("factorize is a left inverse of expansion up to 10^6") {
    for (i64 n = 1; n <= 1'000'000; ++n) {
        if (expand(factorize(n)) != n) {
            FAIL("factorize round-trip failed at ", n);
        }
    }
}

TEST_CASE("totients and lambda") {
    CHECK(Modulus(91).phi() == 72);
    CHECK(Modulus(2).phi() == 1);
    CHECK(Modulus(31).phi() == 30);
    CHECK(Modulus(105).lambda() == 12);
    CHECK(Modulus(8).lambda() == 2);
    CHECK(Modulus(91).lambda() == 12);
    CHECK(Modulus(105).xi() == 4);
    CHECK(Modulus(31).xi() == 1);

    // lambda(91) cross-checked as the maximum order over U_91
    i64 max_order = 0;
    for (i64 x = 1; x < 91; ++x)
        if (std::gcd(x, i64(91)) == 1) max_order = std::max(max_order, order_by_scan(x, 91));
    CHECK(max_order == 12);

    // xi(3613) against the brute-force phi / max-order value
    Modulus m(3613);
    i64 mo = 0;
    for (i64 x = 1; x < 3613; ++x) mo = std::max(mo, order_by_scan(x, 3613));
    CHECK(m.xi() == m.phi() / mo);
}

TEST_CASE("xi is even when greater than 1, lambda divides phi (n <= 10^4)") {
    for (i64 n = 2; n <= 10'000; ++n) {
        Modulus m(n);
        if (m.phi() % m.lambda() != 0) FAIL("lambda does not divide phi at ", n);
        if (m.xi() > 1 && m.xi() % 2 != 0) FAIL("odd xi ", m.xi(), " at ", n);
    }
}

TEST_CASE("order_mod examples and error") {
    CHECK(order_mod(2, Modulus(31)) == 5);
    CHECK(order_mod(1, Modulus(7)) == 1);
    CHECK(order_mod(9, Modulus(61)) == 5);
    CHECK_THROWS_AS(order_mod(7, Modulus(91)), std::invalid_argument);
}

TEST_CASE("order_mod agrees with the scan oracle and obeys the power rule") {
    for (i64 n : {31, 61, 91, 105, 256, 343, 722, 1024, 1365, 1875, 1998}) {
        Modulus m(n);
        for (i64 x = 1; x < n; ++x) {
            if (std::gcd(x, n) != 1) continue;
            i64 o = order_mod(x, m);
            CHECK(o == order_by_scan(x, n));
            for (i64 j : {2, 3, 5}) {
                i64 expected = o / std::gcd(j, o);
                CHECK(order_mod(pow_mod(x, j, n), m) == expected);
            }
        }
    }
}

TEST_CASE("crt_combine") {
    std::vector<std::pair<i64, i64>> c1{{1, 7}, {2, 5}};
    CHECK(crt_combine(c1) == 22);
    std::vector<std::pair<i64, i64>> c2{{0, 3}};
    CHECK(crt_combine(c2) == 0);
    std::vector<std::pair<i64, i64>> c3{{1, 19}, {8, 11}};
    CHECK(crt_combine(c3) == 96);
    std::vector<std::pair<i64, i64>> bad{{1, 6}, {2, 4}};
    CHECK_THROWS_AS(crt_combine(bad), std::invalid_argument);
}

TEST_CASE("sqrt_mod_prime examples") {
    CHECK(sqrt_mod_prime(1, 7) == std::pair<i64, i64>{1, 6});
    CHECK_FALSE(sqrt_mod_prime(3, 7).has_value()); // 3 is a non-residue mod 7
    CHECK(sqrt_mod_prime(0, 13) == std::pair<i64, i64>{0, 0});
    CHECK_THROWS_AS(sqrt_mod_prime(2, 15), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_mod_prime(2, 8), std::invalid_argument);

    // the solution set of x^2+3x+3 = 0 mod 31 satisfies both Vieta identities
    auto r = sqrt_mod_prime(-3, 31);
    REQUIRE(r.has_value());
    i64 inv2 = inv_mod(2, 31);
    i64 x1 = mul_mod(reduce(-3 + r->first, 31), inv2, 31);
    i64 x2 = mul_mod(reduce(-3 - r->first, 31), inv2, 31);
    CHECK(reduce(x1 + x2, 31) == reduce(-3, 31));
    CHECK(mul_mod(x1, x2, 31) == 3);
}

TEST_CASE("sqrt_mod_prime counts and verifies roots") {
    for (i64 p : {3, 5, 7, 11, 13, 17, 97, 101, 193, 577}) {
        i64 with_roots = 0;
        for (i64 a = 1; a < p; ++a) {
            auto r = sqrt_mod_prime(a, p);
            if (!r) continue;
            ++with_roots;
            CHECK(mul_mod(r->first, r->first, p) == a);
            CHECK(mul_mod(r->second, r->second, p) == a);
        }
        CHECK(with_roots == (p - 1) / 2);
    }
}
