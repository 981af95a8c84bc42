#include "apdecomp/theorems.hpp"
#include "apdecomp/golden.hpp"

#include "doctest.h"

#include <algorithm>

using namespace apd;

TEST_CASE("quadratic roots") {
    auto q = quadratic_roots(Modulus(547));
    CHECK(q.x1 == 505);
    CHECK(q.x2 == 39);
    CHECK(q.ord_x1 == 546 / 26);
    CHECK(q.ord_x2 == 546 / 13);
    CHECK_THROWS_AS(quadratic_roots(Modulus(37)), family_error);
    CHECK_THROWS_AS(quadratic_roots(Modulus(91)), family_error);

    for (i64 n : {31, 43, 67, 103, 139, 211, 967}) {
        auto r = quadratic_roots(Modulus(n));
        CHECK(reduce(r.x1 + r.x2 + 3, n) == 0);
        CHECK(mul_mod(r.x1, r.x2, n) == 3);
        CHECK(r.ord_x1 % 2 == 1);
        CHECK(r.ord_x2 % 2 == 0);
    }
}

TEST_CASE("order-{2,3,m} constructions") {
    auto o31 = order23m_involution_middle(Modulus(31));
    REQUIRE(o31.applicability == Applicability::applies);
    CHECK(golden::matches(*o31.witness, {31, {25, 30, 4}, {3, 2, 5}}));

    auto o907 = order23m_involution_middle(Modulus(907));
    REQUIRE(o907.applicability == Applicability::applies);
    CHECK(golden::matches(*o907.witness, {907, {522, 906, 383}, {3, 2, 151}}));

    CHECK(order23m_involution_middle(Modulus(139)).applicability ==
          Applicability::hypothesis_failed);

    auto o67 = order23m_cube_middle(Modulus(67));
    REQUIRE(o67.applicability == Applicability::applies);
    CHECK(golden::matches(*o67.witness, {67, {59, 29, 66}, {11, 3, 2}}));
    CHECK(order23m_cube_middle(Modulus(31)).applicability == Applicability::hypothesis_failed);

    // 967: the reference prints order 162, which does not divide 966; the
    // recomputed order is (n-1)/6 = 161
    auto o967 = order23m_cube_middle(Modulus(967));
    REQUIRE(o967.applicability == Applicability::applies);
    CHECK(o967.witness->factors[0].generator == 682);
    CHECK(o967.witness->factors[0].order == 161);

    auto r103 = order23m_residual_middle(Modulus(103));
    REQUIRE(r103.size() == 1);
    CHECK(r103[0].aux == 1); // z = x1
    CHECK(golden::matches(*r103[0].witness, {103, {56, 79, 102}, {3, 17, 2}}));

    auto r211 = order23m_residual_middle(Modulus(211));
    REQUIRE(r211.size() == 1);
    CHECK(r211[0].aux == 2); // z = x2
    CHECK(golden::matches(*r211[0].witness, {211, {196, 203, 210}, {3, 35, 2}}));

    CHECK(order23m_residual_middle(Modulus(43)).empty());
    CHECK_THROWS_AS(order23m_involution_middle(Modulus(7)), family_error);
}

TEST_CASE("order-{2,3,m} classification") {
    Modulus m(31);
    CHECK(classify_order23m(m, *make_decomposition(m, 25, 5, 3)) ==
          Pattern236::involution_middle);
    CHECK(classify_order23m(m, *make_decomposition(m, 30, 3, 3)) == Pattern236::residual_middle);
    Modulus m67(67);
    CHECK(classify_order23m(m67, *make_decomposition(m67, 59, 37, 3)) ==
          Pattern236::cube_middle);
    Modulus m61(61);
    CHECK_THROWS_AS(classify_order23m(m61, *make_decomposition(m61, 9, 2, 3)),
                    std::invalid_argument); // orders {5,4,3}, not {2,3,m}
}

TEST_CASE("order-{3,4,mu} constructions") {
    auto a61 = order34m_ascending(Modulus(61));
    REQUIRE(a61.size() == 1);
    CHECK(a61[0].aux == 15);
    CHECK(golden::matches(*a61[0].witness, {61, {13, 11, 9}, {3, 4, 5}}));

    auto a661 = order34m_ascending(Modulus(661));
    REQUIRE(a661.size() == 2);
    // the two order-55 generators are related by 85 = 509^3
    CHECK(pow_mod(509, 3, 661) == 85);

    CHECK(order34m_ascending(Modulus(277)).empty());
    CHECK(order34m_centered(Modulus(853)).empty());

    auto c157 = order34m_centered(Modulus(157));
    REQUIRE(c157.size() == 1);
    CHECK(c157[0].aux == 39);
    CHECK(golden::matches(*c157[0].witness, {157, {153, 12, 28}, {13, 3, 4}}));

    auto c997 = order34m_centered(Modulus(997));
    REQUIRE(c997.size() == 1);
    CHECK(golden::matches(*c997[0].witness, {997, {226, 692, 161}, {83, 3, 4}}));

    CHECK_THROWS_AS(order34m_ascending(Modulus(11)), family_error);
}

TEST_CASE("order-{2,5,nu} variants") {
    auto a191 = order25n_witnesses(Modulus(191), 'a');
    REQUIRE(a191.size() == 2);
    CHECK(golden::matches(*a191[0].witness, {191, {39, 190, 150}, {5, 2, 19}}));
    CHECK(golden::matches(*a191[1].witness, {191, {184, 190, 5}, {5, 2, 19}}));

    auto b131 = order25n_witnesses(Modulus(131), 'b');
    REQUIRE(b131.size() == 1);
    CHECK(golden::matches(*b131[0].witness, {131, {107, 53, 130}, {13, 5, 2}}));

    auto c271 = order25n_witnesses(Modulus(271), 'c');
    REQUIRE(c271.size() == 1);
    CHECK(golden::matches(*c271[0].witness, {271, {10, 140, 270}, {5, 27, 2}}));

    for (char v : {'a', 'b', 'c'}) CHECK(order25n_witnesses(Modulus(71), v).empty());
    CHECK_THROWS_AS(order25n_witnesses(Modulus(191), 'd'), std::invalid_argument);
    CHECK_THROWS_AS(order25n_witnesses(Modulus(193), 'a'), family_error);
}

TEST_CASE("3p and 3m nonexistence checks") {
    CHECK(no_3ap_for_three_p(5));
    CHECK(no_3ap_for_three_p(7));
    CHECK(no_3ap_for_three_p(97));
    CHECK_THROWS_AS(no_3ap_for_three_p(4), std::invalid_argument);
    CHECK(no_3ap_with_third_diff(9));
    CHECK(no_3ap_with_third_diff(27));
    CHECK(no_3ap_with_third_diff(63));
    for (i64 n = 9; n <= 300; n += 3) CHECK(no_3ap_with_third_diff(n));
}

TEST_CASE("pq construction around -3") {
    auto w35 = pq_neg3_witness(7, 5);
    REQUIRE(w35.applicability == Applicability::applies);
    CHECK(golden::matches(*w35.witness, {35, {11, 34, 22}, {3, 2, 4}}));

    auto w287 = pq_neg3_witness(7, 41);
    CHECK(w287.applicability == Applicability::hypothesis_failed);
    CHECK(w287.note.find("8") != std::string::npos); // ord_41(-3) = 8

    auto w215 = pq_neg3_witness(43, 5);
    REQUIRE(w215.applicability == Applicability::applies);
    CHECK(golden::matches(*w215.witness, {215, {126, 214, 87}, {21, 2, 4}}));

    CHECK_THROWS_AS(pq_neg3_witness(5, 7), family_error); // 5 = 1 (mod 4)

    // q = 41 is the only q < 300 with q = 2 (mod 3) and ord_q(-3) != q-1
    std::vector<i64> bad_q;
    for (i64 q : prime_sieve()) {
        if (q <= 3 || q >= 300 || q % 3 != 2) continue;
        Modulus mq(q);
        if (order_mod(reduce(-3, q), mq) != q - 1) bad_q.push_back(q);
    }
    CHECK(bad_q == std::vector<i64>{41});

    // and exactly four p < 300 with p = 7 (mod 12) and ord_p(-3) != (p-1)/2
    std::vector<i64> bad_p;
    for (i64 p : prime_sieve()) {
        if (p >= 300 || p % 12 != 7) continue;
        Modulus mp(p);
        if (order_mod(reduce(-3, p), mp) != (p - 1) / 2) bad_p.push_back(p);
    }
    CHECK(bad_p == std::vector<i64>{67, 103, 151, 271});
}

TEST_CASE("pq root pairs") {
    auto p91 = pq_root_pairs(Modulus(91));
    REQUIRE(p91.size() == 1);
    CHECK(golden::matches(p91[0].dec, {91, {33, 16, 90}, {12, 3, 2}}));
    CHECK(golden::matches(p91[0].dec_mate, {91, {58, 74, 90}, {12, 3, 2}}));
    // the pair is related by negating both root-dependent generators
    CHECK(p91[0].dec_mate.factors[0].generator ==
          reduce(-p91[0].dec.factors[0].generator, 91));
    CHECK(p91[0].dec_mate.factors[1].generator ==
          reduce(-p91[0].dec.factors[1].generator - 1, 91));

    CHECK(pq_root_pairs(Modulus(247)).size() == 2);
    CHECK(pq_root_pairs(Modulus(259)).empty());
    CHECK_THROWS_AS(pq_root_pairs(Modulus(703)), family_error); // gcd(p-1,q-1) = 18
}

TEST_CASE("weak order-six family") {
    auto w43 = weak_order_six_family(Modulus(43));
    REQUIRE(w43.size() == 1);
    CHECK(golden::matches(w43[0], {43, {1, 4, 7}, {1, 7, 6}}));

    CHECK(weak_order_six_family(Modulus(223)).size() == 2);

    auto w67 = weak_order_six_family(Modulus(67));
    REQUIRE(w67.size() == 1);
    auto ord = w67[0].order_multiset();
    CHECK(ord == std::vector<i64>{1, 6, 11}); // orders in AP
    CHECK(weak_order_six_family(Modulus(31)).empty());
}

TEST_CASE("weak lift classification") {
    Modulus m65(65), m185(185), m905(905);
    CHECK(classify_weak_lift(*make_decomposition(m65, 27, 17, 3), 13) == WeakLiftType::A);
    CHECK(classify_weak_lift(*make_decomposition(m185, 43, 69, 3), 37) == WeakLiftType::B);
    CHECK(classify_weak_lift(*make_decomposition(m905, 363, 858, 3), 181) ==
          WeakLiftType::unclassified);
    CHECK_THROWS_AS(classify_weak_lift(*make_decomposition(m65, 53, 4, 3), 11),
                    std::invalid_argument);
}
