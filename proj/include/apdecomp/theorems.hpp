#pragma once

// Constructive implementations and verifiers for the named decomposition
// families: the order-{2,3,m} constructions for primes with n-1 = 6m, the
// order-{3,4,mu} constructions for n-1 = 12*mu, the order-{2,5,nu} variants,
// the pq constructions built around -3, the weak order-6 family, and the
// classifier for lifts from weak decompositions.

#include "apdecomp/ap_search.hpp"

namespace apd {

// Roots of x^2 + 3x + 3 = 0 mod a prime n = 7, 31 (mod 36), labelled by
// order parity: x1 odd, x2 even. y_i = x_i + 1 are the two cube roots of
// unity other than 1.
struct QuadraticRoots {
    i64 x1 = 0, x2 = 0;
    i64 y1 = 0, y2 = 0;
    i64 ord_x1 = 0, ord_x2 = 0;
};
QuadraticRoots quadratic_roots(const Modulus& m);

enum class Applicability { applies, hypothesis_failed, out_of_family };

struct TheoremOutcome {
    Applicability applicability = Applicability::out_of_family;
    std::optional<ApDecomposition> witness;
    std::string note; // which hypothesis failed / observed orders / root used
    i64 aux = 0;      // ord(x) for the {3,4,mu} families; root index elsewhere
};

// n prime with n-1 = 6m, m coprime to 6. The three constructions place the
// residual order-m generator around the fixed order-2 and order-3 elements:
//   involution middle:  <x2+1>_3 x <-1>_2 x <x1>_m   (needs ord(x1) = m)
//   cube middle:        <2*x2+3>_m x <x2+1>_3 x <-1>_2
//                       (needs ord(x1) = (n-1)/2, ord(x2) = n-1)
//   residual middle:    <z+1>_3 x <z/2>_m x <-1>_2   (needs ord(z/2) = m)
TheoremOutcome order23m_involution_middle(const Modulus& m);
TheoremOutcome order23m_cube_middle(const Modulus& m);
std::vector<TheoremOutcome> order23m_residual_middle(const Modulus& m);

enum class Pattern236 { involution_middle, cube_middle, residual_middle };

// Every {2,3,m}-order decomposition of a prime modulus must arise from one of
// the three constructions above; identifies which, or throws invariant_error.
Pattern236 classify_order23m(const Modulus& m, const ApDecomposition& d);

// n prime with n-1 = 12*mu, mu coprime to 12; roots x of x^2+3x+3 and steps k
// with (x+1+k)^2 = -1. Ascending form <x+1>_3 x <x+1+k>_4 x <x+1+2k>_mu,
// centered form <x+1-k>_mu x <x+1>_3 x <x+1+k>_4.
std::vector<TheoremOutcome> order34m_ascending(const Modulus& m);
std::vector<TheoremOutcome> order34m_centered(const Modulus& m);

// n prime with n-1 = 10*nu, nu coprime to 10; z5 runs over the four order-5
// elements. Variants:
//   'a': <z5>_5 x <-1>_2 x <-z5-2>_nu
//   'b': <2z+1>_nu x <z>_5 x <-1>_2
//   'c': <z5>_5 x <(z5-1)/2>_nu x <-1>_2
std::vector<TheoremOutcome> order25n_witnesses(const Modulus& m, char variant);

// Exhaustively confirms that U_{3p} has no 3AP decomposition at all (p > 3
// prime), and that U_{3m} has none with diff exactly m.
bool no_3ap_for_three_p(i64 p);
bool no_3ap_with_third_diff(i64 n);

// p, q > 3 primes, p = 3 (mod 4): when ord_p(-3) = (p-1)/2 and
// ord_q(-3) = q-1, the element x = 1 (mod p), -3 (mod q) gives
// U_pq = <-x-2>_{(p-1)/2} x <-1>_2 x <x>_{q-1}, a lift of the weak
// <-3> x <-1> x <1> decomposition of U_p.
TheoremOutcome pq_neg3_witness(i64 p, i64 q);

// n = pq, p = q = 1 (mod 6), gcd(p-1, q-1) = 6: decompositions
// <2x+3>_m x <x+1>_3 x <-1>_2 from roots x of x^2+3x+3 mod n, paired with
// the negated mate (the root -x-3).
struct RootPair {
    i64 x = 0, x_mate = 0;
    ApDecomposition dec, dec_mate;
};
std::vector<RootPair> pq_root_pairs(const Modulus& m);

// Weak decompositions of prime n = 6p'+1 with order multiset {1, 6, p'},
// p' > 3 prime. Verifies a = (c-1)^{-1} whenever the trivial factor sits in
// the middle of <a>_6 x <1>_1 x <c>_{p'}.
std::vector<ApDecomposition> weak_order_six_family(const Modulus& m);

// Placement type of a decomposition lifted from a weak decomposition of U_q:
// orient the generator lifted from 1 first; A = middle order 4, C = last
// order 4, B = lifted-from-1 generator in the middle. Unclassified when the
// weak source has no order-4 generator.
enum class WeakLiftType { A, B, C, unclassified };
WeakLiftType classify_weak_lift(const ApDecomposition& d, i64 q);

// --- range scans backing the coverage tables ---

struct CoverageRow {
    i64 n = 0;
    std::vector<TheoremOutcome> outcomes; // the witnesses found for this n
};

// Primes n < limit with n = 7, 31 (mod 36), n > 7, and the three
// order-{2,3,m} constructions evaluated on each.
struct Order23mScan {
    std::vector<CoverageRow> involution, cube, residual;
    std::vector<i64> class_primes;  // every prime in the congruence class
    std::vector<i64> uncovered;     // class primes none of the three covers
};
Order23mScan scan_order23m(i64 limit, const SearchOptions& opts = {});

struct Order34mScan {
    std::vector<CoverageRow> ascending, centered;
    std::vector<i64> class_primes;
    std::vector<i64> uncovered;
};
Order34mScan scan_order34m(i64 limit, const SearchOptions& opts = {});

struct Order25nScan {
    std::vector<CoverageRow> a, b, c;
    std::vector<i64> class_primes;
    std::vector<i64> uncovered;
};
Order25nScan scan_order25n(i64 limit, const SearchOptions& opts = {});

// n = pq < limit qualifying for pq_root_pairs, including empty rows.
struct PqPairRow {
    i64 n = 0, p = 0, q = 0;
    std::vector<RootPair> pairs;
};
std::vector<PqPairRow> scan_pq_root_pairs(i64 limit);

// ordered (p, q) with pq < limit qualifying for pq_neg3_witness.
struct PqNeg3Row {
    i64 n = 0, p = 0, q = 0;
    TheoremOutcome outcome;
};
std::vector<PqNeg3Row> scan_pq_neg3(i64 limit);

// primes n < limit with a nonempty weak order-6 family.
struct WeakSixRow {
    i64 n = 0;
    std::vector<ApDecomposition> decs;
};
std::vector<WeakSixRow> scan_weak_order_six(i64 limit);

// strong decompositions of U_pq that are lifts of weak decompositions of U_q,
// for p = q = 5 (mod 8), q > 5, gcd(p-1, q-1) = 4.
struct WeakLiftRow {
    i64 n = 0, p = 0, q = 0;
    ApDecomposition dec;
    int star_pos = -1; // index of the generator lifted from 1 mod q
    WeakLiftType type = WeakLiftType::unclassified;
};
std::vector<WeakLiftRow> scan_weak_lifts(i64 limit, const SearchOptions& opts = {});

} // namespace apd
