#pragma once

// Lifting calculus: enumerate lifts of elements and decompositions from U_n
// to U_{np}, classify the case split, detect productive/unproductive
// decompositions, iterate lifts to prime powers, and build the kp^2
// provenance table.

#include "apdecomp/ap_search.hpp"

namespace apd {

enum class LiftCaseKind {
    square_divides,  // p^2 | n
    exactly_divides, // p | n, p^2 does not
    coprime,         // p does not divide n
};

struct LiftCase {
    LiftCaseKind kind = LiftCaseKind::coprime;
    // number of factor orders divisible by p (meaningful when p | n exactly)
    int p_divisible_orders = 0;
};

struct ElementLift {
    i64 value = 0;
    i64 order = 0;
    bool special = false; // the unique order-preserving lift, when unique
};

// All x' = x (mod n) coprime to np, with orders mod np.
std::vector<ElementLift> lifts_of_element(i64 x, const Modulus& m, i64 p);

LiftCase classify_case(const ApDecomposition& d, i64 p);

// Defined in the subcase with no factor order divisible by p: false iff the
// three special lifts form an AP mod np. Throws family_error outside that
// subcase.
bool is_productive(const ApDecomposition& d, i64 p);

struct LiftReport {
    ApDecomposition source;
    i64 p = 0;
    i64 np = 0;
    LiftCase lift_case;
    // per-factor special lift when the order-preserving lift is unique
    std::array<std::optional<i64>, 3> special_lifts;
    // coprime case: the one non-unit lift of each generator (always an AP)
    std::optional<std::array<i64, 3>> spurious_lifts;
    std::optional<bool> productive; // subcase with no p-divisible order only
    std::vector<ApDecomposition> results; // verified, in source orientation
};

// All lifts of d to U_{np} that are (possibly weak) decompositions, each
// verified by the direct-product test.
LiftReport lift_decompositions(const ApDecomposition& d, i64 p);

// Iterated lift of a productive (possibly weak) decomposition of U_p to a
// strong decomposition of U_{p^alpha}: two factor orders stay fixed and the
// third is multiplied by p^(alpha-1). Throws family_error on unproductive
// input.
ApDecomposition lift_to_prime_power(const ApDecomposition& d, int alpha);

struct Table3Row {
    i64 n = 0, k = 0, p = 0;
    i64 total = 0;       // strong decompositions of U_{kp^2}
    i64 from_strong = 0; // whose reduction mod kp is a strong decomposition
    i64 from_weak = 0;   // whose reduction mod kp is a weak decomposition
    i64 other = 0;       // reduction is not a decomposition of U_{kp}
    // column is 0 although sources exist, because every source's special
    // lifts land in AP
    bool star_strong = false;
    bool star_weak = false;
};

// Rows for every n = k*p^2 <= limit with k, p distinct odd primes > 3.
std::vector<Table3Row> table3_report(i64 limit, const SearchOptions& opts = {});

struct UnproductiveHit {
    i64 n = 0;
    ApDecomposition dec;
    std::array<i64, 3> special_lifts{};
};

// Scans every (strong or weak) decomposition of prime moduli n < limit for
// unproductive ones (special lifts mod n^2 in AP).
std::vector<UnproductiveHit> unproductive_prime_scan(i64 limit, const SearchOptions& opts = {});

} // namespace apd
