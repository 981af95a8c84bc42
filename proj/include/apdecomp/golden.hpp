#pragma once

// Reference values for the published tables and example lists this tool
// reproduces. Table commands diff their computed output against these; any
// mismatch is reported as a candidate erratum, never silently corrected.

#include "apdecomp/ap_search.hpp"

#include <array>

namespace apd::golden {

struct Dec {
    i64 n = 0;
    std::array<i64, 3> gens{};
    std::array<i64, 3> orders{};
};

struct Dec4 {
    i64 n = 0;
    std::array<i64, 4> gens{};
    std::array<i64, 4> orders{};
};

// true if d equals the reference triple in either orientation
bool matches(const ApDecomposition& d, const Dec& g);
bool matches4(const ApDecomposition& d, const Dec4& g);

// xi -> D for n <= 1000
extern const std::vector<std::pair<i64, i64>> d_table;

// primes < 300 whose U_n has no strong 3AP decomposition although n-1 has
// three or more distinct prime factors
extern const std::vector<i64> nonexistent;

// coverage of the order-{2,3,m} constructions for n < 1000
extern const std::vector<Dec> coverage_involution;
extern const std::vector<Dec> coverage_cube; // n = 967 order printed as 162 (recomputed: 161)
extern const std::vector<std::pair<Dec, int>> coverage_residual; // + root index used as z
extern const std::vector<i64> order23m_uncovered;
// class size and per-construction counts for primes below 10^5
extern const std::array<i64, 4> counts_1e5;

// coverage of the order-{3,4,mu} constructions, with ord(x) per row
extern const std::vector<std::pair<Dec, i64>> coverage_ascending;
extern const std::vector<std::pair<Dec, i64>> coverage_centered;
extern const std::vector<i64> order34m_uncovered;

// the order-{2,5,nu} variants for n < 1000
extern const std::vector<Dec> type_a;
extern const std::vector<Dec> type_b;
extern const std::vector<Dec> type_c;
extern const std::vector<i64> order25n_uncovered;

// overlapping-pair lists (first and second pattern)
extern const std::vector<std::pair<Dec, Dec>> double_barrelled_1;
extern const std::vector<std::pair<Dec, Dec>> double_barrelled_2;

// pq root-pair table rows, flattened to (n, pair); plus the uncovered n
extern const std::vector<std::pair<Dec, Dec>> pq_pair_rows;
extern const std::vector<i64> pq_pair_uncovered;

// pq -3 construction coverage for n < 300 (p, q in row order)
struct PqNeg3 {
    i64 p = 0, q = 0;
    Dec dec;
};
extern const std::vector<PqNeg3> pq_neg3_rows;

// lifts from weak decompositions of U_q: 0 = A, 1 = B, 2 = C, 3 = '-'
struct WeakLift {
    i64 p = 0, q = 0;
    Dec dec;
    int star_pos = -1;
    int type = 3;
};
extern const std::vector<WeakLift> weak_lift_rows;

// kp^2 enumeration rows
struct T3 {
    i64 n, total, from_strong, from_weak, other;
    bool star_strong, star_weak;
};
extern const std::vector<T3> table3;

// weak order-{1,6,p'} family for n < 300
extern const std::vector<Dec> weak_six_rows;

// quartet examples: n, lambda, the two printed 4-term progressions
struct Quartet {
    i64 n = 0, lambda = 0;
    std::array<i64, 4> prog1{}, prog2{};
};
extern const std::vector<Quartet> quartet_rows;
extern const Dec4 quartet_counterexample; // end-term product fails here

// finite fields: defining polynomials and the printed decompositions
struct FieldPoly {
    i64 p;
    int k;
    std::array<i64, 4> coeffs; // constant first
};
extern const std::vector<FieldPoly> field_polys;
struct FieldDec {
    i64 p;
    int k;
    std::array<i64, 3> logs;
    std::array<i64, 3> orders;
};
extern const std::vector<FieldDec> field_decs;

// 4AP examples
extern const std::vector<Dec4> fourap_104;
extern const Dec4 fourap_3613_weak;

// lifting walk-through examples
extern const Dec eq2, eq3, u343;
extern const std::vector<Dec> u961_lifts;
extern const std::vector<Dec> u275_strong_lifts;
extern const std::vector<Dec> u155_pair;
extern const Dec eq4, eq5, eq6, eq7, eq8;
extern const std::array<i64, 3> eq4_special_lifts;

// introduction examples (feature-tag showcases)
extern const std::vector<Dec> intro_examples;

} // namespace apd::golden
