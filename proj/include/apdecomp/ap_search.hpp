#pragma once

// Exhaustive enumeration and classification of 3AP and 4AP decompositions:
// canonical forms, strong/weak status, feature tags, double-barrelled pairs,
// quartets, and the xi -> D summary table.

#include "apdecomp/arith.hpp"
#include "apdecomp/unit_group.hpp"

#include <array>
#include <functional>
#include <map>

namespace apd {

// U_n = <x> x <x+k> x ... with the generators in arithmetic progression.
// Generators are reduced to [1, n-1]; weak means exactly one trivial factor.
struct ApDecomposition {
    i64 n = 0;
    i64 first = 0; // x
    i64 diff = 0;  // k, in [1, n-1]
    std::vector<CyclicFactor> factors;
    bool weak = false;

    std::vector<i64> generators() const;
    std::vector<i64> orders() const;
    // order multiset, ascending
    std::vector<i64> order_multiset() const;
    friend bool operator==(const ApDecomposition&, const ApDecomposition&) = default;
};

struct SearchOptions {
    int threads = 1;
};

// Validates (first, diff, len) against m and builds the decomposition, or
// returns nullopt if it is not one (non-unit term, wrong order product,
// repeated product, two trivial factors, diff = 0).
std::optional<ApDecomposition> make_decomposition(const Modulus& m, i64 first, i64 diff, int len);

// Of the equivalent pair {(x, k), (x+(len-1)k, n-k)} returns the one with the
// smaller diff, reversing the factor list if needed. Idempotent.
ApDecomposition canonicalize(const ApDecomposition& d);
ApDecomposition reversed(const ApDecomposition& d);

// All canonical 3AP decompositions of U_n, sorted by (diff, first). Strong
// only when allow_weak is false; strong and weak when true.
std::vector<ApDecomposition> find_3ap(const Modulus& m, bool allow_weak,
                                      const SearchOptions& opts = {});

struct ApCounts {
    i64 strong = 0;
    i64 weak = 0;
};
ApCounts count_3ap(const Modulus& m, const SearchOptions& opts = {});

// 4-factor analogue of find_3ap.
std::vector<ApDecomposition> find_4ap(const Modulus& m, bool allow_weak,
                                      const SearchOptions& opts = {});

struct FeatureTags {
    bool orders_in_ap = false;
    bool consecutive_generators = false;
    bool x_equals_k = false;
    bool outer_generators_differ_by_one = false;
    bool negative_consecutive = false;
};
FeatureTags classify_features(const ApDecomposition& d);

// How multiple decompositions of one U_n relate:
//   [A] several order multisets occur;
//   [B] one multiset occurs with different middle orders;
//   [C] one ordered order pattern occurs more than once.
struct PhenomenaReport {
    struct Group {
        std::vector<i64> order_multiset;
        std::vector<ApDecomposition> decompositions;
    };
    std::vector<Group> groups;
    bool a = false;
    bool b = false;
    bool c = false;
};
PhenomenaReport multiplicity_phenomena(const Modulus& m, const SearchOptions& opts = {});

// Overlapping pairs of decompositions of a prime modulus: case 1 shares the
// outer generators (third generators generate the same subgroup), case 2 is
// the shifted-window pattern with the two extreme generators powers of each
// other.
struct DoubleBarrelledPair {
    int case_id = 0; // 1 or 2
    ApDecomposition d1;
    ApDecomposition d2;
};
std::vector<DoubleBarrelledPair> double_barrelled(const Modulus& m, const SearchOptions& opts = {});

// For n a product of three distinct odd primes with xi = 4: orbits of the
// (lambda,2,2) decompositions under the unit multipliers. Each orbit is two
// 4-term progressions [x, y, z, xyz] whose 3-term windows are the four
// decompositions of the quartet.
struct QuartetResult {
    i64 lambda = 0;
    std::array<i64, 4> progression{};
    std::array<i64, 4> partner{};
    std::vector<i64> multipliers;            // the three admissible u values
    std::vector<ApDecomposition> windows;    // the four decompositions, canonical
};
std::vector<QuartetResult> quartets(const Modulus& m, const SearchOptions& opts = {});

// Generic scan for 4-term APs whose both 3-term windows are strong
// decompositions, with the end-term product property evaluated rather than
// assumed. This is where progressions that do not come from a quartet
// multiplier (wrong order pattern) show up.
struct WindowProgression {
    std::array<i64, 4> terms{};
    std::array<i64, 4> orders{};
    bool last_is_product_of_rest = false;
    bool first_is_product_of_rest = false;
};
std::vector<WindowProgression> four_term_windows(const Modulus& m, const SearchOptions& opts = {});

// Strong canonical 3AP count for every n in [3, limit].
struct NCount {
    i64 n = 0;
    i64 xi = 0;
    i64 strong = 0;
};
std::vector<NCount> count_scan(i64 limit, const SearchOptions& opts = {});

// xi -> maximum strong count among n <= limit with that xi.
std::map<i64, i64> d_table(i64 limit, const SearchOptions& opts = {});

namespace detail {

// Runs fn(i) for i in [begin, end) across a small worker pool; work is
// handed out dynamically but any per-index output stays index-addressed, so
// results are independent of the thread count.
void parallel_for(i64 begin, i64 end, int threads, const std::function<void(i64)>& fn);

} // namespace detail

} // namespace apd
