#pragma once

// The group U_n as an object: unit enumeration, abelian structure, and the
// direct-product test that defines a decomposition.

#include "apdecomp/arith.hpp"

namespace apd {

// A generator together with its multiplicative order mod n. A trivial
// ("weak") factor is generator 1 with order 1.
struct CyclicFactor {
    i64 generator = 0;
    i64 order = 0;
    friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

// All units of Z_n in [1, n-1], ascending.
std::vector<i64> units(const Modulus& m);

struct GroupStructure {
    // d_1 | d_2 | ... | d_r with product phi(n) and d_r = lambda(n)
    std::vector<i64> invariant_factors;
    // cyclic orders contributed by each prime-power component of n
    std::vector<std::pair<i64, std::vector<i64>>> components;
    // minimal number of cyclic factors (= r)
    int min_cyclic_factors = 0;
};

GroupStructure group_structure(const Modulus& m);

// True iff the factors constitute a direct-product decomposition of U_n:
// the order product equals phi(n) and the product map over the full exponent
// box is injective. Trivial factors are permitted and skipped. At most 8
// factors are supported.
bool is_direct_product(const Modulus& m, std::span<const CyclicFactor> factors);

// Cardinality of the subgroup generated by gens, by closure enumeration.
i64 subgroup_order(const Modulus& m, std::span<const i64> gens);

// Dense order table for search loops: ord(x) for units, 0 for non-units.
// The backing array is replicated three times so that positions x + i*k for
// i <= 3, k <= (n-1)/2 index directly without a reduction.
class OrderTable {
  public:
    explicit OrderTable(const Modulus& m);

    i64 n() const { return n_; }
    i64 phi() const { return phi_; }
    u32 operator[](i64 x) const { return ord_[x]; }
    const u32* data() const { return ord_.data(); }

  private:
    i64 n_;
    i64 phi_;
    std::vector<u32> ord_;
};

namespace detail {

// Direct-product test on raw generator/order arrays (no allocation); orders
// must match order_mod of the generators.
bool direct_product_check(i64 n, i64 phi, std::span<const i64> gens, std::span<const i64> orders);

} // namespace detail

} // namespace apd
