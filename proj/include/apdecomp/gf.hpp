#pragma once

// GF(p^k) for odd p and k <= 3, defined by a monic primitive polynomial, with
// a full discrete-log table and 3AP decomposition search in the (cyclic)
// multiplicative group.

#include "apdecomp/arith.hpp"

#include <array>

namespace apd {

struct FieldSpec {
    i64 p = 0;
    int k = 0;
    std::vector<i64> poly; // monic, degree k, constant term first, coeffs mod p
    i64 q = 0;             // p^k
};

// Elements are encoded as c0 + c1*p + c2*p^2 < q. zeta (the class of x, or
// the chosen primitive root when k = 1) generates the multiplicative group;
// its powers and logs are tabulated at construction.
class Field {
  public:
    // poly omitted: the six embedded defaults for q in {11^2, 11^3, 19^2,
    // 19^3, 23^2, 29^2}, or x - g for k = 1 with g the least primitive root.
    static Field build(i64 p, int k, std::optional<std::vector<i64>> poly = std::nullopt);

    const FieldSpec& spec() const { return spec_; }
    i64 q() const { return spec_.q; }
    i64 p() const { return spec_.p; }
    int k() const { return spec_.k; }

    u32 add(u32 a, u32 b) const;
    u32 sub(u32 a, u32 b) const;
    u32 neg(u32 a) const;
    u32 mul(u32 a, u32 b) const;

    i64 log(u32 a) const; // a != 0
    u32 zeta_pow(i64 e) const;
    i64 order(u32 a) const { return ord_[a]; }
    u32 frobenius(u32 a) const; // a -> a^p
    bool in_prime_subfield(u32 a) const { return a < u32(spec_.p); }

  private:
    FieldSpec spec_;
    std::vector<u32> pow_;  // zeta^e, e in [0, q-1)
    std::vector<u32> log_;  // inverse of pow_ (log_[0] unused)
    std::vector<u32> ord_;  // multiplicative order, 0 for the zero element
    std::array<std::vector<u32>, 3> comp_; // encoded element -> coefficient
};

// A 3AP decomposition of GF(q)^x: elements x, x+d, x+2d with pairwise coprime
// orders multiplying to q-1 (sufficient and necessary in a cyclic group).
struct FieldDecomposition {
    std::array<u32, 3> elems{};
    std::array<i64, 3> logs{};
    std::array<i64, 3> orders{};
};

// All decompositions, one per {(x,d), (x+2d,-d)} pair (the orientation whose
// difference has the smaller encoding), sorted by (diff, first) encoding.
std::vector<FieldDecomposition> find_3ap_field(const Field& f);

// For q = 7, 31 (mod 36): every decomposition with orders {2, 3, (q-1)/6}
// must lie entirely in the prime subfield. Vacuously true outside the
// family and for prime q.
bool prime_subfield_check(const Field& f);

} // namespace apd
