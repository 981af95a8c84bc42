#include "apdecomp/gf.hpp"

#include <algorithm>
#include <numeric>

namespace apd {

namespace {

constexpr i64 kFieldLimit = 100'000;

struct DefaultPoly {
    i64 p;
    int k;
    std::array<i64, 4> coeffs; // constant first, degree k implied monic
};

// printed forms normalized to coefficients mod p
constexpr DefaultPoly kDefaultPolys[] = {
    {11, 2, {2, 7, 1, 0}},  // x^2 + 7x + 2
    {11, 3, {9, 2, 0, 1}},  // x^3 + 2x + 9
    {19, 2, {2, 18, 1, 0}}, // x^2 - x + 2
    {19, 3, {17, 4, 0, 1}}, // x^3 + 4x - 2
    {23, 2, {5, 21, 1, 0}}, // x^2 - 2x + 5
    {29, 2, {2, 24, 1, 0}}, // x^2 - 5x + 2
};

// multiply two coefficient vectors and reduce by the monic defining poly
void poly_mul_mod(const std::vector<i64>& a, const std::vector<i64>& b, std::vector<i64>& out,
                  const FieldSpec& s) {
    const int k = s.k;
    i64 tmp[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) tmp[i + j] = (tmp[i + j] + a[i] * b[j]) % s.p;
    for (int d = 2 * k - 2; d >= k; --d) {
        i64 c = tmp[d];
        if (c == 0) continue;
        tmp[d] = 0;
        // x^k = -(poly without leading term)
        for (int i = 0; i < k; ++i) tmp[d - k + i] = reduce(tmp[d - k + i] - c * s.poly[i], s.p);
    }
    out.assign(tmp, tmp + k);
}

} // namespace

Field Field::build(i64 p, int k, std::optional<std::vector<i64>> poly) {
    if (p == 2)
        throw family_error("Field: characteristic 2 has no 3-term arithmetic progressions");
    if (p < 3 || !is_prime(p)) throw family_error("Field: p must be an odd prime");
    if (k < 1 || k > 3) throw std::invalid_argument("Field: k must be 1, 2 or 3");
    i64 q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > kFieldLimit) throw std::out_of_range("Field: p^k exceeds 10^5");

    Field f;
    f.spec_.p = p;
    f.spec_.k = k;
    f.spec_.q = q;
    if (poly) {
        if (i64(poly->size()) != k + 1 || (*poly)[k] % p != 1)
            throw family_error("Field: defining polynomial must be monic of degree k");
        f.spec_.poly.assign(poly->begin(), poly->end());
        for (auto& c : f.spec_.poly) c = reduce(c, p);
    } else if (k == 1) {
        // x - g with g the least primitive root
        Modulus m(p);
        i64 g = 1;
        while (order_mod(++g, m) != p - 1) {}
        f.spec_.poly = {reduce(-g, p), 1};
    } else {
        bool found = false;
        for (const auto& d : kDefaultPolys) {
            if (d.p == p && d.k == k) {
                f.spec_.poly.assign(d.coeffs.begin(), d.coeffs.begin() + k + 1);
                for (auto& c : f.spec_.poly) c = reduce(c, p);
                found = true;
                break;
            }
        }
        if (!found)
            throw family_error("Field: no embedded polynomial for GF(" + std::to_string(p) + "^" +
                               std::to_string(k) + "); pass one explicitly");
    }

    // irreducibility: degree <= 3 is reducible iff it has a root
    if (k >= 2) {
        for (i64 r = 0; r < p; ++r) {
            i64 v = 0, rp = 1;
            for (int i = 0; i <= k; ++i) {
                v = (v + f.spec_.poly[i] * rp) % p;
                rp = rp * r % p;
            }
            if (v == 0)
                throw family_error("Field: polynomial is reducible (root " + std::to_string(r) +
                                   " mod p)");
        }
    }

    for (int c = 0; c < 3; ++c) f.comp_[c].assign(q, 0);
    for (i64 e = 0; e < q; ++e) {
        f.comp_[0][e] = u32(e % p);
        f.comp_[1][e] = u32(e / p % p);
        f.comp_[2][e] = u32(e / (p * p) % p);
    }

    // zeta = class of x (k >= 2) or the root g of x - g (k = 1)
    std::vector<i64> zeta(k, 0);
    if (k == 1)
        zeta[0] = reduce(-f.spec_.poly[0], p);
    else
        zeta[1] = 1;

    f.pow_.assign(q - 1, 0);
    f.log_.assign(q, 0);
    std::vector<i64> acc(k, 0);
    acc[0] = 1;
    auto encode = [&](const std::vector<i64>& v) {
        i64 e = 0, mult = 1;
        for (int i = 0; i < k; ++i) {
            e += v[i] * mult;
            mult *= p;
        }
        return u32(e);
    };
    std::vector<i64> next(k);
    for (i64 e = 0; e < q - 1; ++e) {
        u32 enc = encode(acc);
        if (enc == 1 && e > 0)
            throw family_error("Field: polynomial is not primitive (zeta^" + std::to_string(e) +
                               " = 1)");
        f.pow_[e] = enc;
        f.log_[enc] = u32(e);
        poly_mul_mod(acc, zeta, next, f.spec_);
        acc.swap(next);
    }
    if (encode(acc) != 1) throw invariant_error("Field: zeta^(q-1) != 1");

    f.ord_.assign(q, 0);
    for (i64 e = 0; e < q - 1; ++e) f.ord_[f.pow_[e]] = u32((q - 1) / std::gcd(q - 1, e));
    return f;
}

u32 Field::add(u32 a, u32 b) const {
    const i64 p = spec_.p;
    u32 out = 0;
    u32 mult = 1;
    for (int i = 0; i < spec_.k; ++i) {
        u32 c = comp_[i][a] + comp_[i][b];
        if (c >= p) c -= u32(p);
        out += c * mult;
        mult *= u32(p);
    }
    return out;
}

u32 Field::neg(u32 a) const {
    const i64 p = spec_.p;
    u32 out = 0;
    u32 mult = 1;
    for (int i = 0; i < spec_.k; ++i) {
        u32 c = comp_[i][a] == 0 ? 0 : u32(p) - comp_[i][a];
        out += c * mult;
        mult *= u32(p);
    }
    return out;
}

u32 Field::sub(u32 a, u32 b) const { return add(a, neg(b)); }

u32 Field::mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    return pow_[(i64(log_[a]) + log_[b]) % (spec_.q - 1)];
}

i64 Field::log(u32 a) const {
    if (a == 0) throw std::invalid_argument("Field::log: zero element");
    return log_[a];
}

u32 Field::zeta_pow(i64 e) const { return pow_[reduce(e, spec_.q - 1)]; }

u32 Field::frobenius(u32 a) const {
    if (a == 0) return 0;
    return pow_[mul_mod(log_[a], spec_.p, spec_.q - 1)];
}

std::vector<FieldDecomposition> find_3ap_field(const Field& f) {
    const i64 q = f.q();
    std::vector<FieldDecomposition> out;
    for (u32 d = 1; d < q; ++d) {
        u32 nd = f.neg(d);
        if (nd < d) continue; // one orientation per {d, -d}
        for (u32 x = 1; x < q; ++x) {
            u32 y = f.add(x, d);
            if (y == 0) continue;
            u32 z = f.add(y, d);
            if (z == 0) continue;
            i64 a = f.order(x), b = f.order(y), c = f.order(z);
            if (a == 1 || b == 1 || c == 1) continue; // trivial factor
            if (a * b * c != q - 1) continue;
            if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
            FieldDecomposition fd;
            fd.elems = {x, y, z};
            fd.logs = {f.log(x), f.log(y), f.log(z)};
            fd.orders = {a, b, c};
            out.push_back(fd);
        }
    }
    return out;
}

bool prime_subfield_check(const Field& f) {
    const i64 q = f.q();
    if (q % 36 != 7 && q % 36 != 31) return true; // family empty
    const i64 m6 = (q - 1) / 6;
    if (std::gcd(m6, i64(6)) != 1) return true;
    for (const auto& d : find_3ap_field(f)) {
        auto o = d.orders;
        std::sort(o.begin(), o.end());
        if (o != std::array<i64, 3>{2, 3, m6}) continue;
        for (u32 e : d.elems)
            if (!f.in_prime_subfield(e)) return false;
    }
    return true;
}

} // namespace apd
