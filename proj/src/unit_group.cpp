#include "apdecomp/unit_group.hpp"

#include <algorithm>
#include <numeric>

namespace apd {

namespace {

// Reusable seen-set over residues [0, n) with O(1) clear via epoch stamps.
struct StampBuffer {
    std::vector<u32> stamp;
    u32 epoch = 0;

    void begin(i64 n) {
        if ((i64)stamp.size() < n) stamp.assign(n, 0);
        if (++epoch == 0) { // stamp wrap-around
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
    }
    // true if x was fresh
    bool mark(i64 x) {
        if (stamp[x] == epoch) return false;
        stamp[x] = epoch;
        return true;
    }
};

thread_local StampBuffer tl_seen;

} // namespace

std::vector<i64> units(const Modulus& m) {
    const i64 n = m.n();
    std::vector<i64> out;
    out.reserve(m.phi());
    std::vector<char> unit(n, 1);
    for (const auto& [p, e] : m.factorization())
        for (i64 j = 0; j < n; j += p) unit[j] = 0;
    for (i64 x = 1; x < n; ++x)
        if (unit[x]) out.push_back(x);
    return out;
}

GroupStructure group_structure(const Modulus& m) {
    GroupStructure gs;
    for (const auto& [p, e] : m.factorization()) {
        std::vector<i64> cyc;
        if (p == 2) {
            if (e == 2) cyc = {2};
            if (e >= 3) cyc = {2, i64(1) << (e - 2)};
            // U_2 is trivial, contributes nothing
        } else {
            i64 v = p - 1;
            for (int i = 1; i < e; ++i) v *= p;
            cyc = {v};
        }
        if (!cyc.empty()) gs.components.emplace_back(p, cyc);
    }

    // invariant factors from elementary divisors: bucket prime powers of the
    // component orders, largest first, then recombine column-wise
    std::vector<std::pair<i64, std::vector<i64>>> buckets; // prime -> powers desc
    for (const auto& [p, cyc] : gs.components) {
        for (i64 c : cyc) {
            for (const auto& [q, e] : factorize(c)) {
                i64 qe = 1;
                for (int i = 0; i < e; ++i) qe *= q;
                auto it = std::find_if(buckets.begin(), buckets.end(),
                                       [&](const auto& b) { return b.first == q; });
                if (it == buckets.end()) {
                    buckets.push_back({q, {qe}});
                } else {
                    it->second.push_back(qe);
                }
            }
        }
    }
    size_t r = 0;
    for (auto& [q, powers] : buckets) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        r = std::max(r, powers.size());
    }
    std::vector<i64> inv(r, 1);
    for (const auto& [q, powers] : buckets)
        for (size_t i = 0; i < powers.size(); ++i) inv[i] *= powers[i];
    std::reverse(inv.begin(), inv.end()); // ascending: d_1 | ... | d_r
    gs.invariant_factors = std::move(inv);
    gs.min_cyclic_factors = int(r);

    if (!gs.invariant_factors.empty() && gs.invariant_factors.back() != m.lambda())
        throw invariant_error("group_structure: largest invariant factor != lambda");
    return gs;
}

namespace detail {

bool direct_product_check(i64 n, i64 phi, std::span<const i64> gens, std::span<const i64> orders) {
    if (gens.size() != orders.size() || gens.size() > 8)
        throw std::invalid_argument("direct_product_check: bad factor list");
    i64 prod = 1;
    for (i64 o : orders) {
        prod *= o;
        if (prod > phi) return false;
    }
    if (prod != phi) return false;

    // enumerate the full exponent box with an odometer; every product must be
    // fresh. g^a = 1 makes the digit wrap a no-op, so one multiplication per
    // step suffices.
    std::vector<i64> g, a;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (orders[i] > 1) {
            g.push_back(reduce(gens[i], n));
            a.push_back(orders[i]);
        }
    }
    auto& seen = tl_seen;
    seen.begin(n);
    i64 cur = 1;
    if (!seen.mark(cur)) return false;
    std::vector<i64> digit(g.size(), 0);
    for (i64 cnt = 1; cnt < prod; ++cnt) {
        size_t i = 0;
        while (true) {
            cur = mul_mod(cur, g[i], n);
            if (++digit[i] < a[i]) break;
            digit[i] = 0; // cur has absorbed g^a = 1
            ++i;
        }
        if (!seen.mark(cur)) return false;
    }
    return true;
}

} // namespace detail

bool is_direct_product(const Modulus& m, std::span<const CyclicFactor> factors) {
    std::vector<i64> gens, orders;
    gens.reserve(factors.size());
    orders.reserve(factors.size());
    for (const auto& f : factors) {
        i64 g = reduce(f.generator, m.n());
        if (std::gcd(g, m.n()) != 1) return false;
        gens.push_back(g);
        orders.push_back(f.order);
    }
    return detail::direct_product_check(m.n(), m.phi(), gens, orders);
}

i64 subgroup_order(const Modulus& m, std::span<const i64> gens) {
    const i64 n = m.n();
    auto& seen = tl_seen;
    seen.begin(n);
    std::vector<i64> frontier{1};
    seen.mark(1);
    i64 count = 1;
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 x : frontier) {
            for (i64 g : gens) {
                i64 y = mul_mod(x, reduce(g, n), n);
                if (seen.mark(y)) {
                    ++count;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return count;
}

OrderTable::OrderTable(const Modulus& m) : n_(m.n()), phi_(m.phi()) {
    ord_.assign(3 * n_, 0);
    if (m.is_prime()) {
        // primitive-root sweep: ord(g^i) = (n-1)/gcd(n-1, i)
        const i64 n = n_, lam = n - 1;
        i64 g = 2;
        while (order_mod(g, m) != lam) ++g;
        i64 acc = 1;
        for (i64 i = 0; i < lam; ++i) {
            ord_[acc] = u32(lam / std::gcd(lam, i));
            acc = mul_mod(acc, g, n);
        }
    } else {
        std::vector<char> unit(n_, 1);
        for (const auto& [p, e] : m.factorization())
            for (i64 j = 0; j < n_; j += p) unit[j] = 0;
        for (i64 x = 1; x < n_; ++x)
            if (unit[x]) ord_[x] = u32(order_mod(x, m));
    }
    std::copy(ord_.begin(), ord_.begin() + n_, ord_.begin() + n_);
    std::copy(ord_.begin(), ord_.begin() + n_, ord_.begin() + 2 * n_);
}

} // namespace apd
