#include "apdecomp/lifting.hpp"

#include <algorithm>
#include <numeric>

namespace apd {

namespace {

constexpr i64 kLiftRange = 4'000'000;

int exponent_of(const Factorization& f, i64 p) {
    for (const auto& [q, e] : f)
        if (q == p) return e;
    return 0;
}

// AP completion: values u at position pu and v at position pv determine the
// third position of a 3-term AP mod n. Even n can admit two completions for
// the middle slot (or none).
std::vector<i64> complete_ap(i64 n, int pu, i64 u, int pv, i64 v) {
    if (pu > pv) {
        std::swap(pu, pv);
        std::swap(u, v);
    }
    if (pu == 0 && pv == 1) return {reduce(2 * v - u, n)};
    if (pu == 1 && pv == 2) return {reduce(2 * u - v, n)};
    // middle slot: 2g = u + v
    i64 s = reduce(u + v, n);
    if (n % 2 == 1) return {mul_mod(s, inv_mod(2, n), n)};
    if (s % 2 != 0) return {};
    return {s / 2, reduce(s / 2 + n / 2, n)};
}

struct LiftContext {
    Modulus big; // modulus np
    i64 n, p;

    LiftContext(const ApDecomposition& d, i64 p_)
        : big(d.n * p_), n(d.n), p(p_) {
        if (d.n * p_ > kLiftRange)
            throw std::out_of_range("lift: np exceeds supported range");
    }

    std::optional<ApDecomposition> try_triple(const ApDecomposition& src, i64 g0, i64 g1, i64 g2) {
        i64 gens[3] = {g0, g1, g2};
        i64 diff = reduce(g1 - g0, big.n());
        if (diff == 0 || reduce(g2 - g1, big.n()) != diff) return std::nullopt;
        for (int i = 0; i < 3; ++i) {
            if (gens[i] % n != src.factors[i].generator) return std::nullopt;
            if (std::gcd(gens[i], big.n()) != 1) return std::nullopt;
        }
        return make_decomposition(big, g0, diff, 3);
    }
};

} // namespace

std::vector<ElementLift> lifts_of_element(i64 x, const Modulus& m, i64 p) {
    const i64 n = m.n();
    const i64 np = n * p;
    if (np > kLiftRange) throw std::out_of_range("lifts_of_element: np exceeds supported range");
    x = reduce(x, n);
    if (std::gcd(x, n) != 1)
        throw std::invalid_argument("lifts_of_element: x is not a unit mod n");
    Modulus big(np);
    const i64 src_order = order_mod(x, m);

    std::vector<ElementLift> lifts;
    for (i64 t = 0; t < p; ++t) {
        i64 v = x + n * t;
        if (std::gcd(v, np) != 1) continue; // spurious lift in the coprime case
        lifts.push_back({v, order_mod(v, big), false});
    }
    int preserving = 0;
    for (const auto& l : lifts) preserving += (l.order == src_order);
    if (preserving == 1)
        for (auto& l : lifts)
            if (l.order == src_order) l.special = true;
    return lifts;
}

LiftCase classify_case(const ApDecomposition& d, i64 p) {
    if (!is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("classify_case: p must be an odd prime");
    LiftCase c;
    int e = exponent_of(factorize(d.n), p);
    if (e >= 2)
        c.kind = LiftCaseKind::square_divides;
    else if (e == 1)
        c.kind = LiftCaseKind::exactly_divides;
    else
        c.kind = LiftCaseKind::coprime;
    for (const auto& f : d.factors) c.p_divisible_orders += (f.order % p == 0);
    return c;
}

namespace {

// Special (order-preserving) lift of x from U_n to U_{np} when p | n exactly
// and p does not divide ord_n(x): congruent to (x mod p^2)^p on the p^2
// component and to x on the rest. Raising to the p-th power projects onto
// the prime-to-p part of U_{p^2} while fixing the residue mod p.
i64 special_lift_value(i64 x, i64 n, i64 p) {
    i64 p2 = p * p, m = n / p;
    i64 a = pow_mod(x % p2, p, p2);
    if (m == 1) return a;
    std::pair<i64, i64> cong[2] = {{a, p2}, {x % m, m}};
    return crt_combine(cong);
}

} // namespace

bool is_productive(const ApDecomposition& d, i64 p) {
    auto c = classify_case(d, p);
    if (c.kind != LiftCaseKind::exactly_divides || c.p_divisible_orders != 0)
        throw family_error("is_productive: defined only when p | n exactly and no order is "
                           "divisible by p");
    const i64 np = d.n * p;
    i64 s[3];
    for (int i = 0; i < 3; ++i) s[i] = special_lift_value(d.factors[i].generator, d.n, p);
    return reduce(s[1] - s[0], np) != reduce(s[2] - s[1], np);
}

LiftReport lift_decompositions(const ApDecomposition& d, i64 p) {
    if (d.factors.size() != 3)
        throw std::invalid_argument("lift_decompositions: 3-factor decompositions only");
    LiftReport rep;
    rep.source = d;
    rep.p = p;
    rep.np = d.n * p;
    rep.lift_case = classify_case(d, p);
    LiftContext ctx(d, p);
    Modulus m(d.n);

    std::array<std::vector<ElementLift>, 3> lifts;
    for (int i = 0; i < 3; ++i) {
        lifts[i] = lifts_of_element(d.factors[i].generator, m, p);
        for (const auto& l : lifts[i])
            if (l.special) rep.special_lifts[i] = l.value;
    }

    auto push_candidates = [&](int pu, const std::vector<i64>& us, int pv,
                               const std::vector<i64>& vs) {
        int pt = 3 - pu - pv;
        for (i64 u : us) {
            for (i64 v : vs) {
                for (i64 w : complete_ap(ctx.big.n(), pu, u, pv, v)) {
                    i64 g[3];
                    g[pu] = u;
                    g[pv] = v;
                    g[pt] = w;
                    if (auto dec = ctx.try_triple(d, g[0], g[1], g[2]))
                        if (std::find(rep.results.begin(), rep.results.end(), *dec) ==
                            rep.results.end())
                            rep.results.push_back(std::move(*dec));
                }
            }
        }
    };
    auto order_preserving = [&](int i) {
        std::vector<i64> vs;
        for (const auto& l : lifts[i])
            if (l.order == d.factors[i].order) vs.push_back(l.value);
        return vs;
    };
    auto order_multiplying = [&](int i) {
        std::vector<i64> vs;
        for (const auto& l : lifts[i])
            if (l.order != d.factors[i].order) vs.push_back(l.value);
        return vs;
    };
    auto all_values = [&](int i) {
        std::vector<i64> vs;
        for (const auto& l : lifts[i]) vs.push_back(l.value);
        return vs;
    };

    switch (rep.lift_case.kind) {
    case LiftCaseKind::square_divides: {
        // one factor must absorb the extra p; the other two lift with their
        // orders preserved and the AP pins the third value
        for (int t = 0; t < 3; ++t) {
            int i = (t + 1) % 3, j = (t + 2) % 3;
            push_candidates(i, order_preserving(i), j, order_preserving(j));
        }
        break;
    }
    case LiftCaseKind::exactly_divides: {
        int divisible = rep.lift_case.p_divisible_orders;
        if (divisible == 0) {
            rep.productive = is_productive(d, p);
            if (*rep.productive) {
                for (int t = 0; t < 3; ++t) {
                    int i = (t + 1) % 3, j = (t + 2) % 3;
                    std::vector<i64> si{*rep.special_lifts[i]}, sj{*rep.special_lifts[j]};
                    push_candidates(i, si, j, sj);
                }
            }
        } else if (divisible == 1) {
            int pd = 0;
            while (d.factors[pd].order % p != 0) ++pd;
            int y = (pd + 1) % 3, z = (pd + 2) % 3;
            push_candidates(y, {*rep.special_lifts[y]}, z, order_multiplying(z));
            push_candidates(z, {*rep.special_lifts[z]}, y, order_multiplying(y));
        } else if (divisible == 2) {
            int pz = 0;
            while (d.factors[pz].order % p == 0) ++pz;
            int pd = (pz + 1) % 3;
            push_candidates(pz, order_multiplying(pz), pd, all_values(pd));
        }
        // three p-divisible orders would force three prime divisors of n
        // congruent to 1 mod p, hence at least four cyclic factors: no valid
        // source reaches here, and there is nothing to lift
        break;
    }
    case LiftCaseKind::coprime: {
        std::array<i64, 3> spurious{};
        for (int i = 0; i < 3; ++i) {
            i64 g = d.factors[i].generator;
            std::pair<i64, i64> cong[2] = {{g, d.n}, {0, p}};
            spurious[i] = crt_combine(cong);
        }
        if (reduce(spurious[1] - spurious[0], rep.np) != reduce(spurious[2] - spurious[1], rep.np))
            throw invariant_error("lift_decompositions: spurious lifts are not in AP");
        rep.spurious_lifts = spurious;
        push_candidates(0, all_values(0), 1, all_values(1));
        break;
    }
    }

    std::sort(rep.results.begin(), rep.results.end(), [](const auto& a, const auto& b) {
        return std::tie(a.diff, a.first) < std::tie(b.diff, b.first);
    });
    return rep;
}

ApDecomposition lift_to_prime_power(const ApDecomposition& d, int alpha) {
    if (alpha < 2) throw std::invalid_argument("lift_to_prime_power: alpha must be >= 2");
    if (!is_prime(d.n)) throw family_error("lift_to_prime_power: base modulus must be prime");
    const i64 p = d.n;
    if (!is_productive(d, p))
        throw family_error("lift_to_prime_power: decomposition is unproductive");

    ApDecomposition cur = d;
    for (int a = 2; a <= alpha; ++a) {
        auto rep = lift_decompositions(cur, p);
        // keep the inductive shape: two orders preserved, one multiplied by p
        auto it = std::find_if(rep.results.begin(), rep.results.end(),
                               [](const ApDecomposition& r) { return !r.weak; });
        if (it == rep.results.end())
            throw invariant_error("lift_to_prime_power: no strong lift at step " +
                                  std::to_string(a));
        cur = *it;
    }
    return cur;
}

std::vector<Table3Row> table3_report(i64 limit, const SearchOptions& opts) {
    std::vector<std::pair<i64, std::pair<i64, i64>>> targets; // n -> (k, p)
    const auto& primes = prime_sieve();
    for (i64 p : primes) {
        if (p <= 3 || p * p > limit) continue;
        for (i64 k : primes) {
            if (k <= 3 || k == p) continue;
            i64 n = k * p * p;
            if (n > limit) break;
            targets.push_back({n, {k, p}});
        }
    }
    std::sort(targets.begin(), targets.end());

    std::vector<Table3Row> rows(targets.size());
    detail::parallel_for(0, i64(targets.size()), opts.threads, [&](i64 idx) {
        auto [n, kp] = targets[idx];
        auto [k, p] = kp;
        Table3Row row;
        row.n = n;
        row.k = k;
        row.p = p;
        Modulus m(n), base(k * p);

        for (const auto& d : find_3ap(m, false)) {
            ++row.total;
            // provenance: reduce mod kp and test whether the reduction is
            // itself a decomposition
            i64 gens[3], ords[3];
            int trivial = 0;
            i64 prod = 1;
            bool unit_ok = true;
            for (int i = 0; i < 3; ++i) {
                gens[i] = d.factors[i].generator % base.n();
                if (std::gcd(gens[i], base.n()) != 1) {
                    unit_ok = false;
                    break;
                }
                ords[i] = order_mod(gens[i], base);
                trivial += ords[i] == 1;
                prod *= ords[i];
            }
            if (!unit_ok || trivial > 1 || prod != base.phi() ||
                !detail::direct_product_check(base.n(), base.phi(), gens, ords)) {
                ++row.other;
            } else if (trivial == 1) {
                ++row.from_weak;
            } else {
                ++row.from_strong;
            }
        }

        // asterisk condition: sources of the given strength exist but every
        // one of them is unproductive for index p
        auto check_star = [&](bool weak_sources) {
            bool any = false, all_unproductive = true;
            for (const auto& s : find_3ap(base, true)) {
                if (s.weak != weak_sources) continue;
                any = true;
                auto c = classify_case(s, p);
                if (c.kind == LiftCaseKind::exactly_divides && c.p_divisible_orders == 0 &&
                    !is_productive(s, p))
                    continue;
                all_unproductive = false;
            }
            return any && all_unproductive;
        };
        if (row.from_strong == 0) row.star_strong = check_star(false);
        if (row.from_weak == 0) row.star_weak = check_star(true);
        rows[idx] = row;
    });
    return rows;
}

std::vector<UnproductiveHit> unproductive_prime_scan(i64 limit, const SearchOptions& opts) {
    std::vector<i64> primes;
    for (i64 p : prime_sieve())
        if (p >= 3 && p < limit) primes.push_back(p);

    std::vector<std::vector<UnproductiveHit>> slots(primes.size());
    detail::parallel_for(0, i64(primes.size()), opts.threads, [&](i64 i) {
        const i64 n = primes[i];
        Modulus m(n);
        for (const auto& d : find_3ap(m, true)) {
            if (is_productive(d, n)) continue;
            UnproductiveHit hit;
            hit.n = n;
            hit.dec = d;
            for (int t = 0; t < 3; ++t)
                hit.special_lifts[t] = special_lift_value(d.factors[t].generator, n, n);
            slots[i].push_back(std::move(hit));
        }
    });
    std::vector<UnproductiveHit> out;
    for (auto& v : slots)
        for (auto& h : v) out.push_back(std::move(h));
    return out;
}

} // namespace apd
