#include "apdecomp/theorems.hpp"

#include <algorithm>
#include <numeric>

namespace apd {

namespace {

bool in_class(i64 n, i64 mod, std::initializer_list<i64> residues) {
    for (i64 r : residues)
        if (n % mod == r) return true;
    return false;
}

ApDecomposition must_make(const Modulus& m, i64 first, i64 diff, const char* who) {
    auto d = make_decomposition(m, first, diff, 3);
    if (!d) throw invariant_error(std::string(who) + ": constructed triple is not a decomposition");
    return *d;
}

std::vector<i64> primes_below(i64 limit) {
    std::vector<i64> out;
    if (limit <= 2) return out;
    std::vector<char> composite(limit, 0);
    for (i64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (i64 j = i * i; j < limit; j += i) composite[j] = 1;
    }
    return out;
}

} // namespace

QuadraticRoots quadratic_roots(const Modulus& m) {
    const i64 n = m.n();
    if (!m.is_prime() || !in_class(n, 36, {7, 31}))
        throw family_error("quadratic_roots: n must be a prime = 7, 31 (mod 36)");
    auto roots = sqrt_mod_prime(n - 3, n); // discriminant -3
    if (!roots) throw invariant_error("quadratic_roots: -3 is not a square");
    i64 inv2 = inv_mod(2, n);
    i64 r1 = mul_mod(reduce(-3 + roots->first, n), inv2, n);
    i64 r2 = mul_mod(reduce(-3 - roots->first, n), inv2, n);
    QuadraticRoots q;
    i64 o1 = order_mod(r1, m), o2 = order_mod(r2, m);
    if (o1 % 2 == 1 && o2 % 2 == 0) {
        q.x1 = r1;
        q.x2 = r2;
        q.ord_x1 = o1;
        q.ord_x2 = o2;
    } else if (o2 % 2 == 1 && o1 % 2 == 0) {
        q.x1 = r2;
        q.x2 = r1;
        q.ord_x1 = o2;
        q.ord_x2 = o1;
    } else {
        throw invariant_error("quadratic_roots: roots do not split by order parity");
    }
    q.y1 = (q.x1 + 1) % n;
    q.y2 = (q.x2 + 1) % n;
    if (mul_mod(q.x1, q.x2, n) != 3 || reduce(q.x1 + q.x2 + 3, n) != 0)
        throw invariant_error("quadratic_roots: Vieta check failed");
    return q;
}

TheoremOutcome order23m_involution_middle(const Modulus& m) {
    const i64 n = m.n();
    if (n <= 7 || !m.is_prime() || !in_class(n, 36, {7, 31}))
        throw family_error("order23m: n must be a prime = 7, 31 (mod 36), n > 7");
    auto q = quadratic_roots(m);
    TheoremOutcome out;
    const i64 m6 = (n - 1) / 6;
    if (q.ord_x1 != m6) {
        out.applicability = Applicability::hypothesis_failed;
        out.note = "ord(x1) = " + std::to_string(q.ord_x1) + ", needs " + std::to_string(m6);
        return out;
    }
    out.applicability = Applicability::applies;
    // (x2+1, -1, x1) is an AP with common difference x1+1, since x1+x2 = -3
    out.witness = must_make(m, q.y2, q.y1, "order23m_involution_middle");
    return out;
}

TheoremOutcome order23m_cube_middle(const Modulus& m) {
    const i64 n = m.n();
    if (n <= 7 || !m.is_prime() || !in_class(n, 36, {7, 31}))
        throw family_error("order23m: n must be a prime = 7, 31 (mod 36), n > 7");
    auto q = quadratic_roots(m);
    TheoremOutcome out;
    if (q.ord_x1 != (n - 1) / 2 || q.ord_x2 != n - 1) {
        out.applicability = Applicability::hypothesis_failed;
        out.note = "ord(x1) = " + std::to_string(q.ord_x1) + ", ord(x2) = " +
                   std::to_string(q.ord_x2);
        return out;
    }
    i64 first = reduce(2 * q.x2 + 3, n);
    out.applicability = Applicability::applies;
    out.witness = must_make(m, first, reduce(q.y2 - first, n), "order23m_cube_middle");
    return out;
}

std::vector<TheoremOutcome> order23m_residual_middle(const Modulus& m) {
    const i64 n = m.n();
    if (!m.is_prime() || !in_class(n, 36, {7, 31}))
        throw family_error("order23m: n must be a prime = 7, 31 (mod 36)");
    auto q = quadratic_roots(m);
    const i64 m6 = (n - 1) / 6;
    const i64 inv2 = inv_mod(2, n);
    std::vector<TheoremOutcome> out;
    int idx = 0;
    for (i64 z : {q.x1, q.x2}) {
        ++idx;
        i64 h = mul_mod(z, inv2, n);
        if (order_mod(h, m) != m6) continue;
        TheoremOutcome o;
        o.applicability = Applicability::applies;
        o.aux = idx; // which root served as z
        i64 first = (z + 1) % n;
        o.note = idx == 1 ? "z = x1" : "z = x2";
        o.witness = must_make(m, first, reduce(h - first, n), "order23m_residual_middle");
        out.push_back(std::move(o));
    }
    return out;
}

Pattern236 classify_order23m(const Modulus& m, const ApDecomposition& d) {
    const i64 n = m.n();
    if (!m.is_prime() || (n - 1) % 6 != 0)
        throw std::invalid_argument("classify_order23m: modulus out of scope");
    const i64 m6 = (n - 1) / 6;
    if (d.order_multiset() != std::vector<i64>{2, 3, m6})
        throw std::invalid_argument("classify_order23m: order multiset is not {2,3,(n-1)/6}");
    auto q = quadratic_roots(m);

    i64 mid = d.factors[1].order;
    i64 residual = 0;
    for (const auto& f : d.factors)
        if (f.order == m6) residual = f.generator;

    if (mid == 2) {
        if (residual != q.x1 || q.ord_x1 != m6)
            throw invariant_error("classify_order23m: involution-middle witness mismatch");
        return Pattern236::involution_middle;
    }
    if (mid == 3) {
        if (residual != reduce(2 * q.x2 + 3, n) || q.ord_x1 != (n - 1) / 2 || q.ord_x2 != n - 1)
            throw invariant_error("classify_order23m: cube-middle witness mismatch");
        return Pattern236::cube_middle;
    }
    if (mid == m6) {
        i64 doubled = reduce(2 * residual, n);
        if (doubled != q.x1 && doubled != q.x2)
            throw invariant_error("classify_order23m: residual-middle witness mismatch");
        return Pattern236::residual_middle;
    }
    throw invariant_error("classify_order23m: no construction matches");
}

namespace {

std::vector<TheoremOutcome> order34m_witnesses(const Modulus& m, bool ascending) {
    const i64 n = m.n();
    if (n <= 13 || !m.is_prime() || !in_class(n, 144, {13, 61, 85, 133}))
        throw family_error("order34m: n must be a prime = 13, 61, 85, 133 (mod 144), n > 13");
    const i64 mu = (n - 1) / 12;
    auto rt = sqrt_mod_prime(n - 3, n);
    if (!rt) throw invariant_error("order34m: -3 is not a square");
    auto im = sqrt_mod_prime(n - 1, n);
    if (!im) throw invariant_error("order34m: -1 is not a square");
    const i64 inv2 = inv_mod(2, n);

    std::vector<TheoremOutcome> out;
    for (i64 sq : {rt->first, rt->second}) {
        i64 x = mul_mod(reduce(-3 + sq, n), inv2, n); // root of x^2+3x+3
        i64 y = (x + 1) % n;
        for (i64 w : {im->first, im->second}) { // w = x+1+k has order 4
            i64 k = reduce(w - y, n);
            TheoremOutcome o;
            o.aux = order_mod(x, m);
            if (ascending) {
                i64 third = reduce(2 * w - y, n); // x+1+2k
                if (order_mod(third, m) != mu) continue;
                o.witness = must_make(m, y, k, "order34m_ascending");
            } else {
                i64 lead = reduce(2 * y - w, n); // x+1-k
                if (order_mod(lead, m) != mu) continue;
                o.witness = must_make(m, lead, k, "order34m_centered");
            }
            o.applicability = Applicability::applies;
            out.push_back(std::move(o));
        }
    }
    return out;
}

} // namespace

std::vector<TheoremOutcome> order34m_ascending(const Modulus& m) {
    return order34m_witnesses(m, true);
}

std::vector<TheoremOutcome> order34m_centered(const Modulus& m) {
    return order34m_witnesses(m, false);
}

std::vector<TheoremOutcome> order25n_witnesses(const Modulus& m, char variant) {
    const i64 n = m.n();
    if (n <= 11 || !m.is_prime() || !in_class(n, 100, {11, 31, 71, 91}))
        throw family_error("order25n: n must be a prime = 11, 31, 71, 91 (mod 100), n > 11");
    if (variant != 'a' && variant != 'b' && variant != 'c')
        throw std::invalid_argument("order25n: variant must be a, b or c");
    const i64 nu = (n - 1) / 10;
    const i64 inv2 = inv_mod(2, n);

    // the four order-5 elements
    i64 t = 0;
    for (i64 g = 2; g < n; ++g) {
        t = pow_mod(g, (n - 1) / 5, n);
        if (t != 1) break;
    }
    std::vector<i64> five{t};
    for (int i = 0; i < 3; ++i) five.push_back(mul_mod(five.back(), t, n));
    std::sort(five.begin(), five.end());

    std::vector<TheoremOutcome> out;
    for (i64 z5 : five) {
        TheoremOutcome o;
        o.aux = z5;
        if (variant == 'a') {
            i64 z = reduce(-z5 - 2, n);
            if (order_mod(z, m) != nu) continue;
            o.witness = must_make(m, z5, reduce(-1 - z5, n), "order25n_a");
        } else if (variant == 'b') {
            i64 g = reduce(2 * z5 + 1, n);
            if (order_mod(g, m) != nu) continue;
            o.witness = must_make(m, g, reduce(z5 - g, n), "order25n_b");
        } else {
            i64 z = mul_mod(reduce(z5 - 1, n), inv2, n);
            if (order_mod(z, m) != nu) continue;
            o.witness = must_make(m, z5, reduce(z - z5, n), "order25n_c");
        }
        o.applicability = Applicability::applies;
        out.push_back(std::move(o));
    }
    return out;
}

bool no_3ap_for_three_p(i64 p) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("no_3ap_for_three_p: p must be a prime > 3");
    Modulus m(3 * p);
    return find_3ap(m, true).empty();
}

bool no_3ap_with_third_diff(i64 n) {
    if (n % 3 != 0 || n < 9) throw std::invalid_argument("no_3ap_with_third_diff: n must be 3m");
    Modulus m(n);
    const i64 step = n / 3;
    for (i64 x = 1; x < n; ++x)
        if (make_decomposition(m, x, step, 3)) return false;
    return true;
}

TheoremOutcome pq_neg3_witness(i64 p, i64 q) {
    if (p <= 3 || q <= 3 || p == q || !is_prime(p) || !is_prime(q))
        throw family_error("pq_neg3_witness: p, q must be distinct primes > 3");
    if (p % 4 != 3) throw family_error("pq_neg3_witness: p must be 3 (mod 4)");

    TheoremOutcome out;
    Modulus mp(p), mq(q);
    i64 op = order_mod(reduce(-3, p), mp);
    i64 oq = order_mod(reduce(-3, q), mq);
    if (op != (p - 1) / 2 || oq != q - 1) {
        out.applicability = Applicability::hypothesis_failed;
        out.note = "ord_p(-3) = " + std::to_string(op) + ", ord_q(-3) = " + std::to_string(oq);
        return out;
    }
    const i64 n = p * q;
    Modulus m(n);
    std::pair<i64, i64> cong[2] = {{1, p}, {reduce(-3, q), q}};
    i64 x = crt_combine(cong);
    out.applicability = Applicability::applies;
    out.witness = must_make(m, reduce(-x - 2, n), reduce(x + 1, n), "pq_neg3_witness");
    // lift check: the witness reduces mod p to (-3, -1, 1)
    auto g = out.witness->generators();
    if (g[0] % p != reduce(-3, p) || g[1] % p != p - 1 || g[2] % p != 1)
        throw invariant_error("pq_neg3_witness: not a lift of the U_p base");
    if (out.witness->orders() != std::vector<i64>{(p - 1) / 2, 2, q - 1})
        throw invariant_error("pq_neg3_witness: unexpected factor orders");
    return out;
}

std::vector<RootPair> pq_root_pairs(const Modulus& m) {
    const auto& f = m.factorization();
    if (f.size() != 2 || f[0].exp != 1 || f[1].exp != 1)
        throw family_error("pq_root_pairs: n must be a product of two distinct primes");
    const i64 p = f[0].prime, q = f[1].prime, n = m.n();
    if (p % 6 != 1 || q % 6 != 1 || std::gcd(p - 1, q - 1) != 6)
        throw family_error("pq_root_pairs: need p = q = 1 (mod 6) with gcd(p-1, q-1) = 6");
    const i64 m6 = m.phi() / 6;

    auto component_roots = [](i64 pr) {
        auto rt = sqrt_mod_prime(pr - 3, pr);
        if (!rt) throw invariant_error("pq_root_pairs: -3 not a square mod component");
        i64 inv2 = inv_mod(2, pr);
        return std::pair{mul_mod(reduce(-3 + rt->first, pr), inv2, pr),
                         mul_mod(reduce(-3 - rt->first, pr), inv2, pr)};
    };
    auto [a1, a2] = component_roots(p);
    auto [b1, b2] = component_roots(q);

    auto witness_for = [&](i64 x) -> std::optional<ApDecomposition> {
        i64 first = reduce(2 * x + 3, n);
        auto d = make_decomposition(m, first, reduce(x + 1 - first, n), 3);
        if (!d) return std::nullopt;
        if (d->orders() != std::vector<i64>{m6, 3, 2}) return std::nullopt;
        return d;
    };

    std::vector<RootPair> out;
    std::vector<i64> seen;
    for (i64 ra : {a1, a2}) {
        for (i64 rb : {b1, b2}) {
            std::pair<i64, i64> cong[2] = {{ra, p}, {rb, q}};
            i64 x = crt_combine(cong);
            i64 mate = reduce(-x - 3, n);
            if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
            seen.push_back(x);
            seen.push_back(mate);
            auto w = witness_for(x), wm = witness_for(mate);
            if (w.has_value() != wm.has_value())
                throw invariant_error("pq_root_pairs: negated mate validity differs");
            if (!w) continue;
            if (x > mate) {
                std::swap(x, mate);
                std::swap(w, wm);
            }
            out.push_back({x, mate, std::move(*w), std::move(*wm)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.x < r.x; });
    return out;
}

std::vector<ApDecomposition> weak_order_six_family(const Modulus& m) {
    const i64 n = m.n();
    if (!m.is_prime()) throw family_error("weak_order_six_family: n must be prime");
    std::vector<ApDecomposition> out;
    if ((n - 1) % 6 != 0) return out;
    const i64 pp = (n - 1) / 6;
    if (pp <= 3 || !is_prime(pp)) return out;

    for (const auto& d : find_3ap(m, true)) {
        if (!d.weak || d.order_multiset() != std::vector<i64>{1, 6, pp}) continue;
        // with the trivial factor in the middle, <a>_6 x <1>_1 x <c>_p' has
        // a = (c-1)^{-1}
        for (const auto& o : {d, reversed(d)}) {
            if (o.factors[1].order != 1 || o.factors[0].order != 6) continue;
            i64 a = o.factors[0].generator, c = o.factors[2].generator;
            if (mul_mod(a, reduce(c - 1, n), n) != 1)
                throw invariant_error("weak_order_six_family: a != (c-1)^{-1}");
        }
        out.push_back(d);
    }
    return out;
}

WeakLiftType classify_weak_lift(const ApDecomposition& d, i64 q) {
    if (d.n % q != 0 || !is_prime(q))
        throw std::invalid_argument("classify_weak_lift: q must be a prime divisor of n");
    Modulus mq(q);
    int star = -1;
    i64 src_orders[3];
    for (int i = 0; i < 3; ++i) {
        i64 r = d.factors[i].generator % q;
        if (r == 0) throw std::invalid_argument("classify_weak_lift: generator not a unit mod q");
        src_orders[i] = order_mod(r, mq);
        if (r == 1) {
            if (star >= 0) throw std::invalid_argument("classify_weak_lift: two trivial reductions");
            star = i;
        }
    }
    if (star < 0) throw std::invalid_argument("classify_weak_lift: no generator lifted from 1");
    bool has4 = src_orders[0] == 4 || src_orders[1] == 4 || src_orders[2] == 4;
    if (!has4) return WeakLiftType::unclassified;
    if (star == 1) return WeakLiftType::B;
    ApDecomposition o = star == 0 ? d : reversed(d);
    if (o.factors[1].order == 4) return WeakLiftType::A;
    if (o.factors[2].order == 4) return WeakLiftType::C;
    return WeakLiftType::unclassified;
}

Order23mScan scan_order23m(i64 limit, const SearchOptions& opts) {
    Order23mScan s;
    auto primes = primes_below(limit);
    std::vector<i64> cls;
    for (i64 p : primes)
        if (p > 7 && in_class(p, 36, {7, 31})) cls.push_back(p);
    s.class_primes = cls;

    std::vector<std::array<std::vector<TheoremOutcome>, 3>> slots(cls.size());
    detail::parallel_for(0, i64(cls.size()), opts.threads, [&](i64 i) {
        Modulus m(cls[i]);
        auto o1 = order23m_involution_middle(m);
        auto o2 = order23m_cube_middle(m);
        auto o3 = order23m_residual_middle(m);
        if (o1.applicability == Applicability::applies) slots[i][0].push_back(std::move(o1));
        if (o2.applicability == Applicability::applies) slots[i][1].push_back(std::move(o2));
        slots[i][2] = std::move(o3);
    });
    for (size_t i = 0; i < cls.size(); ++i) {
        bool any = false;
        if (!slots[i][0].empty()) s.involution.push_back({cls[i], slots[i][0]}), any = true;
        if (!slots[i][1].empty()) s.cube.push_back({cls[i], slots[i][1]}), any = true;
        if (!slots[i][2].empty()) s.residual.push_back({cls[i], slots[i][2]}), any = true;
        if (!any) s.uncovered.push_back(cls[i]);
    }
    return s;
}

Order34mScan scan_order34m(i64 limit, const SearchOptions& opts) {
    Order34mScan s;
    auto primes = primes_below(limit);
    std::vector<i64> cls;
    for (i64 p : primes)
        if (p > 13 && in_class(p, 144, {13, 61, 85, 133})) cls.push_back(p);
    s.class_primes = cls;

    std::vector<std::array<std::vector<TheoremOutcome>, 2>> slots(cls.size());
    detail::parallel_for(0, i64(cls.size()), opts.threads, [&](i64 i) {
        Modulus m(cls[i]);
        slots[i][0] = order34m_ascending(m);
        slots[i][1] = order34m_centered(m);
    });
    for (size_t i = 0; i < cls.size(); ++i) {
        bool any = false;
        if (!slots[i][0].empty()) s.ascending.push_back({cls[i], slots[i][0]}), any = true;
        if (!slots[i][1].empty()) s.centered.push_back({cls[i], slots[i][1]}), any = true;
        if (!any) s.uncovered.push_back(cls[i]);
    }
    return s;
}

Order25nScan scan_order25n(i64 limit, const SearchOptions& opts) {
    Order25nScan s;
    auto primes = primes_below(limit);
    std::vector<i64> cls;
    for (i64 p : primes)
        if (p > 11 && in_class(p, 100, {11, 31, 71, 91})) cls.push_back(p);
    s.class_primes = cls;

    std::vector<std::array<std::vector<TheoremOutcome>, 3>> slots(cls.size());
    detail::parallel_for(0, i64(cls.size()), opts.threads, [&](i64 i) {
        Modulus m(cls[i]);
        slots[i][0] = order25n_witnesses(m, 'a');
        slots[i][1] = order25n_witnesses(m, 'b');
        slots[i][2] = order25n_witnesses(m, 'c');
    });
    for (size_t i = 0; i < cls.size(); ++i) {
        bool any = false;
        if (!slots[i][0].empty()) s.a.push_back({cls[i], slots[i][0]}), any = true;
        if (!slots[i][1].empty()) s.b.push_back({cls[i], slots[i][1]}), any = true;
        if (!slots[i][2].empty()) s.c.push_back({cls[i], slots[i][2]}), any = true;
        if (!any) s.uncovered.push_back(cls[i]);
    }
    return s;
}

std::vector<PqPairRow> scan_pq_root_pairs(i64 limit) {
    std::vector<PqPairRow> rows;
    auto primes = primes_below(limit);
    for (size_t i = 0; i < primes.size(); ++i) {
        for (size_t j = i + 1; j < primes.size(); ++j) {
            i64 p = primes[i], q = primes[j], n = p * q;
            if (n >= limit) break;
            if (p % 6 != 1 || q % 6 != 1 || std::gcd(p - 1, q - 1) != 6) continue;
            rows.push_back({n, p, q, pq_root_pairs(Modulus(n))});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    return rows;
}

std::vector<PqNeg3Row> scan_pq_neg3(i64 limit) {
    std::vector<PqNeg3Row> rows;
    auto primes = primes_below(limit);
    for (i64 p : primes) {
        if (p <= 3 || p % 4 != 3) continue;
        for (i64 q : primes) {
            if (q <= 3 || q == p || p * q >= limit) continue;
            auto o = pq_neg3_witness(p, q);
            if (o.applicability == Applicability::applies)
                rows.push_back({p * q, p, q, std::move(o)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    return rows;
}

std::vector<WeakSixRow> scan_weak_order_six(i64 limit) {
    std::vector<WeakSixRow> rows;
    for (i64 p : primes_below(limit)) {
        if (p < 43) continue;
        Modulus m(p);
        auto decs = weak_order_six_family(m);
        if (!decs.empty()) rows.push_back({p, std::move(decs)});
    }
    return rows;
}

std::vector<WeakLiftRow> scan_weak_lifts(i64 limit, const SearchOptions& opts) {
    std::vector<WeakLiftRow> rows;
    auto primes = primes_below(limit);
    for (i64 p : primes) {
        if (p % 8 != 5) continue;
        for (i64 q : primes) {
            if (q % 8 != 5 || q <= 5 || q == p) continue;
            i64 n = p * q;
            if (n >= limit) continue;
            if (std::gcd(p - 1, q - 1) != 4) continue;
            Modulus m(n), mq(q);
            for (const auto& d : find_3ap(m, false, opts)) {
                // a lift of a weak decomposition of U_q: exactly one generator
                // reduces to 1, and the reduced triple decomposes U_q
                int star = -1;
                i64 src_ord[3], prod = 1;
                bool ok = true;
                for (int t = 0; t < 3 && ok; ++t) {
                    i64 r = d.factors[t].generator % q;
                    if (r == 0) {
                        ok = false;
                        break;
                    }
                    src_ord[t] = order_mod(r, mq);
                    prod *= src_ord[t];
                    if (r == 1) {
                        if (star >= 0) ok = false;
                        star = t;
                    }
                }
                if (!ok || star < 0 || prod != q - 1) continue;
                if (std::gcd(src_ord[0], src_ord[1]) != 1 ||
                    std::gcd(src_ord[0], src_ord[2]) != 1 ||
                    std::gcd(src_ord[1], src_ord[2]) != 1)
                    continue;
                rows.push_back({n, p, q, d, star, classify_weak_lift(d, q)});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(a.n, a.q, a.dec.diff, a.dec.first) <
               std::tie(b.n, b.q, b.dec.diff, b.dec.first);
    });
    return rows;
}

} // namespace apd
