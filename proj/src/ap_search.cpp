#include "apdecomp/ap_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace apd {

namespace detail {

void parallel_for(i64 begin, i64 end, int threads, const std::function<void(i64)>& fn) {
    if (end <= begin) return;
    int hw = int(std::thread::hardware_concurrency());
    int nthreads = std::min<i64>(std::max(1, std::min(threads, hw > 0 ? hw : 1)), end - begin);
    if (nthreads <= 1) {
        for (i64 i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<i64> next{begin};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                i64 i = next.fetch_add(1);
                if (i >= end) break;
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lk(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace detail

std::vector<i64> ApDecomposition::generators() const {
    std::vector<i64> g;
    g.reserve(factors.size());
    for (const auto& f : factors) g.push_back(f.generator);
    return g;
}

std::vector<i64> ApDecomposition::orders() const {
    std::vector<i64> o;
    o.reserve(factors.size());
    for (const auto& f : factors) o.push_back(f.order);
    return o;
}

std::vector<i64> ApDecomposition::order_multiset() const {
    auto o = orders();
    std::sort(o.begin(), o.end());
    return o;
}

std::optional<ApDecomposition> make_decomposition(const Modulus& m, i64 first, i64 diff, int len) {
    const i64 n = m.n();
    first = reduce(first, n);
    diff = reduce(diff, n);
    if (diff == 0 || first == 0) return std::nullopt;

    ApDecomposition d;
    d.n = n;
    d.first = first;
    d.diff = diff;
    i64 gens[4], ords[4];
    int trivial = 0;
    i64 prod = 1;
    for (int i = 0; i < len; ++i) {
        i64 g = (first + i * diff) % n;
        if (std::gcd(g, n) != 1) return std::nullopt;
        gens[i] = g;
        ords[i] = order_mod(g, m);
        trivial += (ords[i] == 1);
        prod *= ords[i];
    }
    if (prod != m.phi() || trivial > 1) return std::nullopt;
    if (!detail::direct_product_check(n, m.phi(), {gens, size_t(len)}, {ords, size_t(len)}))
        return std::nullopt;
    for (int i = 0; i < len; ++i) d.factors.push_back({gens[i], ords[i]});
    d.weak = trivial == 1;
    return d;
}

ApDecomposition reversed(const ApDecomposition& d) {
    ApDecomposition r = d;
    int len = int(d.factors.size());
    r.first = (d.first + (len - 1) * d.diff) % d.n;
    r.diff = d.n - d.diff;
    std::reverse(r.factors.begin(), r.factors.end());
    return r;
}

ApDecomposition canonicalize(const ApDecomposition& d) {
    if (d.diff <= (d.n - 1) / 2) return d;
    return reversed(d);
}

namespace {

std::vector<ApDecomposition> find_ap(const Modulus& m, int len, bool allow_weak,
                                     const SearchOptions& opts) {
    const i64 n = m.n();
    std::vector<ApDecomposition> out;
    if (n < 3) return out;
    OrderTable ot(m);
    const u64 phi = u64(m.phi());
    const bool prime = m.is_prime();
    const u32* ord = ot.data();
    const i64 kmax = (n - 1) / 2;

    std::vector<std::vector<ApDecomposition>> per_k(kmax + 1);
    detail::parallel_for(1, kmax + 1, opts.threads, [&](i64 k) {
        if (n % 2 == 0 && k % 2 == 1) return; // units of even n are odd
        auto& found = per_k[k];
        const u32* o0 = ord;
        const u32* o1 = ord + k;
        const u32* o2 = ord + 2 * k;
        const u32* o3 = ord + 3 * k;
        for (i64 x = 1; x < n; ++x) {
            u64 p = u64(o0[x]) * o1[x];
            if (p == 0 || p > phi) continue;
            p *= o2[x];
            if (p == 0 || p > phi) continue;
            if (len == 4) {
                p *= o3[x];
                if (p == 0) continue;
            }
            if (p != phi) continue;

            i64 gens[4], ords[4];
            int trivial = 0;
            for (int i = 0; i < len; ++i) {
                gens[i] = (x + i * k) % n;
                ords[i] = ord[x + i * k];
                trivial += (ords[i] == 1);
            }
            if (trivial > 1 || (trivial == 1 && !allow_weak)) continue;
            if (prime) {
                bool coprime = true;
                for (int i = 0; i < len && coprime; ++i)
                    for (int j = i + 1; j < len; ++j)
                        if (std::gcd(ords[i], ords[j]) != 1) {
                            coprime = false;
                            break;
                        }
                if (!coprime) continue;
            }
            if (!detail::direct_product_check(n, i64(phi), {gens, size_t(len)},
                                              {ords, size_t(len)}))
                continue;
            ApDecomposition d;
            d.n = n;
            d.first = x;
            d.diff = k;
            for (int i = 0; i < len; ++i) d.factors.push_back({gens[i], ords[i]});
            d.weak = trivial == 1;
            found.push_back(std::move(d));
        }
    });

    for (auto& v : per_k)
        for (auto& d : v) out.push_back(std::move(d));
    return out;
}

} // namespace

std::vector<ApDecomposition> find_3ap(const Modulus& m, bool allow_weak,
                                      const SearchOptions& opts) {
    return find_ap(m, 3, allow_weak, opts);
}

std::vector<ApDecomposition> find_4ap(const Modulus& m, bool allow_weak,
                                      const SearchOptions& opts) {
    return find_ap(m, 4, allow_weak, opts);
}

ApCounts count_3ap(const Modulus& m, const SearchOptions& opts) {
    ApCounts c;
    for (const auto& d : find_3ap(m, true, opts))
        (d.weak ? c.weak : c.strong)++;
    return c;
}

FeatureTags classify_features(const ApDecomposition& d) {
    FeatureTags t;
    const auto cd = canonicalize(d);
    const int len = int(d.factors.size());
    const auto& f = cd.factors;

    if (len == 3) t.orders_in_ap = 2 * f[1].order == f[0].order + f[2].order;
    t.consecutive_generators = cd.diff == 1;
    i64 rev_first = (d.first + (len - 1) * d.diff) % d.n;
    t.x_equals_k = (d.first == d.diff) || (rev_first == d.n - d.diff);

    i64 g_first = f.front().generator, g_last = f.back().generator;
    t.outer_generators_differ_by_one = std::abs(g_first - g_last) == 1;

    auto gens = cd.generators();
    std::sort(gens.begin(), gens.end());
    t.negative_consecutive = true;
    for (int i = 0; i < len; ++i)
        if (gens[i] != d.n - len + i) t.negative_consecutive = false;
    return t;
}

PhenomenaReport multiplicity_phenomena(const Modulus& m, const SearchOptions& opts) {
    PhenomenaReport r;
    auto decs = find_3ap(m, false, opts);
    std::map<std::vector<i64>, std::vector<ApDecomposition>> by_multiset;
    for (auto& d : decs) by_multiset[d.order_multiset()].push_back(std::move(d));

    for (auto& [ms, group] : by_multiset) {
        std::vector<i64> middles;
        for (const auto& d : group) middles.push_back(d.factors[1].order);
        std::sort(middles.begin(), middles.end());
        if (std::adjacent_find(middles.begin(), middles.end()) != middles.end()) r.c = true;
        if (std::unique(middles.begin(), middles.end()) - middles.begin() > 1) r.b = true;
        r.groups.push_back({ms, std::move(group)});
    }
    r.a = r.groups.size() > 1;
    return r;
}

namespace {

bool same_subgroup(const Modulus& m, i64 a, i64 b, i64 order) {
    // a, b units of equal order: b in <a> iff <a> = <b>
    i64 cur = 1;
    for (i64 i = 0; i < order; ++i) {
        cur = mul_mod(cur, a, m.n());
        if (cur == b) return true;
    }
    return false;
}

} // namespace

std::vector<DoubleBarrelledPair> double_barrelled(const Modulus& m, const SearchOptions& opts) {
    if (!m.is_prime()) throw family_error("double_barrelled: modulus must be prime");
    const i64 n = m.n();
    auto decs = find_3ap(m, false, opts);
    std::vector<DoubleBarrelledPair> out;

    for (size_t i = 0; i < decs.size(); ++i) {
        for (size_t j = 0; j < decs.size(); ++j) {
            if (i == j) continue;
            for (const auto& o1 : {decs[i], reversed(decs[i])}) {
                auto g = o1.generators();
                i64 z = o1.diff;
                for (const auto& o2 : {decs[j], reversed(decs[j])}) {
                    auto h = o2.generators();
                    // case 1: <k> <k+z> <k+2z> alongside <k-2z> <k> <k+2z>
                    if (o2.diff == 2 * z % n && h[1] == g[0] && h[2] == g[2] &&
                        same_subgroup(m, g[1], h[0], o1.factors[1].order)) {
                        out.push_back({1, decs[i], decs[j]});
                    }
                    // case 2: the window shifted by z, k and k+3z powers of
                    // each other; the relation is symmetric, so order the
                    // record canonically
                    if (o2.diff == z && h[0] == g[1] && h[1] == g[2] &&
                        same_subgroup(m, g[0], h[2], o1.factors[0].order)) {
                        size_t lo = std::min(i, j), hi = std::max(i, j);
                        out.push_back({2, decs[lo], decs[hi]});
                    }
                }
            }
        }
    }
    // a pair can match in both orientations; keep one record per (d1, d2, case)
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.case_id, a.d1.diff, a.d1.first, a.d2.diff, a.d2.first) <
               std::tie(b.case_id, b.d1.diff, b.d1.first, b.d2.diff, b.d2.first);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) {
                              return a.case_id == b.case_id && a.d1 == b.d1 && a.d2 == b.d2;
                          }),
              out.end());
    return out;
}

std::vector<QuartetResult> quartets(const Modulus& m, const SearchOptions& opts) {
    const auto& f = m.factorization();
    if (f.size() != 3 || f[0].prime == 2 || f[0].exp != 1 || f[1].exp != 1 || f[2].exp != 1)
        throw family_error("quartets: n must be a product of three distinct odd primes");
    if (m.xi() != 4) throw family_error("quartets: xi(n) must be 4, got " +
                                        std::to_string(m.xi()));
    const i64 n = m.n();
    const i64 lambda = m.lambda();

    auto decs = find_3ap(m, false, opts);
    std::vector<QuartetResult> out;
    auto key = [](const ApDecomposition& d) { return std::pair{d.diff, d.first}; };
    std::vector<std::pair<i64, i64>> done;

    for (const auto& d : decs) {
        auto ms = d.order_multiset();
        if (ms != std::vector<i64>{2, 2, lambda}) continue;
        if (std::find(done.begin(), done.end(), key(d)) != done.end()) continue;

        // orient with the lambda factor first
        ApDecomposition base = d.factors[0].order == lambda ? d : reversed(d);
        if (base.factors[0].order != lambda) continue; // lambda in the middle: not a quartet base
        i64 x = base.factors[0].generator;
        i64 y = base.factors[1].generator;
        i64 z = base.factors[2].generator;
        i64 xh = pow_mod(x, lambda / 2, n);
        i64 yz = mul_mod(y, z, n);
        QuartetResult q;
        q.lambda = lambda;
        i64 u;
        if (lambda % 4 == 0) {
            q.multipliers = {xh, yz, mul_mod(xh, yz, n)};
            u = xh;
        } else {
            q.multipliers = {mul_mod(xh, y, n), mul_mod(xh, z, n), yz};
            u = mul_mod(xh, y, n);
        }
        i64 w = mul_mod(mul_mod(x, y, n), z, n);
        if (w != (z + base.diff) % n)
            throw invariant_error("quartets: xyz does not extend the progression");
        std::array<i64, 4> prog1{x, y, z, w};
        std::array<i64, 4> prog2;
        for (int i = 0; i < 4; ++i) prog2[i] = mul_mod(u, prog1[i], n);

        // windows: first/last three of both progressions
        for (const auto& p : {prog1, prog2}) {
            for (int s = 0; s < 2; ++s) {
                i64 kk = reduce(p[1] - p[0], n);
                auto wd = make_decomposition(m, p[s], kk, 3);
                if (!wd || wd->order_multiset() != ms)
                    throw invariant_error("quartets: window is not a (lambda,2,2) decomposition");
                auto cd = canonicalize(*wd);
                done.push_back(key(cd));
                q.windows.push_back(std::move(cd));
            }
        }

        // presentation: the progression containing -1 comes first, oriented
        // with -1 third; the partner is the elementwise multiple by u
        auto orient = [&](std::array<i64, 4> p) {
            if (p[1] == n - 1) std::reverse(p.begin(), p.end());
            else if (p[2] != n - 1 && reduce(p[1] - p[0], n) > (n - 1) / 2)
                std::reverse(p.begin(), p.end());
            return p;
        };
        bool neg_in_2 = prog2[1] == n - 1 || prog2[2] == n - 1;
        std::array<i64, 4> primary = orient(neg_in_2 ? prog2 : prog1);
        std::array<i64, 4> partner;
        for (int i = 0; i < 4; ++i) partner[i] = mul_mod(u, primary[i], n);
        q.progression = primary;
        q.partner = partner;
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<WindowProgression> four_term_windows(const Modulus& m, const SearchOptions& opts) {
    const i64 n = m.n();
    std::vector<WindowProgression> out;
    if (n < 3) return out;
    OrderTable ot(m);
    const u64 phi = u64(m.phi());
    const u32* ord = ot.data();
    const i64 kmax = (n - 1) / 2;

    std::vector<std::vector<WindowProgression>> per_k(kmax + 1);
    detail::parallel_for(1, kmax + 1, opts.threads, [&](i64 k) {
        for (i64 x = 1; x < n; ++x) {
            u64 w1 = u64(ord[x]) * ord[x + k] * ord[x + 2 * k];
            if (w1 != phi) continue;
            u64 w2 = u64(ord[x + k]) * ord[x + 2 * k] * ord[x + 3 * k];
            if (w2 != phi) continue;
            i64 gens[4], ords[4];
            bool trivial = false;
            for (int i = 0; i < 4; ++i) {
                gens[i] = (x + i * k) % n;
                ords[i] = ord[x + i * k];
                trivial |= ords[i] == 1;
            }
            if (trivial) continue;
            if (!detail::direct_product_check(n, i64(phi), {gens, 3}, {ords, 3})) continue;
            if (!detail::direct_product_check(n, i64(phi), {gens + 1, 3}, {ords + 1, 3})) continue;
            WindowProgression wp;
            for (int i = 0; i < 4; ++i) {
                wp.terms[i] = gens[i];
                wp.orders[i] = ords[i];
            }
            i64 p012 = mul_mod(mul_mod(gens[0], gens[1], n), gens[2], n);
            i64 p123 = mul_mod(mul_mod(gens[1], gens[2], n), gens[3], n);
            wp.last_is_product_of_rest = p012 == gens[3];
            wp.first_is_product_of_rest = p123 == gens[0];
            per_k[k].push_back(wp);
        }
    });
    for (auto& v : per_k)
        for (auto& wp : v) out.push_back(wp);
    return out;
}

std::vector<NCount> count_scan(i64 limit, const SearchOptions& opts) {
    std::vector<NCount> rows(std::max<i64>(0, limit - 2));
    detail::parallel_for(3, limit + 1, opts.threads, [&](i64 n) {
        Modulus m(n);
        rows[n - 3] = {n, m.xi(), i64(find_3ap(m, false).size())};
    });
    return rows;
}

std::map<i64, i64> d_table(i64 limit, const SearchOptions& opts) {
    std::map<i64, i64> best;
    for (const auto& r : count_scan(limit, opts)) {
        auto& v = best[r.xi];
        v = std::max(v, r.strong);
    }
    return best;
}

} // namespace apd
