#include "apdecomp/arith.hpp"

#include <algorithm>
#include <numeric>

namespace apd {

namespace {

constexpr i64 kFactorizeLimit = 100'000'000; // sieve to 10^4 covers this
constexpr i64 kSieveLimit = 10'000;

std::vector<i64> build_sieve() {
    std::vector<char> composite(kSieveLimit + 1, 0);
    std::vector<i64> primes;
    for (i64 i = 2; i <= kSieveLimit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (i64 j = i * i; j <= kSieveLimit; j += i) composite[j] = 1;
    }
    return primes;
}

i64 lcm_i64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

// lambda of a single prime power component
i64 lambda_prime_power(i64 p, int e) {
    if (p == 2) {
        if (e == 1) return 1;
        if (e == 2) return 2;
        return i64(1) << (e - 2);
    }
    i64 v = p - 1;
    for (int i = 1; i < e; ++i) v *= p;
    return v;
}

i64 phi_prime_power(i64 p, int e) {
    i64 v = p - 1;
    for (int i = 1; i < e; ++i) v *= p;
    return v;
}

} // namespace

i64 reduce(i64 x, i64 m) {
    x %= m;
    return x < 0 ? x + m : x;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
    return i64((__int128)a * b % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 r = 1;
    base = reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 m) {
    a = reduce(a, m);
    i64 old_r = a, r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1)
        throw std::invalid_argument("inv_mod: gcd(" + std::to_string(a) + ", " +
                                    std::to_string(m) + ") = " + std::to_string(old_r));
    return reduce(old_s, m);
}

const std::vector<i64>& prime_sieve() {
    static const std::vector<i64> primes = build_sieve();
    return primes;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n > kFactorizeLimit) throw std::out_of_range("is_prime: n exceeds 10^8");
    for (i64 p : prime_sieve()) {
        if (p * p > n) return true;
        if (n % p == 0) return n == p;
    }
    return true;
}

Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    if (n > kFactorizeLimit) throw std::out_of_range("factorize: n exceeds 10^8");
    Factorization f;
    for (i64 p : prime_sieve()) {
        if (p * p > n) break;
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1}); // leftover cofactor is prime
    return f;
}

i64 expand(const Factorization& f) {
    i64 n = 1;
    for (const auto& [p, e] : f)
        for (int i = 0; i < e; ++i) n *= p;
    return n;
}

Modulus::Modulus(i64 n) : n_(n) {
    if (n < 2) throw std::invalid_argument("Modulus: n must be >= 2");
    fact_ = factorize(n);
    phi_ = 1;
    lambda_ = 1;
    for (const auto& [p, e] : fact_) {
        phi_ *= phi_prime_power(p, e);
        lambda_ = lcm_i64(lambda_, lambda_prime_power(p, e));
    }
    if (phi_ % lambda_ != 0)
        throw invariant_error("Modulus: lambda does not divide phi");
    xi_ = phi_ / lambda_;
    lambda_fact_ = factorize(lambda_);
}

i64 euler_phi(const Modulus& m) { return m.phi(); }
i64 carmichael_lambda(const Modulus& m) { return m.lambda(); }
i64 xi(const Modulus& m) { return m.xi(); }

i64 order_mod(i64 x, i64 n, i64 lambda, const Factorization& lambda_fact) {
    x = reduce(x, n);
    if (std::gcd(x, n) != 1)
        throw std::invalid_argument("order_mod: " + std::to_string(x) + " is not a unit mod " +
                                    std::to_string(n));
    i64 t = lambda;
    for (const auto& [p, e] : lambda_fact) {
        for (int i = 0; i < e && t % p == 0; ++i) {
            if (pow_mod(x, t / p, n) == 1)
                t /= p;
            else
                break;
        }
    }
    return t;
}

i64 order_mod(i64 x, const Modulus& m) {
    return order_mod(x, m.n(), m.lambda(), m.lambda_factorization());
}

i64 crt_combine(std::span<const std::pair<i64, i64>> congruences) {
    i64 r = 0, m = 1;
    for (const auto& [ri, mi] : congruences) {
        if (mi < 1) throw std::invalid_argument("crt_combine: modulus must be positive");
        if (std::gcd(m, mi) != 1)
            throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");
        // x = r (mod m), x = ri (mod mi)  ->  x = r + m * t
        i64 t = mul_mod(reduce(ri - r, mi), inv_mod(m % mi, mi), mi);
        r += m * t;
        m *= mi;
    }
    return r;
}

int legendre_symbol(i64 a, i64 p) {
    a = reduce(a, p);
    if (a == 0) return 0;
    i64 v = pow_mod(a, (p - 1) / 2, p);
    return v == 1 ? 1 : -1;
}

std::optional<std::pair<i64, i64>> sqrt_mod_prime(i64 a, i64 p) {
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    a = reduce(a, p);
    if (a == 0) return std::pair<i64, i64>{0, 0};
    if (legendre_symbol(a, p) != 1) return std::nullopt;

    i64 r;
    if (p % 4 == 3) {
        r = pow_mod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s with q odd
        i64 q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        i64 z = 2;
        while (legendre_symbol(z, p) != -1) ++z;
        i64 c = pow_mod(z, q, p);
        r = pow_mod(a, (q + 1) / 2, p);
        i64 t = pow_mod(a, q, p);
        int m = s;
        while (t != 1) {
            i64 t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            i64 b = pow_mod(c, i64(1) << (m - i - 1), p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    if (mul_mod(r, r, p) != a)
        throw invariant_error("sqrt_mod_prime: produced a non-root");
    return std::pair<i64, i64>{std::min(r, p - r), std::max(r, p - r)};
}

} // namespace apd
