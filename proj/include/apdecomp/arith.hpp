#pragma once

// Integer and modular arithmetic foundation: factorization, totients,
// Carmichael lambda, element orders, CRT, modular square roots.
//
// Everything here is pure and reentrant. Modulus values are immutable after
// construction and safe to share across threads. Integers are 64-bit with
// 128-bit intermediates for modular products.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apd {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Input lies outside the family an operation is defined on (wrong congruence
// class, composite where a prime is required, unproductive source, ...).
class family_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A computation contradicted something that is supposed to be guaranteed.
// This is never user error; it means a bug or a falsified table entry, and
// the CLI surfaces it loudly with its own exit code.
class invariant_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct PrimePower {
    i64 prime = 0;
    int exp = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-exponent pairs sorted ascending by prime; product reconstructs the
// factored integer. factorize(1) is the empty list.
using Factorization = std::vector<PrimePower>;

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);
i64 reduce(i64 x, i64 m);  // representative in [0, m)
i64 inv_mod(i64 a, i64 m); // throws std::invalid_argument if gcd(a, m) != 1

// Primes up to 10^4, enough to trial-divide anything below 10^8.
const std::vector<i64>& prime_sieve();

bool is_prime(i64 n);
Factorization factorize(i64 n); // n in [1, 10^8], throws std::out_of_range beyond
i64 expand(const Factorization& f);

// n together with its cached factorization, phi, lambda and xi = phi/lambda.
class Modulus {
  public:
    explicit Modulus(i64 n);

    i64 n() const { return n_; }
    const Factorization& factorization() const { return fact_; }
    i64 phi() const { return phi_; }
    i64 lambda() const { return lambda_; }
    i64 xi() const { return xi_; }
    const Factorization& lambda_factorization() const { return lambda_fact_; }

    bool is_prime() const { return fact_.size() == 1 && fact_[0].exp == 1; }

  private:
    i64 n_;
    Factorization fact_;
    i64 phi_;
    i64 lambda_;
    i64 xi_;
    Factorization lambda_fact_;
};

i64 euler_phi(const Modulus& m);
i64 carmichael_lambda(const Modulus& m);
i64 xi(const Modulus& m);

// Smallest t >= 1 with x^t = 1 (mod n), by dividing lambda down through its
// prime factors (no linear scan). Throws std::invalid_argument on non-units.
i64 order_mod(i64 x, const Modulus& m);

// Raw variant for callers that manage their own lambda data (e.g. scans over
// n*p or n^2 that should not re-factorize per element).
i64 order_mod(i64 x, i64 n, i64 lambda, const Factorization& lambda_fact);

// Unique solution in [0, prod moduli) of simultaneous congruences with
// pairwise coprime moduli. Throws std::invalid_argument on non-coprime input.
i64 crt_combine(std::span<const std::pair<i64, i64>> congruences);

int legendre_symbol(i64 a, i64 p);

// Both square roots of a mod p (smaller first), or nullopt for non-residues;
// 0 maps to (0,0). p must be an odd prime. Uses the a^((p+1)/4) shortcut for
// p = 3 (mod 4) and Tonelli-Shanks otherwise.
std::optional<std::pair<i64, i64>> sqrt_mod_prime(i64 a, i64 p);

} // namespace apd
