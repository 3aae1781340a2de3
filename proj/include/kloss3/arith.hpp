#pragma once

// Exact integer and modular arithmetic used by every sum evaluation.
// All products of residues go through 128-bit intermediates.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kloss3/error.hpp"

namespace kloss3 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Result of the extended Euclidean algorithm: a*x + b*y == g, g >= 0.
struct Bezout {
    i64 g;
    i64 x;
    i64 y;
    friend bool operator==(const Bezout&, const Bezout&) = default;
};

/// A residue class modulo `modulus`, stored canonically in [0, modulus).
struct ResidueSolution {
    i64 modulus;
    i64 value;
    friend bool operator==(const ResidueSolution&, const ResidueSolution&) = default;
};

struct PrimePower {
    u64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    u64 base = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing

    u64 recompose() const {
        u64 r = 1;
        for (const auto& f : factors)
            for (int k = 0; k < f.exponent; ++k) r *= f.prime;
        return r;
    }
};

/// Canonical representative of a modulo n in [0, n).
inline i64 mod(i128 a, i64 n) {
    i128 r = a % n;
    if (r < 0) r += n;
    return static_cast<i64>(r);
}

inline i64 mulmod(i64 a, i64 b, i64 n) {
    return mod(static_cast<i128>(a) * b, n);
}

constexpr Bezout egcd(i64 a, i64 b) {
    if (a == 0 && b == 0) throw precondition_error("egcd: undefined gcd (a = b = 0)");
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

inline ResidueSolution inv_mod(i64 a, i64 n) {
    if (n < 1) throw precondition_error("inv_mod: modulus must be positive");
    if (n == 1) return {1, 0};
    const Bezout e = egcd(mod(a, n), n);
    if (e.g != 1)
        throw not_invertible_error("inv_mod: gcd(" + std::to_string(a) + ", " + std::to_string(n) +
                                   ") = " + std::to_string(e.g) + " > 1");
    return {n, mod(e.x, n)};
}

/// Canonical (Y, Z) with Y*b + Z*c == 1 (mod n).
///
/// With g = gcd(b, c) and Bezout coefficients (y', z') for g, the choice is
/// Y = y' * g^{-1}, Z = z' * g^{-1} reduced modulo n. Requires gcd(b, c, n) = 1.
inline std::pair<ResidueSolution, ResidueSolution> solve_pair_congruence(i64 b, i64 c, i64 n) {
    if (n < 1) throw precondition_error("solve_pair_congruence: modulus must be positive");
    if (n == 1) return {{1, 0}, {1, 0}};
    if (gcd3(b, c, n) != 1)
        throw precondition_error("solve_pair_congruence: gcd(b, c, n) > 1, no solution");
    const Bezout e = egcd(b, c);
    const i64 ginv = inv_mod(e.g, n).value;
    return {{n, mulmod(mod(e.x, n), ginv, n)}, {n, mulmod(mod(e.y, n), ginv, n)}};
}

inline u64 mulmod_u(u64 a, u64 b, u64 n) {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
}

inline u64 powmod_u(u64 base, u64 e, u64 n) {
    u64 r = 1 % n;
    base %= n;
    while (e) {
        if (e & 1) r = mulmod_u(r, base, n);
        base = mulmod_u(base, base, n);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard rho. n must be odd and composite.
inline u64 rho_split(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod_u(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod_u(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split_large(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const u64 d = rho_split(n);
    split_large(d, primes);
    split_large(n / d, primes);
}

} // namespace detail

/// Prime factorization: trial division up to 10^6, then Miller-Rabin plus rho.
inline Factorization factor(u64 n) {
    if (n < 1) throw precondition_error("factor: n must be >= 1");
    Factorization out;
    out.base = n;
    u64 rest = n;
    for (u64 p = 2; p <= 1000000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (rest > 1) {
        std::vector<u64> big;
        detail::split_large(rest, big);
        std::sort(big.begin(), big.end());
        for (u64 p : big) {
            if (!out.factors.empty() && out.factors.back().prime == p)
                ++out.factors.back().exponent;
            else
                out.factors.push_back({p, 1});
        }
    }
    return out;
}

inline u64 divisor_count(u64 n) {
    u64 d = 1;
    for (const auto& f : factor(n).factors) d *= static_cast<u64>(f.exponent + 1);
    return d;
}

inline u64 ipow(u64 base, int e) {
    u64 r = 1;
    while (e-- > 0) r *= base;
    return r;
}

/// Euler's totient.
inline u64 totient(u64 n) {
    u64 r = n;
    for (const auto& f : factor(n).factors) r = r / f.prime * (f.prime - 1);
    return r;
}

} // namespace kloss3
