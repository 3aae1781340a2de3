#pragma once

// Classical and SL(3, Z) Kloosterman sums.
//
// Every sum is produced as an ExponentTally. The long-element sum has three
// evaluation routes that are checked against each other:
//   s_wl_oracle  - literal four-fold enumeration of the defining congruences
//   s_wl_direct  - two-fold loop: C1 solved from the congruence mod A1,
//                  C2 then forced mod A2
//   s_wl_fast    - twisted multiplicativity over prime-power blocks, each
//                  block evaluated with the two-fold loop
// s_wl_value is s_wl_fast without the final tally convolution (product of
// block values), used by the large sweeps.

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "kloss3/arith.hpp"
#include "kloss3/tally.hpp"

namespace kloss3 {

/// Character index pair without the non-degeneracy restriction.
struct IndexPair {
    i64 first = 0;
    i64 second = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Non-degenerate character psi_m, m1 != 0 and m2 != 0.
class CharPair {
public:
    CharPair(i64 m1, i64 m2) : m1_(m1), m2_(m2) {
        if (m1 == 0 || m2 == 0)
            throw precondition_error("CharPair: non-degenerate character requires m1 != 0 and m2 != 0");
    }
    i64 m1() const { return m1_; }
    i64 m2() const { return m2_; }
    IndexPair raw() const { return {m1_, m2_}; }
    CharPair operator-() const { return {-m1_, -m2_}; }
    friend bool operator==(const CharPair&, const CharPair&) = default;

private:
    i64 m1_;
    i64 m2_;
};

class ModPair {
public:
    ModPair(i64 c1, i64 c2) : c1_(c1), c2_(c2) {
        if (c1 < 1 || c2 < 1) throw precondition_error("ModPair: moduli must satisfy c1 >= 1 and c2 >= 1");
    }
    i64 c1() const { return c1_; }
    i64 c2() const { return c2_; }
    friend bool operator==(const ModPair&, const ModPair&) = default;

private:
    i64 c1_;
    i64 c2_;
};

enum class WeylElement { I, w2, w3, w4, w5, wl };

inline std::string to_string(WeylElement w) {
    switch (w) {
    case WeylElement::I: return "I";
    case WeylElement::w2: return "w2";
    case WeylElement::w3: return "w3";
    case WeylElement::w4: return "w4";
    case WeylElement::w5: return "w5";
    case WeylElement::wl: return "wl";
    }
    return "?";
}

inline WeylElement parse_weyl(const std::string& s) {
    for (auto w : {WeylElement::I, WeylElement::w2, WeylElement::w3, WeylElement::w4, WeylElement::w5,
                   WeylElement::wl})
        if (s == to_string(w)) return w;
    throw precondition_error("unknown Weyl element '" + s + "' (expected I, w2, w3, w4, w5 or wl)");
}

struct BoundReport {
    std::string sum_id;
    double computed_abs = 0.0;
    double bound_value = 0.0;
    bool holds = false;
};

inline BoundReport make_bound_report(std::string id, double computed, double bound) {
    return {std::move(id), computed, bound, computed <= bound * (1.0 + 1e-12)};
}

// ---------------------------------------------------------------------------
// Classical sums S(a, b, c)

/// S(a, b, c) = sum over x mod c, (x, c) = 1, of e((a x + b xbar) / c).
inline ExponentTally kloosterman_classical(i64 a, i64 b, i64 c) {
    if (c < 1) throw precondition_error("kloosterman_classical: c must be >= 1");
    TallyBuilder builder(c);
    const i64 ar = mod(a, c), br = mod(b, c);
    for (i64 x = 0; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        const i64 xbar = inv_mod(x, c).value;
        builder.add_reduced(mod(static_cast<i128>(ar) * x + static_cast<i128>(br) * xbar, c));
    }
    return builder.finish();
}

/// Unit/inverse table and cosine table for one modulus; evaluates the real
/// part of S(a, b, c) for many (a, b) without rebuilding inverses.
class ClassicalKernel {
public:
    explicit ClassicalKernel(i64 c) : c_(c) {
        if (c < 1) throw precondition_error("ClassicalKernel: c must be >= 1");
        if (c > (i64{1} << 31)) throw overflow_guard_error("ClassicalKernel: modulus too large");
        if (c == 1) {
            units_ = {0};
            inverses_ = {0};
        } else if (is_prime(static_cast<u64>(c))) {
            std::vector<i64> inv(static_cast<std::size_t>(c));
            inv[1] = 1;
            for (i64 i = 2; i < c; ++i) inv[i] = mod(-(c / i) * inv[c % i], c);
            units_.reserve(c - 1);
            inverses_.reserve(c - 1);
            for (i64 x = 1; x < c; ++x) {
                units_.push_back(x);
                inverses_.push_back(inv[x]);
            }
        } else {
            for (i64 x = 1; x < c; ++x) {
                const Bezout e = egcd(x, c);
                if (e.g != 1) continue;
                units_.push_back(x);
                inverses_.push_back(mod(e.x, c));
            }
        }
        cos_.resize(static_cast<std::size_t>(c));
        for (i64 t = 0; t < c; ++t) cos_[t] = unit_root(t, c).real();
    }

    i64 modulus() const { return c_; }

    /// Re S(a, b, c). (S is real; the tally tests check that separately.)
    double value(i64 a, i64 b) const {
        const u64 ar = static_cast<u64>(mod(a, c_)), br = static_cast<u64>(mod(b, c_));
        const u64 c = static_cast<u64>(c_);
        double s = 0.0;
        for (std::size_t k = 0; k < units_.size(); ++k) {
            const u64 t = (ar * static_cast<u64>(units_[k]) + br * static_cast<u64>(inverses_[k])) % c;
            s += cos_[t];
        }
        return s + 0.0;
    }

private:
    i64 c_;
    std::vector<i64> units_;
    std::vector<i64> inverses_;
    std::vector<double> cos_;
};

/// |S(a,b,cc') - S(c'bar a, c'bar b, c) S(cbar a, cbar b, c')| < 1e-9 (1 + |S(a,b,cc')|).
inline bool classical_multiplicativity_check(i64 a, i64 b, i64 c, i64 cp) {
    if (c < 1 || cp < 1) throw precondition_error("classical_multiplicativity_check: moduli must be >= 1");
    if (std::gcd(c, cp) != 1) throw precondition_error("classical_multiplicativity_check: gcd(c, c') must be 1");
    const auto lhs = kloosterman_classical(a, b, c * cp).value();
    const i64 cpbar = inv_mod(cp, c).value;
    const i64 cbar = inv_mod(c, cp).value;
    const auto rhs = kloosterman_classical(mulmod(cpbar, a, c), mulmod(cpbar, b, c), c).value() *
                     kloosterman_classical(mulmod(cbar, a, cp), mulmod(cbar, b, cp), cp).value();
    return std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs));
}

// ---------------------------------------------------------------------------
// Long-element sum S_wl(psi_m, psi_n, (A1, A2))

/// One admissible tuple (B1, C1, B2, C2) reduced to its phase components.
/// The phase numerator over L = A1 A2 is m2*pm2 + m1*pm1 + n2*pn2 - n1*pn1.
struct WlTerm {
    u64 pm2;
    u64 pm1;
    u64 pn2;
    u64 pn1;
};

namespace detail {

inline WlTerm make_wl_term(i64 A1, i64 A2, i64 B1, i64 C1, i64 B2, i64 C2) {
    const auto [Y1, Z1] = solve_pair_congruence(B1, C1, A1);
    const auto [Y2, Z2] = solve_pair_congruence(B2, C2, A2);
    const i128 a = static_cast<i128>(Z2.value) * B1 - static_cast<i128>(Y2.value) * A1;
    const i128 b = static_cast<i128>(Y1.value) * A2 - static_cast<i128>(Z1.value) * B2;
    return {static_cast<u64>(mod(a, A2)) * static_cast<u64>(A1), static_cast<u64>(mod(b, A1)) * static_cast<u64>(A2),
            static_cast<u64>(mod(B1, A1)) * static_cast<u64>(A2), static_cast<u64>(mod(B2, A2)) * static_cast<u64>(A1)};
}

inline void check_scale(ModPair c, i64 limit_log2, const char* who) {
    const i128 L = static_cast<i128>(c.c1()) * c.c2();
    if (L >= (static_cast<i128>(1) << limit_log2))
        throw overflow_guard_error(std::string(who) + ": c1*c2 must be below 2^" + std::to_string(limit_log2));
}

} // namespace detail

/// Literal enumeration of all (B1, C1 mod A1; B2, C2 mod A2) satisfying the
/// primitivity and Plucker congruence conditions.
inline std::vector<WlTerm> s_wl_terms_bruteforce(ModPair c) {
    detail::check_scale(c, 31, "s_wl_oracle");
    const i64 A1 = c.c1(), A2 = c.c2(), L = A1 * A2;
    std::vector<WlTerm> terms;
    for (i64 B1 = 0; B1 < A1; ++B1)
        for (i64 C1 = 0; C1 < A1; ++C1) {
            if (gcd3(A1, B1, C1) != 1) continue;
            for (i64 B2 = 0; B2 < A2; ++B2)
                for (i64 C2 = 0; C2 < A2; ++C2) {
                    if (gcd3(A2, B2, C2) != 1) continue;
                    if ((A1 * C2 + B1 * B2 + C1 * A2) % L != 0) continue;
                    terms.push_back(detail::make_wl_term(A1, A2, B1, C1, B2, C2));
                }
        }
    return terms;
}

/// Same tuple set via the congruence structure: A1 | B1 B2 + C1 A2 fixes C1
/// modulo A1 / gcd(A1, A2), and then C2 = -(B1 B2 + C1 A2) / A1 mod A2.
inline std::vector<WlTerm> s_wl_terms_reduced(ModPair c) {
    detail::check_scale(c, 62, "s_wl_fast");
    const i64 A1 = c.c1(), A2 = c.c2();
    const i64 g = std::gcd(A1, A2);
    const i64 step = A1 / g;
    const i64 a2_inv = inv_mod((A2 / g) % step, step).value;
    std::vector<WlTerm> terms;
    for (i64 B1 = 0; B1 < A1; ++B1)
        for (i64 B2 = 0; B2 < A2; ++B2) {
            const i64 r = mod(-static_cast<i128>(B1) * B2, A1);
            if (r % g != 0) continue;
            const i64 c0 = mulmod(r / g, a2_inv, step);
            for (i64 C1 = c0; C1 < A1; C1 += step) {
                if (gcd3(A1, B1, C1) != 1) continue;
                const i128 s = static_cast<i128>(B1) * B2 + static_cast<i128>(C1) * A2;
                const i64 C2 = mod(-(s / A1), A2);
                if (gcd3(A2, B2, C2) != 1) continue;
                terms.push_back(detail::make_wl_term(A1, A2, B1, C1, B2, C2));
            }
        }
    return terms;
}

/// Tally of the term list for characters (m, n); denominator L = A1 A2.
inline ExponentTally tally_wl_terms(const std::vector<WlTerm>& terms, i64 L, IndexPair m, IndexPair n) {
    TallyBuilder builder(L);
    const u64 Lu = static_cast<u64>(L);
    const u64 k2 = static_cast<u64>(mod(m.second, L)), k1 = static_cast<u64>(mod(m.first, L));
    const u64 j2 = static_cast<u64>(mod(n.second, L)), j1 = static_cast<u64>(mod(-n.first, L));
    if (L < (i64{1} << 32)) {
        for (const auto& t : terms) {
            u64 s = (k2 * t.pm2) % Lu;
            s += (k1 * t.pm1) % Lu;
            s += (j2 * t.pn2) % Lu;
            s += (j1 * t.pn1) % Lu;
            builder.add_reduced(static_cast<i64>(s % Lu));
        }
    } else {
        for (const auto& t : terms) {
            const u128 s = static_cast<u128>(k2) * t.pm2 + static_cast<u128>(k1) * t.pm1 +
                           static_cast<u128>(j2) * t.pn2 + static_cast<u128>(j1) * t.pn1;
            builder.add_reduced(static_cast<i64>(s % Lu));
        }
    }
    return builder.finish();
}

inline ExponentTally s_wl_oracle(CharPair m, CharPair n, ModPair c) {
    return tally_wl_terms(s_wl_terms_bruteforce(c), c.c1() * c.c2(), m.raw(), n.raw());
}

inline ExponentTally s_wl_direct(CharPair m, CharPair n, ModPair c) {
    return tally_wl_terms(s_wl_terms_reduced(c), c.c1() * c.c2(), m.raw(), n.raw());
}

/// One coprime block of the multiplicative decomposition with its twisted
/// first character.
struct WlBlock {
    ModPair modulus;
    IndexPair twisted_m;
};

/// Splits c into prime-power blocks (p^a, p^b). For a block (q1, q2) with
/// complement (r1, r2) = (c1/q1, c2/q2) the character becomes
/// (r1bar^2 r2 m1, r1 r2bar^2 m2), inverses modulo q1 q2.
inline std::vector<WlBlock> bfg_blocks(IndexPair m, ModPair c) {
    std::map<u64, std::pair<int, int>> exps;
    for (const auto& f : factor(static_cast<u64>(c.c1())).factors) exps[f.prime].first = f.exponent;
    for (const auto& f : factor(static_cast<u64>(c.c2())).factors) exps[f.prime].second = f.exponent;
    std::vector<WlBlock> blocks;
    blocks.reserve(exps.size());
    for (const auto& [p, e] : exps) {
        const i64 q1 = static_cast<i64>(ipow(p, e.first));
        const i64 q2 = static_cast<i64>(ipow(p, e.second));
        const i64 r1 = c.c1() / q1, r2 = c.c2() / q2;
        const i64 Lb = q1 * q2;
        const i64 r1bar = inv_mod(r1, Lb).value, r2bar = inv_mod(r2, Lb).value;
        const i64 tm1 = mulmod(mulmod(mulmod(r1bar, r1bar, Lb), r2 % Lb, Lb), mod(m.first, Lb), Lb);
        const i64 tm2 = mulmod(mulmod(r1 % Lb, mulmod(r2bar, r2bar, Lb), Lb), mod(m.second, Lb), Lb);
        blocks.push_back({ModPair(q1, q2), {tm1, tm2}});
    }
    return blocks;
}

/// Thread-safe cache of per-block term lists, keyed by (A1, A2). Lists longer
/// than `max_terms` are recomputed on demand instead of stored.
class WlTermCache {
public:
    explicit WlTermCache(std::size_t max_terms = std::size_t{1} << 18) : max_terms_(max_terms) {}

    std::shared_ptr<const std::vector<WlTerm>> get(ModPair c) {
        const std::pair<i64, i64> key{c.c1(), c.c2()};
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        auto terms = std::make_shared<const std::vector<WlTerm>>(s_wl_terms_reduced(c));
        if (terms->size() <= max_terms_) {
            std::lock_guard lock(mutex_);
            cache_.emplace(key, terms);
        }
        return terms;
    }

private:
    std::size_t max_terms_;
    std::mutex mutex_;
    std::map<std::pair<i64, i64>, std::shared_ptr<const std::vector<WlTerm>>> cache_;
};

inline ExponentTally s_wl_fast(CharPair m, CharPair n, ModPair c, WlTermCache* cache = nullptr) {
    detail::check_scale(c, 63, "s_wl_fast");
    ExponentTally out = ExponentTally::one();
    for (const auto& block : bfg_blocks(m.raw(), c)) {
        const i64 Lb = block.modulus.c1() * block.modulus.c2();
        const auto terms = cache ? cache->get(block.modulus)
                                 : std::make_shared<const std::vector<WlTerm>>(s_wl_terms_reduced(block.modulus));
        out = out * tally_wl_terms(*terms, Lb, block.twisted_m, n.raw());
        if (out.is_zero()) break;
    }
    return out;
}

/// Value of S_wl as the ordered product of block values.
inline std::complex<double> s_wl_value(IndexPair m, IndexPair n, ModPair c, WlTermCache* cache = nullptr) {
    detail::check_scale(c, 63, "s_wl_value");
    std::complex<double> v = 1.0;
    for (const auto& block : bfg_blocks(m, c)) {
        const i64 Lb = block.modulus.c1() * block.modulus.c2();
        const auto terms = cache ? cache->get(block.modulus)
                                 : std::make_shared<const std::vector<WlTerm>>(s_wl_terms_reduced(block.modulus));
        v *= tally_wl_terms(*terms, Lb, block.twisted_m, n).value();
    }
    return v;
}

inline std::complex<double> s_wl_value(CharPair m, CharPair n, ModPair c, WlTermCache* cache = nullptr) {
    return s_wl_value(m.raw(), n.raw(), c, cache);
}

// ---------------------------------------------------------------------------
// w4 / w5 sums

/// S_w4(psi_m, psi_n, (A1, B2)): sum over C2 mod B2, C1 mod A1 with
/// (A1/B2, C1) = (B2, C2) = 1 of e(-m2 C2bar C1/B2 - m1 C1bar B2/A1 - n2 C2/B2).
/// The explicit formula needs B2 | A1. Gated: zero unless B2 | A1 and
/// m2 c1 = n1 c2^2. Ungated: compatibility is ignored; B2 | A1 still required.
inline ExponentTally s_w4(CharPair m, CharPair n, ModPair c, bool gated) {
    const i64 A1 = c.c1(), B2 = c.c2();
    if (A1 % B2 != 0) {
        if (gated) return ExponentTally();
        throw precondition_error("s_w4: explicit formula requires the Bruhat divisibility c2 | c1");
    }
    if (gated && static_cast<i128>(m.m2()) * A1 != static_cast<i128>(n.m1()) * B2 * B2) return ExponentTally();
    const i64 d = A1 / B2;
    const i64 L = A1;
    TallyBuilder builder(L);
    std::vector<i64> C1bars(static_cast<std::size_t>(d), -1);
    for (i64 r = 0; r < d; ++r)
        if (std::gcd(d, r) == 1) C1bars[static_cast<std::size_t>(r)] = inv_mod(r, d).value;
    for (i64 C2 = 0; C2 < B2; ++C2) {
        if (std::gcd(B2, C2) != 1) continue;
        const i64 C2bar = inv_mod(C2, B2).value;
        for (i64 C1 = 0; C1 < A1; ++C1) {
            const i64 C1bar = C1bars[static_cast<std::size_t>(C1 % d)];
            if (C1bar < 0) continue;
            const i128 t = -static_cast<i128>(m.m2()) * mulmod(C2bar, mod(C1, B2), B2) * d -
                           static_cast<i128>(m.m1()) * C1bar * B2 - static_cast<i128>(n.m2()) * C2 * d;
            builder.add_reduced(mod(t, L));
        }
    }
    return builder.finish();
}

/// S_w5(psi_m, psi_n, (c1, c2)) = S_w4(psi_(-m2, m1), psi_(n2, -n1), (c2, c1)).
inline ExponentTally s_w5(CharPair m, CharPair n, ModPair c, bool gated) {
    return s_w4(CharPair(-m.m2(), m.m1()), CharPair(n.m2(), -n.m1()), ModPair(c.c2(), c.c1()), gated);
}

/// Degenerate sums for w in {I, w2, w3}; zero when the Bruhat or
/// compatibility conditions fail.
inline ExponentTally s_degenerate(WeylElement w, IndexPair m, IndexPair n, ModPair c) {
    switch (w) {
    case WeylElement::I:
        return (c.c1() == 1 && c.c2() == 1 && m == n) ? ExponentTally::one() : ExponentTally();
    case WeylElement::w2:
        if (c.c1() == 1 && m.first == 0 && n.first == 0) return kloosterman_classical(-m.second, -n.second, c.c2());
        return ExponentTally();
    case WeylElement::w3:
        if (c.c2() == 1 && m.second == 0 && n.second == 0) return kloosterman_classical(m.first, n.first, c.c1());
        return ExponentTally();
    default:
        throw precondition_error("s_degenerate: w must be one of I, w2, w3");
    }
}

// ---------------------------------------------------------------------------
// Bounds

inline double larsen_kappa() { return std::log(3.0) / std::log(2.0); }

/// Weil: |S(a,b,c)| <= d(c) sqrt((a,b,c)) sqrt(c).
inline BoundReport check_weil(i64 a, i64 b, i64 c) {
    const double computed = std::abs(kloosterman_classical(a, b, c).value());
    const double g = static_cast<double>(gcd3(a, b, c));
    const double bound = static_cast<double>(divisor_count(static_cast<u64>(c))) * std::sqrt(g) *
                         std::sqrt(static_cast<double>(c));
    return make_bound_report("weil(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                             computed, bound);
}

inline double stevens_bound(IndexPair m, IndexPair n, ModPair c) {
    const i64 A1 = c.c1(), A2 = c.c2();
    const i64 g = std::gcd(A1, A2);
    const i64 D = A1 / g * A2;
    const auto abs64 = [](i64 v) { return v < 0 ? -v : v; };
    const double g1 = static_cast<double>(std::gcd(abs64(m.first * n.second), D));
    const double g2 = static_cast<double>(std::gcd(abs64(m.second * n.first), D));
    return static_cast<double>(divisor_count(static_cast<u64>(A1)) * divisor_count(static_cast<u64>(A2))) *
           std::sqrt(g1 * g2 * static_cast<double>(g) * static_cast<double>(A1) * static_cast<double>(A2));
}

inline std::string describe(const char* kind, IndexPair m, IndexPair n, ModPair c) {
    return std::string(kind) + "(m=" + std::to_string(m.first) + "," + std::to_string(m.second) +
           ";n=" + std::to_string(n.first) + "," + std::to_string(n.second) + ";c=" + std::to_string(c.c1()) +
           "," + std::to_string(c.c2()) + ")";
}

inline BoundReport check_stevens(CharPair m, CharPair n, ModPair c, WlTermCache* cache = nullptr) {
    const double computed = std::abs(s_wl_value(m, n, c, cache));
    return make_bound_report(describe("stevens", m.raw(), n.raw(), c), computed, stevens_bound(m.raw(), n.raw(), c));
}

inline double larsen_bound(WeylElement w, IndexPair m, IndexPair n, ModPair c) {
    const double kappa = larsen_kappa();
    const auto abs64 = [](i64 v) { return v < 0 ? -v : v; };
    const i64 c1 = c.c1(), c2 = c.c2();
    if (w == WeylElement::w4) {
        const double first = std::pow(static_cast<double>(divisor_count(static_cast<u64>(c2))), kappa) *
                             static_cast<double>(std::gcd(abs64(m.first), c1 / c2)) * static_cast<double>(c2) *
                             static_cast<double>(c2);
        const double second = static_cast<double>(divisor_count(static_cast<u64>(c1))) *
                              static_cast<double>(gcd3(abs64(m.first), abs64(n.second), c2)) * static_cast<double>(c1);
        return std::min(first, second);
    }
    if (w == WeylElement::w5) {
        const double first = std::pow(static_cast<double>(divisor_count(static_cast<u64>(c1))), kappa) *
                             static_cast<double>(std::gcd(abs64(m.second), c2 / c1)) * static_cast<double>(c1) *
                             static_cast<double>(c1);
        const double second = static_cast<double>(divisor_count(static_cast<u64>(c2))) *
                              static_cast<double>(gcd3(abs64(m.second), abs64(n.first), c1)) * static_cast<double>(c2);
        return std::min(first, second);
    }
    throw precondition_error("larsen_bound: w must be w4 or w5");
}

/// Larsen's bound for the ungated w4 / w5 sum. The pair must satisfy the
/// Bruhat divisibility (c2 | c1 for w4, c1 | c2 for w5).
inline BoundReport check_larsen(WeylElement w, CharPair m, CharPair n, ModPair c) {
    ExponentTally t;
    if (w == WeylElement::w4)
        t = s_w4(m, n, c, false);
    else if (w == WeylElement::w5)
        t = s_w5(m, n, c, false);
    else
        throw precondition_error("check_larsen: w must be w4 or w5");
    return make_bound_report(describe(w == WeylElement::w4 ? "larsen_w4" : "larsen_w5", m.raw(), n.raw(), c),
                             std::abs(t.value()), larsen_bound(w, m.raw(), n.raw(), c));
}

inline bool bruhat_admissible(WeylElement w, ModPair c) {
    switch (w) {
    case WeylElement::I: return c.c1() == 1 && c.c2() == 1;
    case WeylElement::w2: return c.c1() == 1;
    case WeylElement::w3: return c.c2() == 1;
    case WeylElement::w4: return c.c1() % c.c2() == 0;
    case WeylElement::w5: return c.c2() % c.c1() == 0;
    case WeylElement::wl: return true;
    }
    return false;
}

} // namespace kloss3
