#pragma once

// Partial-sum experiments: the 1/c-weighted classical sum, Kloosterman zeta
// partial sums and the smoothed long-element sum, plus log-log growth fits.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kloss3/arith.hpp"
#include "kloss3/ksums.hpp"
#include "kloss3/parallel.hpp"

namespace kloss3 {

// ---------------------------------------------------------------------------
// Growth fits

struct GrowthRecord {
    double scale = 0.0;
    std::complex<double> value;
    double abs = 0.0;
    i64 term_count = 0;
};

struct FitResult {
    double slope = std::numeric_limits<double>::quiet_NaN();
    double intercept = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::quiet_NaN();  // RMS of log residuals
    std::size_t points = 0;
};

struct GrowthSeries {
    std::vector<GrowthRecord> records;
    double fitted_slope = std::numeric_limits<double>::quiet_NaN();
    IndexPair fit_window{0, 0};  // half-open record index range [first, second)
    double residual = std::numeric_limits<double>::quiet_NaN();
};

/// Least-squares line through (log scale, log |value|), skipping |value| == 0.
inline FitResult fit_loglog(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> xy;
    for (const auto& [x, v] : points) {
        if (!(x > 0.0)) throw precondition_error("fit_growth: scales must be positive");
        if (std::abs(v) > 0.0) xy.emplace_back(std::log(x), std::log(std::abs(v)));
    }
    if (xy.size() < 4) throw precondition_error("fit_growth: requires at least 4 points with nonzero value");
    const double n = static_cast<double>(xy.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (!(sxx > 0.0)) throw precondition_error("fit_growth: scales must not all coincide");
    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss = 0.0;
    for (const auto& [x, y] : xy) {
        const double e = y - (r.intercept + r.slope * x);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / n);
    r.points = xy.size();
    return r;
}

inline double fit_growth(const std::vector<std::pair<double, double>>& points) { return fit_loglog(points).slope; }

/// Fits records with scale >= min_scale. Leaves the slope NaN and the window
/// empty when fewer than 4 usable records remain.
inline void fit_series(GrowthSeries& s, double min_scale = 0.0) {
    std::size_t first = s.records.size();
    for (std::size_t i = 0; i < s.records.size(); ++i)
        if (s.records[i].scale >= min_scale) {
            first = i;
            break;
        }
    std::vector<std::pair<double, double>> pts;
    std::size_t nonzero = 0;
    for (std::size_t i = first; i < s.records.size(); ++i) {
        pts.emplace_back(s.records[i].scale, s.records[i].abs);
        if (s.records[i].abs > 0.0) ++nonzero;
    }
    if (nonzero < 4) {
        s.fit_window = {0, 0};
        return;
    }
    const FitResult f = fit_loglog(pts);
    s.fitted_slope = f.slope;
    s.residual = f.residual;
    s.fit_window = {static_cast<i64>(first), static_cast<i64>(s.records.size())};
}

/// Differences of successive record values (Cauchy increments).
inline std::vector<double> increments(const GrowthSeries& s) {
    std::vector<double> out;
    for (std::size_t i = 1; i < s.records.size(); ++i) out.push_back(s.records[i].abs - s.records[i - 1].abs);
    return out;
}

// ---------------------------------------------------------------------------
// Classical sums through the prime-power factorization

/// Evaluates S(a, b, c) as a product over the prime-power parts q || c,
/// S(a, b, q r) = S(rbar a, rbar b, q) S(qbar a, qbar b, r). A part with a or b
/// a unit reduces to S(1, ab, q), which is a single pass over the units with
/// an inverse table and no per-term multiplication. Not thread-safe; use one
/// instance per worker.
class ClassicalEvaluator {
public:
    static constexpr i64 kCacheLimit = 4096;

    double value(i64 a, i64 b, i64 c) {
        if (c < 1) throw precondition_error("ClassicalEvaluator: c must be >= 1");
        if (c > (i64{1} << 31)) throw overflow_guard_error("ClassicalEvaluator: modulus too large");
        double v = 1.0;
        for (const auto& f : factor(static_cast<u64>(c)).factors) {
            const i64 q = static_cast<i64>(ipow(f.prime, f.exponent));
            const i64 r = c / q;
            const i64 rbar = inv_mod(r % q, q).value;
            v *= part(mulmod(rbar, mod(a, q), q), mulmod(rbar, mod(b, q), q), q, static_cast<i64>(f.prime));
            if (v == 0.0) break;
        }
        return v + 0.0;
    }

private:
    struct Table {
        std::vector<std::uint32_t> inv;  // 0 marks a non-unit
        std::vector<double> hc, hs, lc, ls;
        i64 block = 1;

        double cos_at(i64 t) const {
            const auto hi = static_cast<std::size_t>(t / block), lo = static_cast<std::size_t>(t % block);
            return hc[hi] * lc[lo] - hs[hi] * ls[lo];
        }
    };

    static void build(Table& tb, i64 q, i64 p) {
        tb.inv.assign(static_cast<std::size_t>(q), 0);
        if (q == p) {
            const auto uq = static_cast<std::uint32_t>(q);
            tb.inv[1] = 1;
            for (std::uint32_t i = 2; i < uq; ++i)
                tb.inv[i] = static_cast<std::uint32_t>(static_cast<u64>(uq - uq / i) * tb.inv[uq % i] % uq);
        } else {
            for (i64 i = 1; i < q; ++i)
                if (i % p != 0) tb.inv[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(inv_mod(i, q).value);
        }
        tb.block = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(q))));
        const i64 nh = (q + tb.block - 1) / tb.block;
        tb.hc.resize(static_cast<std::size_t>(nh));
        tb.hs.resize(tb.hc.size());
        tb.lc.resize(static_cast<std::size_t>(tb.block));
        tb.ls.resize(tb.lc.size());
        for (i64 h = 0; h < nh; ++h) {
            const auto z = unit_root(h * tb.block, q);
            tb.hc[static_cast<std::size_t>(h)] = z.real();
            tb.hs[static_cast<std::size_t>(h)] = z.imag();
        }
        for (i64 l = 0; l < tb.block; ++l) {
            const auto z = unit_root(l, q);
            tb.lc[static_cast<std::size_t>(l)] = z.real();
            tb.ls[static_cast<std::size_t>(l)] = z.imag();
        }
    }

    const Table& table(i64 q, i64 p) {
        if (q <= kCacheLimit) {
            auto [it, fresh] = cache_.try_emplace(q);
            if (fresh) build(it->second, q, p);
            return it->second;
        }
        build(scratch_, q, p);
        return scratch_;
    }

    double part(i64 a, i64 b, i64 q, i64 p) {
        if (q == 1) return 1.0;
        const Table& tb = table(q, p);
        const bool au = a % p != 0, bu = b % p != 0;
        double s = 0.0;
        if (au || bu) {
            const i64 k = mulmod(a, b, q);
            // S(1, k, q) = sum over units y of e((ybar + k y)/q).
            i64 ky = 0;
            for (i64 y = 1; y < q; ++y) {
                ky += k;
                if (ky >= q) ky -= q;
                const i64 yb = tb.inv[static_cast<std::size_t>(y)];
                if (yb == 0) continue;
                i64 t = yb + ky;
                if (t >= q) t -= q;
                s += tb.cos_at(t);
            }
        } else {
            for (i64 y = 1; y < q; ++y) {
                const i64 yb = tb.inv[static_cast<std::size_t>(y)];
                if (yb == 0) continue;
                s += tb.cos_at((mulmod(a, yb, q) + mulmod(b, y, q)) % q);
            }
        }
        return s;
    }

    std::unordered_map<i64, Table> cache_;
    Table scratch_;
};

// ---------------------------------------------------------------------------
// Linnik / Kuznetsov partial sums

struct LinnikResult {
    GrowthSeries weighted;    // sum_{c <= T} S(n, m, c) / c
    GrowthSeries unweighted;  // sum_{c <= T} S(n, m, c)
};

/// Checkpoints 2^k <= T, plus T itself when it is not a power of two.
inline std::vector<i64> doubling_checkpoints(i64 T) {
    std::vector<i64> out;
    for (i64 k = 1; k <= T; k *= 2) out.push_back(k);
    if (!out.empty() && out.back() != T) out.push_back(T);
    return out;
}

inline LinnikResult linnik_sum(i64 n, i64 m, double T, unsigned threads = 1, double fit_min_scale = 1024.0) {
    if (!(T <= 1e5)) throw precondition_error("linnik_sum: T must be <= 1e5");
    LinnikResult out;
    if (T < 1.0) return out;
    const i64 Ti = static_cast<i64>(std::floor(T));
    std::vector<double> s(static_cast<std::size_t>(Ti) + 1, 0.0);
    constexpr i64 kChunk = 256;
    const i64 chunks = (Ti + kChunk - 1) / kChunk;
    parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t k) {
        ClassicalEvaluator ev;
        const i64 lo = static_cast<i64>(k) * kChunk + 1, hi = std::min(Ti, lo + kChunk - 1);
        for (i64 c = lo; c <= hi; ++c) s[static_cast<std::size_t>(c)] = ev.value(n, m, c);
    });
    double acc_w = 0.0, acc_u = 0.0;
    std::size_t next = 0;
    const auto marks = doubling_checkpoints(Ti);
    for (i64 c = 1; c <= Ti; ++c) {
        acc_w += s[static_cast<std::size_t>(c)] / static_cast<double>(c);
        acc_u += s[static_cast<std::size_t>(c)];
        if (next < marks.size() && c == marks[next]) {
            out.weighted.records.push_back({static_cast<double>(c), acc_w, std::abs(acc_w), c});
            out.unweighted.records.push_back({static_cast<double>(c), acc_u, std::abs(acc_u), c});
            ++next;
        }
    }
    fit_series(out.weighted, fit_min_scale);
    fit_series(out.unweighted, fit_min_scale);
    return out;
}

// ---------------------------------------------------------------------------
// Kloosterman zeta partial sums

/// Sums |S_w(psi_m, psi_n, c)| times the zeta weight over c1, c2 <= C at the
/// doubling checkpoints up to Cmax. w4 and w5 use the gated sums and u.first.
inline GrowthSeries zeta_partial_sum(WeylElement w, CharPair m, CharPair n, std::pair<double, double> u, i64 Cmax,
                                     unsigned threads = 1, WlTermCache* cache = nullptr) {
    if (w != WeylElement::w4 && w != WeylElement::w5 && w != WeylElement::wl)
        throw precondition_error("zeta_partial_sum: w must be w4, w5 or wl");
    if (Cmax < 1) throw precondition_error("zeta_partial_sum: Cmax must be >= 1");
    if (w == WeylElement::wl && Cmax > 4096) throw precondition_error("zeta_partial_sum: Cmax must be <= 4096 for wl");

    // Cells that can be nonzero, grouped by max(c1, c2).
    std::vector<ModPair> cells;
    if (w == WeylElement::wl) {
        for (i64 M = 1; M <= Cmax; ++M) {
            for (i64 c1 = 1; c1 < M; ++c1) cells.emplace_back(c1, M);
            for (i64 c2 = 1; c2 <= M; ++c2) cells.emplace_back(M, c2);
        }
    } else {
        // Gate for w4: c2 | c1 and m2 c1 = n1 c2^2; for w5: c1 | c2 and m1 c2 = n2 c1^2.
        const bool w5 = w == WeylElement::w5;
        const i64 num = w5 ? n.m2() : n.m1();
        const i64 den = w5 ? m.m1() : m.m2();
        for (i64 b = 1; b <= Cmax; ++b) {
            const i128 x = static_cast<i128>(num) * b * b;
            if (x % den != 0) continue;
            const i128 a = x / den;
            if (a < 1 || a > Cmax || a % b != 0) continue;
            cells.push_back(w5 ? ModPair(b, static_cast<i64>(a)) : ModPair(static_cast<i64>(a), b));
        }
        std::sort(cells.begin(), cells.end(), [](const ModPair& x, const ModPair& y) {
            const i64 mx = std::max(x.c1(), x.c2()), my = std::max(y.c1(), y.c2());
            return mx != my ? mx < my : std::pair(x.c1(), x.c2()) < std::pair(y.c1(), y.c2());
        });
    }

    std::vector<double> terms(cells.size(), 0.0);
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        const ModPair c = cells[i];
        const double c1 = static_cast<double>(c.c1()), c2 = static_cast<double>(c.c2());
        double a = 0.0, weight = 0.0;
        switch (w) {
        case WeylElement::w4:
            a = std::abs(s_w4(m, n, c, true).value());
            weight = std::pow(c2, 3.0 * u.first) / (c1 * c2);
            break;
        case WeylElement::w5:
            a = std::abs(s_w5(m, n, c, true).value());
            weight = std::pow(c1, 3.0 * u.first) / (c1 * c2);
            break;
        default:
            a = std::abs(s_wl_value(m, n, c, cache));
            weight = std::pow(c1 * c1 / c2, u.first) * std::pow(c2 * c2 / c1, u.second) / (c1 * c2);
        }
        terms[i] = a * weight;
    });

    GrowthSeries out;
    const auto marks = doubling_checkpoints(Cmax);
    double acc = 0.0;
    i64 nonzero = 0;
    std::size_t i = 0;
    for (i64 C : marks) {
        for (; i < cells.size() && std::max(cells[i].c1(), cells[i].c2()) <= C; ++i) {
            acc += terms[i];
            if (terms[i] > 0.0) ++nonzero;
        }
        out.records.push_back({static_cast<double>(C), acc, acc, nonzero});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smoothed long-element sum

/// Product test function f(y1, y2) = g1(y1) g2(y2). Each g is the bump
/// exp(4 / ((2s - 1)(s - 2))) on s in (1/2, 2), moved affinely onto
/// (lo, hi); a window with lo >= hi on either axis is identically zero.
struct SmoothWindow {
    double lo1 = 0.5, hi1 = 2.0;
    double lo2 = 0.5, hi2 = 2.0;

    static double bump(double t, double lo, double hi) {
        if (!(t > lo && t < hi)) return 0.0;
        const double s = 0.5 + 1.5 * (t - lo) / (hi - lo);
        return std::exp(4.0 / ((2.0 * s - 1.0) * (s - 2.0)));
    }

    bool empty() const { return !(lo1 < hi1 && lo2 < hi2); }
    bool in_support(double a1, double a2) const { return a1 > lo1 && a1 < hi1 && a2 > lo2 && a2 < hi2; }
    double operator()(double y1, double y2) const { return bump(y1, lo1, hi1) * bump(y2, lo2, hi2); }

    void validate() const {
        if (!(lo1 > 0.0 && lo2 > 0.0) || !std::isfinite(hi1) || !std::isfinite(hi2))
            throw precondition_error("SmoothWindow: support must be a finite interval in (0, inf) on each axis");
    }
};

/// The two arguments of f for modulus (c1, c2).
inline std::pair<double, double> smoothed_arguments(IndexPair k, double X, double Y, i64 c1, i64 c2) {
    const double d1 = static_cast<double>(c1), d2 = static_cast<double>(c2);
    return {X * std::numbers::pi * d2 * static_cast<double>(k.first) / (d1 * d1),
            Y * std::numbers::pi * d1 * static_cast<double>(k.second) / (d2 * d2)};
}

/// Enumeration bounds for c1 and c2 implied by the lower support edges.
inline std::pair<i64, i64> smoothed_bounds(CharPair m, CharPair n, double X, double Y, const SmoothWindow& win) {
    const double k1 = std::abs(static_cast<double>(m.m1() * n.m2()));
    const double k2 = std::abs(static_cast<double>(m.m2() * n.m1()));
    const double b1 = std::numbers::pi * std::cbrt(X * X * Y * k1 * k1 * k2 / (win.lo1 * win.lo1 * win.lo2));
    const double b2 = std::numbers::pi * std::cbrt(X * Y * Y * k2 * k2 * k1 / (win.lo2 * win.lo2 * win.lo1));
    return {static_cast<i64>(std::ceil(b1)), static_cast<i64>(std::ceil(b2))};
}

/// Moduli (c1, c2) with both arguments inside the window support, sorted.
inline std::vector<ModPair> smoothed_cells(CharPair m, CharPair n, double X, double Y, const SmoothWindow& win) {
    win.validate();
    if (!(X > 0.0 && Y > 0.0)) throw precondition_error("smoothed_wl_sum: X and Y must be positive");
    std::vector<ModPair> cells;
    if (win.empty()) return cells;
    const IndexPair k{std::abs(m.m1() * n.m2()), std::abs(m.m2() * n.m1())};
    const auto [B1, B2] = smoothed_bounds(m, n, X, Y, win);
    if (B1 > (i64{1} << 20) || B2 > (i64{1} << 20))
        throw precondition_error("smoothed_wl_sum: X, Y too large for the runtime budget");
    const double scale = std::numbers::pi * X * static_cast<double>(k.first);
    for (i64 c1 = 1; c1 <= B1; ++c1) {
        const double sq = static_cast<double>(c1) * static_cast<double>(c1);
        const i64 from = std::max<i64>(1, static_cast<i64>(std::floor(win.lo1 * sq / scale)));
        const i64 to = std::min<i64>(B2, static_cast<i64>(std::ceil(win.hi1 * sq / scale)));
        for (i64 c2 = from; c2 <= to; ++c2) {
            const auto [a1, a2] = smoothed_arguments(k, X, Y, c1, c2);
            if (win.in_support(a1, a2)) cells.emplace_back(c1, c2);
        }
    }
    return cells;
}

struct SmoothedResult {
    std::complex<double> value;
    double trivial = 0.0;     // sum of |S_wl| / (c1 c2) |f|
    double tail_share = 0.0;  // share of `trivial` from cells with c1^2 < c2 or c2^2 < c1
    i64 terms = 0;            // number of (c1, c2) cells
    i64 evaluations = 0;      // cells times sign vectors
};

inline SmoothedResult smoothed_wl_sum(CharPair m, CharPair n, double X, double Y, const SmoothWindow& win = {},
                                      unsigned threads = 1, WlTermCache* cache = nullptr) {
    const auto cells = smoothed_cells(m, n, X, Y, win);
    const IndexPair k{std::abs(m.m1() * n.m2()), std::abs(m.m2() * n.m1())};
    struct Cell {
        std::complex<double> value;
        double trivial = 0.0;
    };
    std::vector<Cell> per(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        const ModPair c = cells[i];
        const auto [a1, a2] = smoothed_arguments(k, X, Y, c.c1(), c.c2());
        const double f = win(a1, a2) / (static_cast<double>(c.c1()) * static_cast<double>(c.c2()));
        Cell out;
        for (i64 v1 : {1, -1})
            for (i64 v2 : {1, -1}) {
                const auto s = s_wl_value(m.raw(), {v1 * n.m1(), v2 * n.m2()}, c, cache);
                out.value += s * f;
                out.trivial += std::abs(s) * std::abs(f);
            }
        per[i] = out;
    });
    SmoothedResult r;
    double tail = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        r.value += per[i].value;
        r.trivial += per[i].trivial;
        const i64 c1 = cells[i].c1(), c2 = cells[i].c2();
        if (c1 * c1 < c2 || c2 * c2 < c1) tail += per[i].trivial;
    }
    r.tail_share = r.trivial > 0.0 ? tail / r.trivial : 0.0;
    r.terms = static_cast<i64>(cells.size());
    r.evaluations = 4 * r.terms;
    return r;
}

} // namespace kloss3
