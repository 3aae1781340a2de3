#pragma once

// Spectral special functions for SL(3): the Mellin kernel G(u, mu), its
// residues, the completion factor Lambda, and the closed-form weights
// K_wl, J_I, C*, |c3|^-2 and k_adj. Every gamma product goes through
// GammaRatio so reciprocal-gamma zeros come out as exact zeros.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "kloss3/gamma.hpp"

namespace kloss3 {

/// Langlands parameters; mu3 = -mu1 - mu2 is always derived.
class SpectralPoint {
public:
    SpectralPoint() = default;
    SpectralPoint(cd mu1, cd mu2) : mu1_(mu1), mu2_(mu2) {}

    /// From a full triple; the third entry must equal -mu1 - mu2 to 1e-12.
    static SpectralPoint from_triple(cd a, cd b, cd c) {
        if (std::abs(a + b + c) > 1e-12 * (1.0 + std::abs(a) + std::abs(b) + std::abs(c)))
            throw precondition_error("SpectralPoint: mu1 + mu2 + mu3 must vanish");
        return {a, b};
    }

    cd mu1() const { return mu1_; }
    cd mu2() const { return mu2_; }
    cd mu3() const { return -mu1_ - mu2_; }
    std::array<cd, 3> mu() const { return {mu1_, mu2_, mu3()}; }
    /// mu_i with 1-based index.
    cd operator()(int i) const { return mu()[static_cast<std::size_t>(i - 1)]; }

    /// (mu_{p0}, mu_{p1}, mu_{p2}) with 0-based p.
    SpectralPoint permuted(const std::array<int, 3>& p) const {
        const auto m = mu();
        return {m[static_cast<std::size_t>(p[0])], m[static_cast<std::size_t>(p[1])]};
    }
    SpectralPoint operator-() const { return {-mu1_, -mu2_}; }
    SpectralPoint conj() const { return {std::conj(mu1_), std::conj(mu2_)}; }

private:
    cd mu1_ = 0.0;
    cd mu2_ = 0.0;
};

inline const std::array<std::array<int, 3>, 6>& all_permutations() {
    static const std::array<std::array<int, 3>, 6> p = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return p;
}

struct MellinPoint {
    cd u1 = 0.0;
    cd u2 = 0.0;
};

/// Vertical-line quadrature: nodes real_part + i t, t symmetric in
/// [-half_width, half_width].
struct ContourSpec {
    double real_part = 2.0;
    double half_width = 30.0;
    int nodes = 601;

    void validate() const {
        if (!(half_width > 0.0)) throw precondition_error("ContourSpec: half_width must be positive");
        if (nodes < 64) throw precondition_error("ContourSpec: node count must be >= 64");
    }
};

class DeltaParam {
public:
    explicit DeltaParam(double delta = 0.1) : delta_(delta) {
        if (!(delta > 0.0 && delta <= 1.0)) throw precondition_error("DeltaParam: delta must lie in (0, 1]");
    }
    double value() const { return delta_; }

private:
    double delta_;
};

namespace detail {

/// ((3 + 2 delta)^2 - d^2)^p, principal power (real on the real axis).
inline cd adj_power(cd d, double delta, double p) {
    const double a = 3.0 + 2.0 * delta;
    return std::pow(cd(a * a) - d * d, cd(p));
}

inline const std::array<std::pair<int, int>, 3>& ordered_pairs() {
    static const std::array<std::pair<int, int>, 3> p = {{{1, 2}, {1, 3}, {2, 3}}};
    return p;
}

} // namespace detail

/// Lambda(mu) = pi^(-3/2 + mu3 - mu1) Gamma((1+mu1-mu2)/2) Gamma((1+mu1-mu3)/2) Gamma((1+mu2-mu3)/2).
inline cd big_lambda(const SpectralPoint& mu) {
    const cd m1 = mu(1), m2 = mu(2), m3 = mu(3);
    return GammaRatio()
        .num((1.0 + m1 - m2) / 2.0, "Gamma((1+mu1-mu2)/2)")
        .num((1.0 + m1 - m3) / 2.0, "Gamma((1+mu1-mu3)/2)")
        .num((1.0 + m2 - m3) / 2.0, "Gamma((1+mu2-mu3)/2)")
        .times_exp((-1.5 + m3 - m1) * std::log(std::numbers::pi))
        .value();
}

inline GammaRatio g_ratio(const MellinPoint& u, const SpectralPoint& mu) {
    GammaRatio r;
    const auto m = mu.mu();
    for (int i = 0; i < 3; ++i)
        r.num((u.u1 - m[static_cast<std::size_t>(i)]) / 2.0, "Gamma((u1-mu" + std::to_string(i + 1) + ")/2)");
    for (int i = 0; i < 3; ++i)
        r.num((u.u2 + m[static_cast<std::size_t>(i)]) / 2.0, "Gamma((u2+mu" + std::to_string(i + 1) + ")/2)");
    r.den((u.u1 + u.u2) / 2.0);
    return r;
}

/// G(u, mu): six gammas over Gamma((u1 + u2)/2).
inline cd g_fn(const MellinPoint& u, const SpectralPoint& mu) { return g_ratio(u, mu).value(); }

inline cd g_star(const MellinPoint& u, const SpectralPoint& mu) { return g_fn(u, mu) / big_lambda(mu); }

/// Residues of G* at u1 = mu1 (G*_l, a function of u2), at u2 = -mu2 (G*_r, a
/// function of u1) and at both (G*_b).
struct GStarResidues {
    SpectralPoint mu;

    cd left(cd u2) const {
        const cd m1 = mu(1), m2 = mu(2), m3 = mu(3);
        return GammaRatio()
            .times(2.0)
            .times_exp((1.5 + m1 - m3) * std::log(std::numbers::pi))
            .num((m1 - m2) / 2.0, "Gamma((mu1-mu2)/2)")
            .num((m1 - m3) / 2.0, "Gamma((mu1-mu3)/2)")
            .den((1.0 + m1 - m2) / 2.0)
            .den((1.0 + m1 - m3) / 2.0)
            .num((u2 + m2) / 2.0, "Gamma((u2+mu2)/2)")
            .num((u2 + m3) / 2.0, "Gamma((u2+mu3)/2)")
            .den((1.0 + m2 - m3) / 2.0)
            .value();
    }

    cd right(cd u1) const {
        const cd m1 = mu(1), m2 = mu(2), m3 = mu(3);
        return GammaRatio()
            .times(2.0)
            .times_exp((1.5 + m1 - m3) * std::log(std::numbers::pi))
            .num((m1 - m2) / 2.0, "Gamma((mu1-mu2)/2)")
            .num((m3 - m2) / 2.0, "Gamma((mu3-mu2)/2)")
            .den((1.0 + m1 - m2) / 2.0)
            .den((1.0 + m2 - m3) / 2.0)
            .num((u1 - m1) / 2.0, "Gamma((u1-mu1)/2)")
            .num((u1 - m3) / 2.0, "Gamma((u1-mu3)/2)")
            .den((1.0 + m1 - m3) / 2.0)
            .value();
    }

    cd both() const {
        const cd m1 = mu(1), m2 = mu(2), m3 = mu(3);
        return GammaRatio()
            .times(4.0)
            .times_exp((1.5 + m1 - m3) * std::log(std::numbers::pi))
            .num((m1 - m2) / 2.0, "Gamma((mu1-mu2)/2)")
            .num((m1 - m3) / 2.0, "Gamma((mu1-mu3)/2)")
            .num((m3 - m2) / 2.0, "Gamma((mu3-mu2)/2)")
            .den((1.0 + m1 - m2) / 2.0)
            .den((1.0 + m1 - m3) / 2.0)
            .den((1.0 + m2 - m3) / 2.0)
            .value();
    }
};

inline GStarResidues g_star_residues(const SpectralPoint& mu) { return {mu}; }

/// K_wl(mu) with the index set S = {(1,2), (1,3), (3,2)}.
inline cd k_wl(const SpectralPoint& mu, DeltaParam delta) {
    const double D = delta.value();
    static const std::array<std::pair<int, int>, 3> S = {{{1, 2}, {1, 3}, {3, 2}}};
    GammaRatio r;
    r.times(3.0 / 8.0).times_exp((2.0 * (mu(2) - mu(1)) - 8.5) * std::log(std::numbers::pi));
    for (const auto& [j, k] : S) {
        const cd mj = mu(j), mk = mu(k);
        r.num((1.0 + D + mk - mj) / 2.0, "Gamma((1+Delta+mu_k-mu_j)/2)")
            .num((1.0 + D + mj - mk) / 2.0, "Gamma((1+Delta+mu_j-mu_k)/2)")
            .times(detail::adj_power(mj - mk, D, -D / 2.0))
            .den((1.0 + mk - mj) / 2.0)
            .den((mk - mj) / 2.0);
    }
    return r.value();
}

/// k_adj(mu) = prod_{j<k} ((3 + 2 Delta)^2 - (mu_j - mu_k)^2)^(-Delta/2).
inline cd k_adj(const SpectralPoint& mu, DeltaParam delta) {
    cd p = 1.0;
    for (const auto& [j, k] : detail::ordered_pairs())
        p *= detail::adj_power(mu(j) - mu(k), delta.value(), -delta.value() / 2.0);
    return p;
}

inline cd c_star(const SpectralPoint& mu, DeltaParam delta) {
    const double D = delta.value();
    GammaRatio r;
    r.times_exp(1.5 * std::log(std::numbers::pi));
    for (int i = 0; i < 3; ++i) r.den((1.0 + D) / 2.0);
    for (const auto& [j, k] : detail::ordered_pairs()) {
        const cd d = mu(j) - mu(k);
        r.times(detail::adj_power(d, D, D / 2.0)).den((1.0 + D + d) / 2.0).den((1.0 + D - d) / 2.0);
    }
    return r.value();
}

inline cd j_i(const SpectralPoint& mu, DeltaParam delta) {
    cd num = 1.0;
    for (const auto& [j, k] : detail::ordered_pairs()) {
        const cd d = mu(j) - mu(k);
        num *= -std::numbers::pi / 2.0 * d * std::sin(std::numbers::pi / 2.0 * d);
    }
    if (num == cd(0.0)) return 0.0;
    return num / c_star(mu, delta);
}

/// |c3(mu)|^-2 as the holomorphic tan-product.
inline cd c3_inv_sq(const SpectralPoint& mu) {
    cd p = 4.0 / (std::numbers::pi * std::numbers::pi);
    for (const auto& [i, j] : detail::ordered_pairs()) {
        const cd d = mu(i) - mu(j);
        const cd c = std::cos(std::numbers::pi / 2.0 * d);
        if (c == cd(0.0)) throw pole_error("c3_inv_sq: tan pole at mu_i - mu_j odd");
        p *= -std::numbers::pi / 2.0 * d * std::sin(std::numbers::pi / 2.0 * d) / c;
    }
    return p;
}

struct IdentityCheck {
    cd lhs;
    cd rhs;
    double rel_err;
};

inline IdentityCheck make_check(cd lhs, cd rhs) {
    const double scale = std::abs(rhs);
    return {lhs, rhs, scale > 0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs)};
}

/// int_0^inf (1 + x^2)^u x^t dx against B((t+1)/2, (-2u-t-1)/2)/2.
/// Trapezoid rule after x = e^v; the integrand is analytic in |Im v| < pi/2.
inline IdentityCheck beta_integral_check(cd u, cd t) {
    const double lo_rate = t.real() + 1.0;
    const double hi_rate = -(2.0 * u.real() + t.real() + 1.0);
    if (!(lo_rate > 0.0 && hi_rate > 0.0))
        throw precondition_error("beta_integral_check: requires -1 < Re t < -1 - 2 Re u");
    const double h = 0.05;
    const double v_lo = -40.0 / lo_rate, v_hi = 40.0 / hi_rate;
    const long k_lo = static_cast<long>(std::floor(v_lo / h)), k_hi = static_cast<long>(std::ceil(v_hi / h));
    cd sum = 0.0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double v = static_cast<double>(k) * h;
        // (1 + e^{2v})^u = exp(u * log1p(e^{2v})) with a stable log1p for large v.
        const double l = v > 0 ? 2.0 * v + std::log1p(std::exp(-2.0 * v)) : std::log1p(std::exp(2.0 * v));
        sum += std::exp(u * l + (t + 1.0) * v);
    }
    const cd lhs = sum * h;
    const cd rhs = beta_c((t + 1.0) / 2.0, (-2.0 * u - t - 1.0) / 2.0) / 2.0;
    return make_check(lhs, rhs);
}

/// Centered, Richardson-refined estimate of lim_{e -> 0} e f(x0 + e), for f
/// with a simple pole at x0.
inline cd numeric_residue(const std::function<cd(cd)>& f, cd x0, double h = 1e-6) {
    auto centered = [&](double s) { return (s * f(x0 + s) - s * f(x0 - s)) / 2.0; };
    const cd a = centered(h), b = centered(h / 2.0);
    return (4.0 * b - a) / 3.0;
}

} // namespace kloss3
