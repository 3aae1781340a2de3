#pragma once

// Complex log-gamma and pole-aware gamma products.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "kloss3/error.hpp"

namespace kloss3 {

using cd = std::complex<double>;

namespace detail {

inline bool at_gamma_pole(cd z) {
    if (z.imag() != 0.0 || z.real() > 0.0) return false;
    return z.real() == std::nearbyint(z.real());
}

// B_{2k} / (2k (2k - 1)) for k = 1..8.
inline constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,         1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,    1.0 / 156.0,         -3617.0 / 122400.0,
};

inline cd lgamma_stirling(cd z) {
    const cd inv = 1.0 / z;
    const cd inv2 = inv * inv;
    cd series = 0.0;
    cd p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// Lanczos approximation, g = 7, n = 9. Valid for Re z >= 0.5.
inline cd lgamma_lanczos(cd z) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    z -= 1.0;
    cd x = c[0];
    for (int i = 1; i < 9; ++i) x += c[static_cast<std::size_t>(i)] / (z + static_cast<double>(i));
    const cd t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace detail

/// log Gamma(z), analytic on C minus the non-positive real axis; agrees with
/// the principal branch of log Gamma on the positive reals.
inline cd lgamma_c(cd z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw precondition_error("lgamma_c: argument must be finite");
    if (detail::at_gamma_pole(z))
        throw pole_error("lgamma_c: pole of Gamma at z = " + std::to_string(z.real()));
    cd shift = 0.0;
    while (z.real() < 0.5) {
        shift += std::log(z);
        z += 1.0;
    }
    return (std::abs(z) < 15.0 ? detail::lgamma_lanczos(z) : detail::lgamma_stirling(z)) - shift;
}

inline cd gamma_c(cd z) { return std::exp(lgamma_c(z)); }

/// Product of Gamma factors in the numerator over Gamma factors in the
/// denominator, times a scalar. A denominator pole makes the product zero; a
/// numerator pole raises pole_error naming the factor.
class GammaRatio {
public:
    GammaRatio& num(cd z, std::string label = {}) {
        if (detail::at_gamma_pole(z)) {
            if (pole_.empty()) pole_ = label.empty() ? "numerator Gamma" : label;
        } else {
            log_ += lgamma_c(z);
        }
        return *this;
    }
    GammaRatio& den(cd z) {
        if (detail::at_gamma_pole(z))
            zero_ = true;
        else
            log_ -= lgamma_c(z);
        return *this;
    }
    GammaRatio& times(cd factor) {
        if (factor == cd(0.0)) {
            zero_ = true;
        } else {
            log_ += std::log(factor);
        }
        return *this;
    }
    /// Multiplies by exp(w).
    GammaRatio& times_exp(cd w) {
        log_ += w;
        return *this;
    }

    bool is_zero() const { return zero_ && pole_.empty(); }

    cd value() const {
        if (!pole_.empty()) {
            if (zero_) throw pole_error("GammaRatio: indeterminate pole/zero combination at " + pole_);
            throw pole_error("GammaRatio: pole at " + pole_);
        }
        if (zero_) return 0.0;
        return std::exp(log_);
    }

private:
    cd log_ = 0.0;
    bool zero_ = false;
    std::string pole_;
};

/// Euler beta function B(a, b).
inline cd beta_c(cd a, cd b) { return GammaRatio().num(a, "a").num(b, "b").den(a + b).value(); }

} // namespace kloss3
