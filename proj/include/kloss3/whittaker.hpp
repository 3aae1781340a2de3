#pragma once

// Completed Jacquet-Whittaker function W*(y, mu, psi_11) from its double
// Mellin-Barnes representation
//
//   W*(y) = 1/(16 pi^4) int int G(s + i t1, s + i t2; mu) (pi y1)^(1-u1) (pi y2)^(1-u2) dt1 dt2
//
// on the vertical lines Re u = (s, s). The integrand is analytic in a strip
// around each line and decays exponentially, so the truncated trapezoid rule
// converges geometrically in the node spacing.
//
// G factors as N1(t1) N2(t2) / Gamma((u1 + u2)/2) and on a uniform grid
// u1 + u2 only takes 2N - 1 values, so a tensor grid of y-values costs one
// N x N pass per y1 row.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "kloss3/analytic.hpp"
#include "kloss3/error.hpp"

namespace kloss3 {

struct WhittakerResult {
    cd value;
    double error_estimate;
};

/// Contour with node spacing about 0.1 and a half width that grows with the
/// spectral parameter's imaginary parts.
inline ContourSpec default_contour(const SpectralPoint& mu, double real_part = 2.0, double spacing = 0.1) {
    double im = 0.0;
    for (cd m : mu.mu()) im = std::max(im, std::abs(m.imag()));
    ContourSpec c;
    c.real_part = real_part;
    c.half_width = 30.0 + 2.0 * im;
    c.nodes = std::max(64, 2 * static_cast<int>(std::ceil(c.half_width / spacing)) + 1);
    return c;
}

/// Closer-to-the-poles line for small-y work: relative cancellation in the
/// integral is about (pi y)^(s - 1) / W*, so a smaller real part helps.
inline double near_contour_real_part(const SpectralPoint& mu, double margin = 0.5) {
    double r = 0.0;
    for (cd m : mu.mu()) r = std::max(r, std::abs(m.real()));
    return r + margin;
}

class WhittakerKernel {
public:
    WhittakerKernel(const SpectralPoint& mu, const ContourSpec& contour) : contour_(contour) {
        contour.validate();
        const double s = contour.real_part;
        for (cd m : mu.mu())
            if (!(s > m.real() && s > -m.real()))
                throw precondition_error("whittaker: contour real part must exceed max Re(mu_i) and max Re(-mu_i)");
        const int n = contour.nodes;
        h_ = 2.0 * contour.half_width / (n - 1);
        t_.resize(static_cast<std::size_t>(n));
        log_n1_.resize(t_.size());
        log_n2_.resize(t_.size());
        for (int j = 0; j < n; ++j) {
            const double t = -contour.half_width + j * h_;
            t_[static_cast<std::size_t>(j)] = t;
            const cd u(s, t);
            cd a = 0.0, b = 0.0;
            for (cd m : mu.mu()) {
                a += lgamma_c((u - m) / 2.0);
                b += lgamma_c((u + m) / 2.0);
            }
            log_n1_[static_cast<std::size_t>(j)] = a;
            log_n2_[static_cast<std::size_t>(j)] = b;
        }
        dinv_.resize(static_cast<std::size_t>(2 * n - 1));
        for (int k = 0; k < 2 * n - 1; ++k) {
            const cd u12(2.0 * s, -2.0 * contour.half_width + k * h_);
            dinv_[static_cast<std::size_t>(k)] = std::exp(-lgamma_c(u12 / 2.0));
        }
    }

    const ContourSpec& contour() const { return contour_; }

    /// W* on the tensor grid, row-major [i1 * y2s.size() + i2]. If `magnitude`
    /// is given it receives a bound on the integral of |integrand| (l1 norm of
    /// real and imaginary parts) per grid point, the scale of the cancellation.
    std::vector<cd> grid(const std::vector<double>& y1s, const std::vector<double>& y2s,
                         std::vector<double>* magnitude = nullptr) const {
        const std::size_t n = t_.size();
        const double s = contour_.real_part;
        const double pref = h_ * h_ / (16.0 * std::pow(std::numbers::pi, 4));
        struct Split {
            std::vector<double> re, im;
        };
        auto factors = [&](const std::vector<double>& ys, const std::vector<cd>& logn) {
            Split f{std::vector<double>(ys.size() * n), std::vector<double>(ys.size() * n)};
            for (std::size_t i = 0; i < ys.size(); ++i) {
                if (!(ys[i] > 0.0)) throw precondition_error("whittaker: y1, y2 must be positive");
                const double ly = std::log(std::numbers::pi * ys[i]);
                for (std::size_t j = 0; j < n; ++j) {
                    const cd z = std::exp(logn[j] + cd(1.0 - s, -t_[j]) * ly);
                    f.re[i * n + j] = z.real();
                    f.im[i * n + j] = z.imag();
                }
            }
            return f;
        };
        const Split a = factors(y1s, log_n1_);
        const Split b = factors(y2s, log_n2_);
        std::vector<double> dre(dinv_.size()), dim(dinv_.size());
        for (std::size_t k = 0; k < dinv_.size(); ++k) {
            dre[k] = dinv_[k].real();
            dim[k] = dinv_[k].imag();
        }
        std::vector<cd> out(y1s.size() * y2s.size());
        if (magnitude) magnitude->assign(out.size(), 0.0);
        std::vector<double> vre(n), vim(n), vmag(n);
        for (std::size_t i = 0; i < y1s.size(); ++i) {
            const double* ar = &a.re[i * n];
            const double* ai = &a.im[i * n];
            for (std::size_t k = 0; k < n; ++k) {
                const double* dr = &dre[k];
                const double* di = &dim[k];
                double sr = 0.0, si = 0.0, mag = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    const double tr = ar[j] * dr[j] - ai[j] * di[j];
                    const double ti = ar[j] * di[j] + ai[j] * dr[j];
                    sr += tr;
                    si += ti;
                    mag += std::fabs(tr) + std::fabs(ti);
                }
                vre[k] = sr;
                vim[k] = si;
                vmag[k] = mag;
            }
            for (std::size_t i2 = 0; i2 < y2s.size(); ++i2) {
                const double* br = &b.re[i2 * n];
                const double* bi = &b.im[i2 * n];
                double sr = 0.0, si = 0.0, mag = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    sr += vre[k] * br[k] - vim[k] * bi[k];
                    si += vre[k] * bi[k] + vim[k] * br[k];
                    mag += vmag[k] * (std::fabs(br[k]) + std::fabs(bi[k]));
                }
                out[i * y2s.size() + i2] = pref * cd(sr, si);
                if (magnitude) (*magnitude)[i * y2s.size() + i2] = pref * mag;
            }
        }
        return out;
    }

private:
    ContourSpec contour_;
    double h_ = 0.0;
    std::vector<double> t_;
    std::vector<cd> log_n1_;
    std::vector<cd> log_n2_;
    std::vector<cd> dinv_;
};

/// Same contour with the node spacing halved.
inline ContourSpec refined(const ContourSpec& c) {
    ContourSpec r = c;
    r.nodes = 2 * c.nodes - 1;
    return r;
}

/// W* on a tensor grid, refining the node spacing until two successive
/// spacings agree to `tol` relative (or to 1e-9 of the absolute integral).
inline std::vector<WhittakerResult> whittaker_grid(const std::vector<double>& y1s, const std::vector<double>& y2s,
                                                   const SpectralPoint& mu, ContourSpec contour, double tol = 1e-10,
                                                   int max_refinements = 3) {
    std::vector<double> mag;
    auto coarse = WhittakerKernel(mu, contour).grid(y1s, y2s);
    for (int r = 0; r <= max_refinements; ++r) {
        contour = refined(contour);
        auto fine = WhittakerKernel(mu, contour).grid(y1s, y2s, &mag);
        bool ok = true;
        std::vector<WhittakerResult> out(fine.size());
        for (std::size_t i = 0; i < fine.size(); ++i) {
            const double err = std::abs(fine[i] - coarse[i]);
            out[i] = {fine[i], err};
            if (err > std::max(tol * std::abs(fine[i]), 1e-9 * mag[i])) ok = false;
        }
        if (ok) return out;
        coarse = std::move(fine);
    }
    throw convergence_error("whittaker: node refinement did not reach the target tolerance");
}

inline WhittakerResult whittaker(double y1, double y2, const SpectralPoint& mu, const ContourSpec& contour,
                                 double tol = 1e-10) {
    return whittaker_grid({y1}, {y2}, mu, contour, tol).front();
}

inline WhittakerResult whittaker(double y1, double y2, const SpectralPoint& mu) {
    return whittaker(y1, y2, mu, default_contour(mu));
}

/// Uniform grid in log y used by the integral checks.
struct LogGrid {
    double lo = -32.0;
    double hi = 2.5;
    double step = 0.25;

    std::vector<double> points() const {
        std::vector<double> ys;
        const int n = static_cast<int>(std::lround((hi - lo) / step));
        for (int k = 0; k <= n; ++k) ys.push_back(std::exp(lo + k * step));
        return ys;
    }
};

/// W* on the log grid, evaluated on the near contour and checked against one
/// node refinement.
inline std::vector<cd> whittaker_on_grid(const SpectralPoint& mu, const LogGrid& g) {
    const auto ys = g.points();
    const auto res = whittaker_grid(ys, ys, mu, default_contour(mu, near_contour_real_part(mu)), 1e-8);
    std::vector<cd> out(res.size());
    for (std::size_t i = 0; i < res.size(); ++i) out[i] = res[i].value;
    return out;
}

/// Stade's identity: int W*(y, mu) W*(y, mu') y1^(2s) y2^s dy against
/// prod_{j,k} Gamma((s + mu_j + mu'_k)/2) / (4 pi^(3s) Gamma(3s/2)),
/// with dy = dy1 dy2 / (y1 y2)^3.
inline IdentityCheck stade_check(const SpectralPoint& mu, const SpectralPoint& mup, cd s, const LogGrid& g = {}) {
    if (s.real() < 1.0) throw precondition_error("stade_check: requires Re(s) >= 1");
    const auto ys = g.points();
    const auto w = whittaker_on_grid(mu, g);
    const auto wp = whittaker_on_grid(mup, g);
    const std::size_t n = ys.size();
    cd lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cd f1 = std::exp((2.0 * s - 2.0) * std::log(ys[i]));
        cd row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += w[i * n + j] * wp[i * n + j] * std::exp((s - 2.0) * std::log(ys[j]));
        lhs += f1 * row;
    }
    lhs *= g.step * g.step;
    GammaRatio r;
    for (cd a : mu.mu())
        for (cd b : mup.mu()) r.num((s + a + b) / 2.0, "Gamma((s+mu_j+mu'_k)/2)");
    r.times(0.25).times_exp(-3.0 * s * std::log(std::numbers::pi)).den(1.5 * s);
    return make_check(lhs, r.value());
}

/// Mellin inverse check: G(u, mu) = 4 pi^2 int W*(y) (pi y1)^(u1-1) (pi y2)^(u2-1) dy1 dy2 / (y1 y2).
inline IdentityCheck mellin_roundtrip_check(const MellinPoint& u, const SpectralPoint& mu, const LogGrid& g = {}) {
    const auto ys = g.points();
    const auto w = whittaker_on_grid(mu, g);
    const std::size_t n = ys.size();
    cd sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cd f1 = std::exp((u.u1 - 1.0) * std::log(std::numbers::pi * ys[i]));
        cd row = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            row += w[i * n + j] * std::exp((u.u2 - 1.0) * std::log(std::numbers::pi * ys[j]));
        sum += f1 * row;
    }
    const cd lhs = 4.0 * std::numbers::pi * std::numbers::pi * g.step * g.step * sum;
    return make_check(lhs, g_fn(u, mu));
}

} // namespace kloss3
