#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kloss3/experiments.hpp"

using namespace kloss3;

namespace {

double classical_direct(i64 a, i64 b, i64 c) {
    double s = 0.0;
    for (i64 x = 0; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        i64 xb = 0;
        while (mod(static_cast<i128>(x) * xb, c) != 1 % c) ++xb;
        s += std::cos(2.0 * std::numbers::pi * static_cast<double>(mod(static_cast<i128>(a) * x + b * xb, c)) /
                      static_cast<double>(c));
    }
    return s;
}

double bump_ref(double t) { return (t > 0.5 && t < 2.0) ? std::exp(4.0 / ((2.0 * t - 1.0) * (t - 2.0))) : 0.0; }

} // namespace

TEST(Fit, PowerLawAndConstant) {
    std::vector<std::pair<double, double>> pw, cst;
    for (double x : {4.0, 8.0, 16.0, 32.0, 64.0}) {
        pw.emplace_back(x, std::sqrt(x));
        cst.emplace_back(x, 3.0);
    }
    EXPECT_NEAR(fit_growth(pw), 0.5, 1e-12);
    EXPECT_NEAR(fit_growth(cst), 0.0, 1e-12);
    EXPECT_NEAR(fit_loglog(pw).residual, 0.0, 1e-12);
    pw.pop_back();
    pw.pop_back();
    EXPECT_THROW(fit_growth(pw), precondition_error);
    EXPECT_THROW(fit_growth({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}, {1.0, 4.0}}), precondition_error);
}

TEST(Fit, SkipsZeroValues) {
    std::vector<std::pair<double, double>> pts{{1.0, 0.0}};
    for (double x : {2.0, 4.0, 8.0, 16.0}) pts.emplace_back(x, x);
    EXPECT_NEAR(fit_growth(pts), 1.0, 1e-12);
}

TEST(ClassicalEvaluator, MatchesDirectSum) {
    ClassicalEvaluator ev;
    std::mt19937_64 rng(5);
    for (i64 c = 1; c <= 300; ++c)
        for (int k = 0; k < 3; ++k) {
            const i64 a = static_cast<i64>(rng() % 21) - 10, b = static_cast<i64>(rng() % 21) - 10;
            ASSERT_NEAR(ev.value(a, b, c), classical_direct(a, b, c), 1e-9) << a << ' ' << b << ' ' << c;
        }
    for (i64 c : {4096, 4099, 8192, 6561, 10007, 2 * 10007}) {
        ASSERT_NEAR(ev.value(1, 1, c), kloosterman_classical(1, 1, c).value().real(), 1e-9);
        ASSERT_NEAR(ev.value(6, 9, c), kloosterman_classical(6, 9, c).value().real(), 1e-9);
    }
}

TEST(Linnik, SmallCases) {
    EXPECT_TRUE(linnik_sum(1, 1, 0.5).weighted.records.empty());
    const auto r = linnik_sum(1, 1, 3);
    ASSERT_EQ(r.weighted.records.size(), 3u);
    EXPECT_NEAR(r.weighted.records.back().value.real(), 7.0 / 6.0, 1e-14);
    EXPECT_EQ(r.weighted.records.back().scale, 3.0);
    EXPECT_NEAR(r.unweighted.records.back().value.real(), 1.0 + 1.0 - 1.0, 1e-14);
    EXPECT_THROW(linnik_sum(1, 1, 2e5), precondition_error);
}

TEST(Linnik, CheckpointsMatchRecomputation) {
    const auto r = linnik_sum(2, 3, 300);
    for (const auto& rec : r.weighted.records) {
        double s = 0.0;
        for (i64 c = 1; c <= static_cast<i64>(rec.scale); ++c) s += classical_direct(2, 3, c) / static_cast<double>(c);
        ASSERT_NEAR(rec.value.real(), s, 1e-9) << rec.scale;
    }
    EXPECT_EQ(r.weighted.records.back().scale, 300.0);
}

TEST(Linnik, ThreadCountInvariant) {
    const auto a = linnik_sum(1, 1, 5000, 1, 64);
    const auto b = linnik_sum(1, 1, 5000, 4, 64);
    ASSERT_EQ(a.weighted.records.size(), b.weighted.records.size());
    for (std::size_t i = 0; i < a.weighted.records.size(); ++i) {
        EXPECT_EQ(a.weighted.records[i].value, b.weighted.records[i].value);
        EXPECT_EQ(a.unweighted.records[i].value, b.unweighted.records[i].value);
    }
    EXPECT_EQ(a.weighted.fitted_slope, b.weighted.fitted_slope);
    EXPECT_TRUE(std::isfinite(a.weighted.fitted_slope));
}

TEST(Zeta, SingleTerm) {
    const CharPair one(1, 1);
    for (auto w : {WeylElement::w4, WeylElement::w5, WeylElement::wl}) {
        const auto z = zeta_partial_sum(w, one, one, {-0.6, -0.6}, 1);
        ASSERT_EQ(z.records.size(), 1u);
        EXPECT_NEAR(z.records[0].value.real(), 1.0, 1e-15);
        EXPECT_EQ(z.records[0].term_count, 1);
    }
    // Compatibility fails at (1, 1) when m2 != n1.
    EXPECT_EQ(zeta_partial_sum(WeylElement::w4, CharPair(1, 2), one, {-0.2, 0.0}, 1).records[0].abs, 0.0);
    EXPECT_THROW(zeta_partial_sum(WeylElement::w2, one, one, {-1.0, -1.0}, 4), precondition_error);
}

TEST(Zeta, GatedEnumerationMatchesFullScan) {
    const double u = -0.2;
    for (auto [m, n] : {std::pair{CharPair(1, 1), CharPair(1, 1)}, {CharPair(2, 3), CharPair(3, 2)},
                        {CharPair(-1, 2), CharPair(4, -1)}}) {
        const auto z4 = zeta_partial_sum(WeylElement::w4, m, n, {u, 0.0}, 64);
        const auto z5 = zeta_partial_sum(WeylElement::w5, m, n, {u, 0.0}, 64);
        for (std::size_t k = 0; k < z4.records.size(); ++k) {
            const i64 C = static_cast<i64>(z4.records[k].scale);
            double s4 = 0.0, s5 = 0.0;
            for (i64 c1 = 1; c1 <= C; ++c1)
                for (i64 c2 = 1; c2 <= C; ++c2) {
                    const double d1 = static_cast<double>(c1), d2 = static_cast<double>(c2);
                    s4 += std::abs(s_w4(m, n, ModPair(c1, c2), true).value()) * std::pow(d2, 3 * u) / (d1 * d2);
                    s5 += std::abs(s_w5(m, n, ModPair(c1, c2), true).value()) * std::pow(d1, 3 * u) / (d1 * d2);
                }
            ASSERT_NEAR(z4.records[k].abs, s4, 1e-12 * (1.0 + s4)) << C;
            ASSERT_NEAR(z5.records[k].abs, s5, 1e-12 * (1.0 + s5)) << C;
        }
    }
}

TEST(Zeta, LongElementMatchesDirectRoute) {
    const CharPair m(1, -2), n(3, 1);
    const std::pair<double, double> u{-0.7, -0.9};
    const auto z = zeta_partial_sum(WeylElement::wl, m, n, u, 12);
    ASSERT_EQ(z.records.back().scale, 12.0);
    double s = 0.0;
    for (i64 c1 = 1; c1 <= 12; ++c1)
        for (i64 c2 = 1; c2 <= 12; ++c2) {
            const double d1 = static_cast<double>(c1), d2 = static_cast<double>(c2);
            s += std::abs(s_wl_direct(m, n, ModPair(c1, c2)).value()) * std::pow(d1 * d1 / d2, u.first) *
                 std::pow(d2 * d2 / d1, u.second) / (d1 * d2);
        }
    EXPECT_NEAR(z.records.back().abs, s, 1e-12 * s);
    for (std::size_t i = 1; i < z.records.size(); ++i) EXPECT_GE(z.records[i].abs, z.records[i - 1].abs);
}

TEST(Window, BumpShape) {
    const SmoothWindow w;
    for (double t : {0.5, 0.6, 1.0, 1.25, 1.7, 1.999, 2.0, 3.0}) EXPECT_DOUBLE_EQ(SmoothWindow::bump(t, 0.5, 2.0), bump_ref(t));
    EXPECT_NEAR(SmoothWindow::bump(1.25, 0.5, 2.0), std::exp(-32.0 / 9.0), 1e-15);
    for (double t = 0.51; t < 2.0; t += 0.01) EXPECT_LE(SmoothWindow::bump(t, 0.5, 2.0), std::exp(-32.0 / 9.0) + 1e-15);
    EXPECT_LT(SmoothWindow::bump(0.5 + 1e-3, 0.5, 2.0), 1e-300);
    EXPECT_DOUBLE_EQ(w(1.0, 1.5), bump_ref(1.0) * bump_ref(1.5));
    EXPECT_EQ(w(0.4, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(SmoothWindow::bump(3.0, 2.0, 5.0), bump_ref(1.0));
}

TEST(Smoothed, TermSetMatchesBruteScan) {
    for (auto [m, n, X, Y] : {std::tuple{CharPair(1, 1), CharPair(1, 1), 4.0, 4.0},
                              {CharPair(2, -1), CharPair(1, 3), 3.0, 7.0}, {CharPair(1, 1), CharPair(1, 1), 10.0, 2.5}}) {
        const SmoothWindow win;
        const auto cells = smoothed_cells(m, n, X, Y, win);
        const auto [B1, B2] = smoothed_bounds(m, n, X, Y, win);
        const double k1 = std::abs(static_cast<double>(m.m1() * n.m2()));
        const double k2 = std::abs(static_cast<double>(m.m2() * n.m1()));
        std::vector<ModPair> brute;
        for (i64 c1 = 1; c1 <= 2 * B1; ++c1)
            for (i64 c2 = 1; c2 <= 2 * B2; ++c2) {
                const double a1 = X * std::numbers::pi * static_cast<double>(c2) * k1 / static_cast<double>(c1 * c1);
                const double a2 = Y * std::numbers::pi * static_cast<double>(c1) * k2 / static_cast<double>(c2 * c2);
                if (a1 > 0.5 && a1 < 2.0 && a2 > 0.5 && a2 < 2.0) brute.emplace_back(c1, c2);
            }
        EXPECT_FALSE(brute.empty());
        EXPECT_EQ(cells, brute);
    }
}

TEST(Smoothed, EmptySupportGivesZero) {
    const CharPair one(1, 1);
    const auto tiny = smoothed_wl_sum(one, one, 1e-6, 1e-6);
    EXPECT_EQ(tiny.value, std::complex<double>(0.0));
    EXPECT_EQ(tiny.terms, 0);
    SmoothWindow degenerate;
    degenerate.lo1 = degenerate.hi1 = 1.0;
    const auto none = smoothed_wl_sum(one, one, 8.0, 8.0, degenerate);
    EXPECT_EQ(none.value, std::complex<double>(0.0));
    EXPECT_EQ(none.terms, 0);
    EXPECT_THROW(smoothed_wl_sum(one, one, -1.0, 1.0), precondition_error);
}

TEST(Smoothed, ValueMatchesDirectRoute) {
    const CharPair m(1, 1), n(1, 1);
    const double X = 4.0, Y = 4.0;
    const auto r = smoothed_wl_sum(m, n, X, Y);
    std::complex<double> s = 0.0;
    double triv = 0.0;
    for (const auto& c : smoothed_cells(m, n, X, Y, {})) {
        const double d1 = static_cast<double>(c.c1()), d2 = static_cast<double>(c.c2());
        const double f = bump_ref(X * std::numbers::pi * d2 / (d1 * d1)) * bump_ref(Y * std::numbers::pi * d1 / (d2 * d2));
        for (i64 v1 : {1, -1})
            for (i64 v2 : {1, -1}) {
                const auto v = s_wl_direct(m, CharPair(v1, v2), c).value();
                s += v * f / (d1 * d2);
                triv += std::abs(v) * f / (d1 * d2);
            }
    }
    EXPECT_GT(r.terms, 0);
    EXPECT_TRUE(close_relative(r.value, s, 1e-9));
    EXPECT_NEAR(r.trivial, triv, 1e-9 * triv);
    EXPECT_LT(std::abs(r.value), r.trivial);
    EXPECT_GE(r.tail_share, 0.0);
    EXPECT_LE(r.tail_share, 1.0);
}

TEST(Smoothed, ThreadCountInvariant) {
    const CharPair one(1, 1);
    WlTermCache cache;
    const auto a = smoothed_wl_sum(one, one, 8.0, 8.0, {}, 1, &cache);
    const auto b = smoothed_wl_sum(one, one, 8.0, 8.0, {}, 3);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.trivial, b.trivial);
    EXPECT_EQ(a.terms, b.terms);
}
