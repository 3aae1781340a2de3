#include <gtest/gtest.h>

#include <random>

#include "kloss3/whittaker.hpp"

using namespace kloss3;

namespace {

bool rel_close(cd a, cd b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

SpectralPoint random_point(std::mt19937_64& rng, double re_max, double im_max) {
    std::uniform_real_distribution<double> re(-re_max, re_max), im(-im_max, im_max);
    return {cd(re(rng), im(rng)), cd(re(rng), im(rng))};
}

const double pi = std::numbers::pi;

} // namespace

TEST(LogGamma, KnownValues) {
    EXPECT_NEAR(std::abs(lgamma_c(1.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(lgamma_c(2.0)), 0.0, 1e-14);
    EXPECT_TRUE(rel_close(lgamma_c(0.5), 0.5 * std::log(pi), 1e-13));
    // mpmath loggamma(3+4i)
    EXPECT_TRUE(rel_close(lgamma_c(cd(3, 4)), cd(-1.7566267846037841105, 4.7426644380346579282), 1e-14));
    EXPECT_THROW(lgamma_c(0.0), pole_error);
    EXPECT_THROW(lgamma_c(-3.0), pole_error);
}

TEST(LogGamma, RecurrenceAndReflection) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-40.0, 40.0);
    for (int i = 0; i < 500; ++i) {
        const cd z(d(rng), d(rng));
        // Gamma(z + 1) = z Gamma(z)
        const cd lhs = std::exp(lgamma_c(z + 1.0) - lgamma_c(z));
        ASSERT_TRUE(rel_close(lhs, z, 1e-12)) << z;
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z), away from huge |Im z|.
        if (std::abs(z.imag()) < 10.0) {
            const cd refl = std::exp(lgamma_c(z) + lgamma_c(1.0 - z)) * std::sin(pi * z);
            ASSERT_TRUE(rel_close(refl, pi, 1e-11)) << z;
        }
    }
    for (int n = 1; n < 25; ++n) {
        double f = 1.0;
        for (int k = 2; k < n; ++k) f *= k;
        ASSERT_NEAR(lgamma_c(static_cast<double>(n)).real(), std::log(f), 1e-13 * (1 + std::log(f)));
    }
}

TEST(LogGamma, ContinuousAcrossStirlingSwitch) {
    for (double y : {0.0, 3.0, 14.9}) {
        const cd a(14.999999, y), b(15.000001, y);
        EXPECT_LT(std::abs(lgamma_c(a) - lgamma_c(b)), 1e-5);
    }
}

TEST(GammaRatio, PoleHandling) {
    EXPECT_EQ(GammaRatio().num(2.0).den(-1.0).value(), cd(0.0));
    EXPECT_THROW(GammaRatio().num(0.0, "Gamma(0)").value(), pole_error);
    EXPECT_THROW(GammaRatio().num(0.0).den(0.0).value(), pole_error);
    EXPECT_TRUE(rel_close(beta_c(0.5, 0.5), pi, 1e-14));
}

TEST(BigLambda, Values) {
    EXPECT_TRUE(rel_close(big_lambda(SpectralPoint(0.0, 0.0)), 1.0, 1e-13));
    EXPECT_TRUE(rel_close(big_lambda(SpectralPoint(cd(0, 1), cd(0, -1))),
                          cd(-0.059068268646704515914, -0.10105851338272421281), 1e-12));
    // mu1 - mu2 = -1
    EXPECT_THROW(big_lambda(SpectralPoint(-0.5, 0.5)), pole_error);
}

TEST(GFunction, Values) {
    EXPECT_TRUE(rel_close(g_fn({2.0, 2.0}, SpectralPoint(0.0, 0.0)), 1.0, 1e-14));
    EXPECT_TRUE(rel_close(g_fn({1.3, 0.8}, SpectralPoint(cd(0.1, 2), cd(-0.3, -1))),
                          cd(0.34190430893767111932, 0.24835248144906437249), 1e-12));
    try {
        g_fn({0.0, 2.0}, SpectralPoint(0.0, 0.0));
        FAIL();
    } catch (const pole_error& e) {
        EXPECT_NE(std::string(e.what()).find("u1-mu1"), std::string::npos);
    }
    const SpectralPoint mu(cd(0.2, 1.1), cd(-0.1, 0.4));
    EXPECT_TRUE(rel_close(g_star({1.5, 1.7}, mu), g_fn({1.5, 1.7}, mu) / big_lambda(mu), 1e-15));
}

TEST(Symmetry, SymmetricFunctionsUnderPermutations) {
    std::mt19937_64 rng(11);
    const DeltaParam delta(0.1);
    for (int trial = 0; trial < 20; ++trial) {
        const SpectralPoint mu = random_point(rng, 0.3, 3.0);
        const MellinPoint u{cd(1.4, 0.3), cd(1.1, -0.7)};
        for (const auto& p : all_permutations()) {
            const SpectralPoint q = mu.permuted(p);
            ASSERT_TRUE(rel_close(g_fn(u, q), g_fn(u, mu), 1e-12));
            ASSERT_TRUE(rel_close(c3_inv_sq(q), c3_inv_sq(mu), 1e-12));
            ASSERT_TRUE(rel_close(k_adj(q, delta), k_adj(mu, delta), 1e-12));
            ASSERT_TRUE(rel_close(j_i(q, delta), j_i(mu, delta), 1e-12));
            ASSERT_TRUE(rel_close(c_star(q, delta), c_star(mu, delta), 1e-12));
        }
    }
}

TEST(KWl, ValueAndZeros) {
    const DeltaParam delta(0.1);
    const SpectralPoint mu(cd(-0.2, 1), cd(0.3, -2));
    const cd v = k_wl(mu, delta);
    EXPECT_TRUE(rel_close(v, cd(3.6125113537692516854e-6, 2.4894146267836035844e-6), 1e-11));
    EXPECT_EQ(k_wl(SpectralPoint(cd(0.1, 0.5), cd(0.1, 0.5)), delta), cd(0.0));
    // mu2 - mu3 in {0, -2, -4} with mu3 = -mu1 - mu2; binary fractions keep mu3 exact.
    for (double gap : {0.0, -2.0, -4.0}) {
        const cd mu2(0.25, 0.5);
        const cd mu3 = mu2 - gap;
        EXPECT_EQ(k_wl(SpectralPoint(-mu2 - mu3, mu2), delta), cd(0.0)) << gap;
    }
    // Only the listed index set S = {(1,2),(1,3),(3,2)}: K_wl is not symmetric.
    const SpectralPoint swapped = mu.permuted({1, 0, 2});
    EXPECT_FALSE(rel_close(k_wl(swapped, delta), v, 1e-3));
}

TEST(TrivialTerm, Values) {
    const DeltaParam delta(0.1);
    EXPECT_EQ(j_i(SpectralPoint(0.0, 0.0), delta), cd(0.0));
    const SpectralPoint mu(cd(-0.2, 1), cd(0.3, -2));
    EXPECT_TRUE(rel_close(c_star(mu, delta), cd(37.904188918246770189, 215.39617808759227909), 1e-12));
    EXPECT_TRUE(rel_close(j_i(mu, delta), cd(-7.5162371974062862666, -2.4489029254523129705), 1e-12));
    EXPECT_TRUE(rel_close(k_adj(mu, delta), cd(0.66232302528665300922, -0.0093331461114012732303), 1e-12));
    const cd c3 = c3_inv_sq(SpectralPoint(cd(0, 1), cd(0, -1)));
    EXPECT_TRUE(rel_close(c3, 2.6327570442782998054, 1e-12));
    EXPECT_GT(c3.real(), 0.0);
    EXPECT_THROW(DeltaParam(0.0), precondition_error);
}

TEST(KAdj, RealOnTemperedLine) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        const SpectralPoint mu = random_point(rng, 0.0, 4.0);
        const cd v = k_adj(mu, DeltaParam(0.1));
        EXPECT_LT(std::abs(v.imag()), 1e-14 * std::abs(v));
        EXPECT_GT(v.real(), 0.0);
    }
}

TEST(Residues, MatchClosedForms) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const SpectralPoint mu = random_point(rng, 0.3, 2.0);
        const auto res = g_star_residues(mu);
        const cd u2(1.3, 0.4), u1(1.1, -0.6);
        const cd left = numeric_residue([&](cd x) { return g_star({x, u2}, mu); }, mu(1));
        ASSERT_TRUE(rel_close(left, res.left(u2), 1e-5));
        const cd right = numeric_residue([&](cd x) { return g_star({u1, x}, mu); }, -mu(2));
        ASSERT_TRUE(rel_close(right, res.right(u1), 1e-5));
        const cd both = numeric_residue(
            [&](cd x) { return numeric_residue([&](cd y) { return g_star({x, y}, mu); }, -mu(2)); }, mu(1));
        ASSERT_TRUE(rel_close(both, res.both(), 1e-5));
    }
}

TEST(BetaIntegral, Identity) {
    auto a = beta_integral_check(-1.0, 0.0);
    EXPECT_NEAR(a.rhs.real(), pi / 2, 1e-13);
    EXPECT_LT(a.rel_err, 1e-8);
    auto b = beta_integral_check(-1.5, 0.0);
    EXPECT_NEAR(b.rhs.real(), 1.0, 1e-13);
    EXPECT_LT(b.rel_err, 1e-8);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ur(-3.0, -0.6), im(-2.0, 2.0), fr(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        const cd u(ur(rng), im(rng));
        const double lo = -1.0, hi = -1.0 - 2.0 * u.real();
        const cd t(lo + fr(rng) * (hi - lo), im(rng));
        ASSERT_LT(beta_integral_check(u, t).rel_err, 1e-8) << u << ' ' << t;
    }
    EXPECT_THROW(beta_integral_check(-0.4, 0.0), precondition_error);
}

TEST(Whittaker, ContourValidation) {
    const SpectralPoint mu(cd(0.3, 0.0), cd(-0.1, 0.0));
    ContourSpec c = default_contour(mu, 0.25);
    EXPECT_THROW(WhittakerKernel(mu, c), precondition_error);
    c.real_part = 2.0;
    c.nodes = 10;
    EXPECT_THROW(WhittakerKernel(mu, c), precondition_error);
    EXPECT_THROW(whittaker(-1.0, 1.0, mu), precondition_error);
}

TEST(Whittaker, PermutationInvarianceAndRefinement) {
    const SpectralPoint mu(cd(0.1, 1.3), cd(-0.2, -0.4));
    for (auto [y1, y2] : {std::pair{0.3, 0.5}, {0.05, 1.2}, {1.0, 0.1}}) {
        const auto base = whittaker(y1, y2, mu);
        for (const auto& p : all_permutations()) {
            const auto w = whittaker(y1, y2, mu.permuted(p));
            ASSERT_TRUE(rel_close(w.value, base.value, 1e-8));
        }
        const ContourSpec c = default_contour(mu);
        const cd once = WhittakerKernel(mu, c).grid({y1}, {y2})[0];
        const cd twice = WhittakerKernel(mu, refined(c)).grid({y1}, {y2})[0];
        EXPECT_TRUE(rel_close(once, twice, 1e-8));
    }
}

TEST(Whittaker, RealWhenConjugateIsPermutation) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> a(-0.2, 0.2), b(-3.0, 3.0), y(0.05, 1.5);
    for (int i = 0; i < 10; ++i) {
        const double re = a(rng), im = b(rng);
        const SpectralPoint mu = SpectralPoint::from_triple(cd(re, im), cd(re, -im), cd(-2 * re, 0));
        const auto w = whittaker(y(rng), y(rng), mu);
        EXPECT_LE(std::abs(w.value.imag()), 1e-8 * std::abs(w.value));
    }
}

TEST(Whittaker, DecayBound) {
    // |W*| <= C y1^(1-t1) y2^(1-t2) with t1 = t2 = 0.25 above max Re(-mu_i), max Re(mu_i).
    const SpectralPoint mu(cd(0.1, 0.8), cd(-0.15, -0.3));
    std::vector<double> ys;
    for (int k = -12; k <= 1; ++k) ys.push_back(std::exp(static_cast<double>(k)));
    const auto res = whittaker_grid(ys, ys, mu, default_contour(mu, near_contour_real_part(mu)), 1e-8);
    double worst_small = 0.0, worst_mid = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const double r = std::abs(res[i * ys.size() + j].value) / (std::pow(ys[i], 0.75) * std::pow(ys[j], 0.75));
            if (i < 4 && j < 4)
                worst_small = std::max(worst_small, r);
            else
                worst_mid = std::max(worst_mid, r);
        }
    EXPECT_LT(worst_small, worst_mid);
    EXPECT_TRUE(std::isfinite(worst_mid));
}

TEST(Whittaker, MellinRoundTrip) {
    const auto c = mellin_roundtrip_check({2.0, 2.0}, SpectralPoint(cd(0, 0.4), cd(0, -0.4)));
    EXPECT_LT(c.rel_err, 1e-4);
}

TEST(Stade, TrivialParameters) {
    const double s = 1.1;
    const auto c = stade_check(SpectralPoint(0.0, 0.0), SpectralPoint(0.0, 0.0), s);
    EXPECT_TRUE(rel_close(c.rhs, 0.47788051266176158817, 1e-12));
    EXPECT_LT(c.rel_err, 1e-6);
    EXPECT_TRUE(rel_close(stade_check(SpectralPoint(0.0, 0.0), SpectralPoint(0.0, 0.0), 1.0).rhs, pi / 2, 1e-12));
}

TEST(Stade, TemperedPoint) {
    const SpectralPoint mu(cd(0, 0.7), cd(0, -0.7)), mup(cd(0, 0.3), cd(0, 0.2));
    for (double s : {1.0, 1.1}) EXPECT_LT(stade_check(mu, mup, s).rel_err, 1e-6);
    EXPECT_THROW(stade_check(mu, mup, 0.9), precondition_error);
}
