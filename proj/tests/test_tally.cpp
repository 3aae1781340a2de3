#include <gtest/gtest.h>

#include <random>

#include "kloss3/parallel.hpp"
#include "kloss3/tally.hpp"

using namespace kloss3;

TEST(Tally, ZeroAndOne) {
    EXPECT_TRUE(ExponentTally().is_zero());
    EXPECT_EQ(ExponentTally().value(), std::complex<double>(0.0, 0.0));
    EXPECT_EQ(ExponentTally::one().value(), std::complex<double>(1.0, 0.0));
    EXPECT_EQ(ExponentTally::one().term_count(), 1);
}

TEST(Tally, BuilderMergesAndDropsZeros) {
    for (i64 L : {i64{7}, (i64{1} << 23) + 9}) {
        TallyBuilder b(L);
        b.add(3);
        b.add(-1);
        b.add(L + 3, 2);
        b.add(5, 1);
        b.add(5, -1);
        const auto t = b.finish();
        ASSERT_EQ(t.entries().size(), 2u);
        EXPECT_EQ(t.count_at(3), 3);
        EXPECT_EQ(t.count_at(L - 1), 1);
        EXPECT_EQ(t.count_at(5), 0);
    }
}

TEST(Tally, ValueMatchesDirectSum) {
    std::mt19937_64 rng(7);
    const i64 L = 97;
    TallyBuilder b(L);
    std::complex<double> direct = 0.0;
    for (int i = 0; i < 500; ++i) {
        const i64 t = static_cast<i64>(rng() % L);
        b.add(t);
        direct += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / L);
    }
    EXPECT_TRUE(close_relative(b.finish().value(), direct, 1e-12));
}

TEST(Tally, ProductIsExactConvolution) {
    TallyBuilder a(4), b(6);
    a.add(1);
    a.add(3, 2);
    b.add(5);
    b.add(0, -1);
    const auto p = a.finish() * b.finish();
    EXPECT_EQ(p.denominator(), 12);
    EXPECT_TRUE(close_relative(p.value(), a.finish().value() * b.finish().value(), 1e-14));
    // 1/4 + 5/6 = 13/12 -> 1/12
    EXPECT_EQ(p.count_at(1), 1);
    EXPECT_EQ(p.count_at(3), -1);
}

TEST(Tally, ConjugateMovesResidues) {
    TallyBuilder b(10);
    b.add(0, 2);
    b.add(3);
    const auto c = b.finish().conjugate();
    EXPECT_EQ(c.count_at(0), 2);
    EXPECT_EQ(c.count_at(7), 1);
    EXPECT_EQ(c.to_string(), "2@0/10 1@7/10");
}

TEST(Parallel, PartitionIndependentTally) {
    const i64 L = 1009;
    const std::size_t n = 5000;
    auto residue = [&](std::size_t i) { return static_cast<i64>((i * i * 31 + 7 * i) % L); };
    TallyBuilder serial(L);
    for (std::size_t i = 0; i < n; ++i) serial.add_reduced(residue(i));
    const auto ref = serial.finish();
    for (unsigned threads : {2u, 4u, 8u}) {
        const std::size_t chunks = 37;
        std::vector<ExponentTally> parts(chunks);
        parallel_for(chunks, threads, [&](std::size_t k) {
            TallyBuilder b(L);
            for (std::size_t i = k; i < n; i += chunks) b.add_reduced(residue(i));
            parts[k] = b.finish();
        });
        TallyBuilder merged(L);
        for (const auto& p : parts)
            for (const auto& e : p.entries()) merged.add_reduced(e.residue, e.count);
        EXPECT_EQ(merged.finish(), ref);
    }
}

TEST(Parallel, RethrowsWorkerException) {
    EXPECT_THROW(parallel_for(100, 4,
                              [](std::size_t i) {
                                  if (i == 57) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}
