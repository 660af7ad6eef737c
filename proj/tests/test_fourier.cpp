#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zncomb/additive_stats.hpp"
#include "zncomb/family_a.hpp"
#include "zncomb/fourier.hpp"

using namespace zn;

TEST(DftIndicatorTest, FullGroupIsDelta) {
    const auto sp = dft_indicator(ResidueSet::full(10));
    EXPECT_NEAR(sp.coefficients[0].real(), 1.0, 1e-12);
    for (std::size_t xi = 1; xi < 10; ++xi) EXPECT_NEAR(std::abs(sp.coefficients[xi]), 0.0, 1e-12);
}

TEST(DftIndicatorTest, ZeroFrequencyAndParseval) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 256;
        const auto s = oracle::make(n, oracle::random_members(rng, n, 0.4));
        const auto sp = dft_indicator(s);
        const double density = static_cast<double>(s.size()) / static_cast<double>(n);
        EXPECT_NEAR(sp.coefficients[0].real(), density, 1e-12);
        EXPECT_NEAR(sp.coefficients[0].imag(), 0.0, 1e-12);
        double total = 0.0;
        for (auto c : sp.coefficients) total += std::norm(c);
        EXPECT_NEAR(total, density, 1e-9);
    }
}

TEST(DftIndicatorTest, ComplementHasSameMagnitudes) {
    for (std::size_t k : {8u, 13u, 40u}) {
        const auto a = build_family_a(k);
        const auto sa = dft_indicator(a);
        const auto sc = dft_indicator(complement(a));
        for (std::size_t xi = 1; xi < 2 * k; ++xi) {
            EXPECT_NEAR(sa.magnitude(static_cast<Residue>(xi)), sc.magnitude(static_cast<Residue>(xi)), 1e-12);
        }
    }
}

TEST(DftIndicatorTest, TranslationAndDilationPermuteMagnitudes) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 100;
        const auto s = oracle::make(n, oracle::random_members(rng, n, 0.3));
        const auto sp = dft_indicator(s);
        const auto shifted = dft_indicator(translate(s, static_cast<Residue>(rng() % n)));
        const auto us = units(n);
        const Residue v = us[rng() % us.size()];
        const auto dilated = dft_indicator(dilate(s, v));
        for (Residue xi = 0; xi < static_cast<Residue>(n); ++xi) {
            EXPECT_NEAR(shifted.magnitude(xi), sp.magnitude(xi), 1e-9);
            EXPECT_NEAR(dilated.magnitude(xi), sp.magnitude(v * xi), 1e-9);
        }
    }
}

TEST(RepViaDftTest, Examples) {
    EXPECT_EQ(rep_via_dft(ResidueSet(4, {0}), ResidueSet(4, {0}), 0), 1u);
    const auto a = build_family_a(8);
    EXPECT_EQ(rep_via_dft(a, complement(a), 2), 7u);
    EXPECT_LT(rep_via_dft_detail(a, complement(a), 2).residual, 1e-9);
    EXPECT_THROW(rep_via_dft(ResidueSet(4), ResidueSet(5), 0), ModulusMismatch);
}

TEST(RepViaDftTest, MatchesConvolution) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 256;
        const auto u = oracle::random_members(rng, n, 0.3);
        const auto v = oracle::random_members(rng, n, 0.3);
        const auto r = rep_profile_via_dft(oracle::make(n, u), oracle::make(n, v));
        ASSERT_EQ(r.counts, oracle::rep(n, u, v)) << "n=" << n;
    }
}

TEST(ErrorTermTest, Examples) {
    const auto a = build_family_a(8);
    const auto c = complement(a);
    EXPECT_DOUBLE_EQ(error_term(a, c, 0), 1.0);  // r(0) = 5, k/2 = 4
    EXPECT_DOUBLE_EQ(error_term(a, c, 1), 0.0);  // r(1) = k/2
    double sum = 0.0;
    for (Residue t = 0; t < 16; ++t) sum += error_term(a, c, t);
    EXPECT_NEAR(sum, 0.0, 1e-12);
    EXPECT_THROW(error_term(a, ResidueSet(16, {0}), 0), std::invalid_argument);
    EXPECT_THROW(error_term(ResidueSet(7, {0, 1, 2}), ResidueSet(7, {0, 1, 2}), 0),
                 std::invalid_argument);
}

TEST(ErrorBoundTest, Examples) {
    EXPECT_NEAR(error_bound(ResidueSet::full(12), ResidueSet::full(12)), 0.0, 1e-9);
    for (std::size_t k : {6u, 8u, 15u, 32u}) {
        const auto a = build_family_a(k);
        const double self = 2.0 * static_cast<double>(k) * tail_energy(a);
        for (Residue v : units(2 * k)) {
            EXPECT_LE(error_bound(a, dilate(complement(a), v)), self + 1e-9);
        }
    }
}

TEST(ErrorBoundTest, DominatesErrorTerm) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 * (1 + rng() % 64);
        const auto u = oracle::make(n, oracle::random_half(rng, n));
        const auto v = oracle::make(n, oracle::random_half(rng, n));
        const double bound = error_bound(u, v);
        for (Residue t = 0; t < static_cast<Residue>(n); ++t) {
            EXPECT_LE(std::abs(error_term(u, v, t)), bound + 1e-9);
        }
    }
}

TEST(VinogradovBoundTest, Examples) {
    for (std::size_t k : {1u, 5u, 100u}) {
        EXPECT_NEAR(vinogradov_bound(static_cast<Residue>(k), k), 3.0 / (2.0 * static_cast<double>(k)), 1e-15);
    }
    EXPECT_NEAR(vinogradov_bound(1, 8), 0.4453644309676883, 1e-14);
    EXPECT_THROW(vinogradov_bound(0, 8), std::invalid_argument);
    EXPECT_THROW(vinogradov_bound(16, 8), std::invalid_argument);
}

TEST(VinogradovBoundTest, HoldsForFamily) {
    for (std::size_t k = 6; k <= 64; ++k) {
        const auto sp = dft_indicator(build_family_a(k));
        for (Residue xi = 1; xi < static_cast<Residue>(2 * k); ++xi) {
            EXPECT_LE(sp.magnitude(xi), vinogradov_bound(xi, k) + 1e-12) << k << ' ' << xi;
        }
    }
}

TEST(TailEnergyTest, Examples) {
    std::mt19937_64 rng(79);
    const auto half = oracle::make(20, oracle::random_half(rng, 20));
    EXPECT_NEAR(tail_energy(half), 0.25, 1e-12);
    EXPECT_DOUBLE_EQ(tail_energy(ResidueSet(9)), 0.0);
    EXPECT_NEAR(tail_energy(ResidueSet(4, {0})), 3.0 / 16.0, 1e-15);
}

TEST(BoundTailSumTest, LimitAndMonotonicity) {
    EXPECT_NEAR(bound_tail_sum(1000), 1.0 / 3.0, 0.02);
    for (std::size_t k = 8; k <= 512; k *= 2) EXPECT_GE(bound_tail_sum(k), bound_tail_sum(2 * k));
    EXPECT_GT(bound_tail_sum(1), 0.0);
    EXPECT_TRUE(std::isfinite(bound_tail_sum(1)));
}

TEST(BoundTailSumTest, FoldedHalfSum) {
    // The sum is symmetric about xi = k, so it folds onto [1, k] with the
    // middle term counted once: 2 * sum_{xi<=k} b^2 - (3/(2k))^2.
    for (std::size_t k : {1u, 7u, 64u}) {
        double half = 0.0;
        for (std::size_t xi = 1; xi <= k; ++xi) half += std::pow(vinogradov_bound(static_cast<Residue>(xi), k), 2);
        const double kd = static_cast<double>(k);
        EXPECT_NEAR(bound_tail_sum(k), 2.0 * half - 9.0 / (4.0 * kd * kd), 1e-12);
    }
}
