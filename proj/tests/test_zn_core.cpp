#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zncomb/zn_core.hpp"

using namespace zn;

namespace {

ResidueSet S(std::size_t n, std::initializer_list<Residue> m) { return ResidueSet(n, m); }

}  // namespace

// =============================================================================
// Construction and literals
// =============================================================================

TEST(ResidueSetTest, ReducesAndDeduplicates) {
    const ResidueSet s(12, {17, 5, -7, 29});
    EXPECT_EQ(s.members(), (std::vector<Residue>{5}));
    EXPECT_EQ(s.size(), 1u);
    EXPECT_THROW(ResidueSet(0), std::invalid_argument);
}

TEST(ResidueSetTest, FullAndTailBits) {
    for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
        const auto f = ResidueSet::full(n);
        EXPECT_EQ(f.size(), n);
        EXPECT_TRUE(complement(f).empty());
    }
}

TEST(ParseSetTest, Examples) {
    EXPECT_EQ(parse_set("0,1,3-7,10", 16), S(16, {0, 1, 3, 4, 5, 6, 7, 10}));
    EXPECT_TRUE(parse_set("", 6).empty());
    EXPECT_EQ(parse_set("17", 12), S(12, {5}));
    EXPECT_EQ(parse_set(" 1 , 2-3 ", 8), S(8, {1, 2, 3}));
    EXPECT_EQ(parse_set("0-100", 8), ResidueSet::full(8));
}

TEST(ParseSetTest, Errors) {
    EXPECT_THROW(parse_set("1,,2", 8), std::invalid_argument);
    EXPECT_THROW(parse_set("a", 8), std::invalid_argument);
    EXPECT_THROW(parse_set("5-3", 8), std::invalid_argument);
    EXPECT_THROW(parse_set("-3", 8), std::invalid_argument);
    EXPECT_THROW(parse_set("1-", 8), std::invalid_argument);
    EXPECT_THROW(parse_set("1,", 8), std::invalid_argument);
    EXPECT_THROW(parse_set("1", 0), std::invalid_argument);
}

TEST(ParseSetTest, FormatRoundTrip) {
    EXPECT_EQ(format_set(S(16, {0, 1, 3, 4, 5, 6, 7, 10})), "0-1,3-7,10");
    EXPECT_EQ(format_set(ResidueSet(5)), "");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 100;
        const auto s = oracle::make(n, oracle::random_members(rng, n, 0.5));
        const auto text = format_set(s);
        EXPECT_EQ(parse_set(text, n), s) << text;
        EXPECT_EQ(format_set(parse_set(text, n)), text);
    }
}

// =============================================================================
// Complement, dilation, affine maps
// =============================================================================

TEST(ComplementTest, Examples) {
    EXPECT_EQ(complement(S(8, {0, 1, 3, 6})), S(8, {2, 4, 5, 7}));
    EXPECT_TRUE(complement(ResidueSet::full(9)).empty());
    EXPECT_EQ(complement(parse_set("0,1,3-7,10", 16)), S(16, {2, 8, 9, 11, 12, 13, 14, 15}));
}

TEST(DilateTest, Examples) {
    EXPECT_EQ(dilate(S(12, {0, 3, 4, 7, 8, 9}), 5), S(12, {0, 3, 4, 8, 9, 11}));
    EXPECT_EQ(dilate(S(12, {1, 2, 7}), 0), S(12, {0}));
    EXPECT_EQ(dilate(S(6, {1, 2}), -1), S(6, {4, 5}));
    EXPECT_EQ(dilate(S(12, {1, 5}), 2).size(), 2u);
    EXPECT_EQ(dilate(S(12, {0, 6}), 2), S(12, {0}));  // non-unit collapses
}

TEST(AffineMapTest, Examples) {
    const ResidueSet k(12, {0, 3, 4, 7, 8, 9});
    EXPECT_EQ(affine_image(AffineMap(12, 2, 5), k), complement(k));
    const ResidueSet a(6, {0, 2, 3});
    EXPECT_EQ(affine_image(AffineMap(6, 1, -1), a), S(6, {1, 4, 5}));
    EXPECT_EQ(affine_image(AffineMap::identity(12), k), k);
    EXPECT_THROW(AffineMap(12, 0, 4), std::invalid_argument);
    EXPECT_THROW(affine_image(AffineMap(6, 0, 1), k), ModulusMismatch);
    EXPECT_EQ(AffineMap(6, 1, -1).to_string(), "e^1.(-1)");
    EXPECT_EQ(AffineMap(12, 2, 5).to_string(), "e^2.5");
}

TEST(AffineMapTest, CompositionAndInversePointwise) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto us = units(n);
        for (int trial = 0; trial < 5; ++trial) {
            const AffineMap f(n, static_cast<Residue>(rng() % n), us[rng() % us.size()]);
            const AffineMap g(n, static_cast<Residue>(rng() % n), us[rng() % us.size()]);
            const AffineMap fg = f.compose(g);
            const AffineMap expected(n, f.multiplier() * g.translation() + f.translation(),
                                     f.multiplier() * g.multiplier());
            EXPECT_EQ(fg, expected);
            const AffineMap finv = f.inverse();
            for (Residue x = 0; x < static_cast<Residue>(n); ++x) {
                EXPECT_EQ(fg(x), f(g(x)));
                EXPECT_EQ(finv(f(x)), x);
            }
            EXPECT_TRUE(f.compose(finv).is_identity());
        }
    }
}

TEST(AffineMapTest, ImageIsTranslatedDilate) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const auto us = units(n);
        const auto s = oracle::make(n, oracle::random_members(rng, n, 0.4));
        const AffineMap g(n, static_cast<Residue>(rng() % n), us[rng() % us.size()]);
        const auto image = affine_image(g, s);
        EXPECT_EQ(image, translate(dilate(s, g.multiplier()), g.translation()));
        EXPECT_EQ(image, sumset(dilate(s, g.multiplier()), ResidueSet(n, {g.translation()})));
        EXPECT_EQ(image.size(), s.size());
        EXPECT_EQ(affine_image(g, affine_image(g.inverse(), s)), s);
    }
}

// =============================================================================
// Sumsets
// =============================================================================

TEST(SumsetTest, Examples) {
    EXPECT_EQ(sumset(S(4, {0, 1}), S(4, {0, 1})), S(4, {0, 1, 2}));
    const auto a6 = parse_set("0,1,3-5,8", 12);
    EXPECT_TRUE(sumset(a6, a6).is_full());
    const auto a8 = parse_set("0,1,3-7,10", 16);
    EXPECT_EQ(sumset(a8, complement(a8)).members(),
              oracle::sumset(16, a8.members(), complement(a8).members()));
    EXPECT_TRUE(sumset(ResidueSet(5), S(5, {1})).empty());
    EXPECT_THROW(sumset(S(4, {0}), S(5, {0})), ModulusMismatch);
}

TEST(SumsetTest, MatchesPairOracle) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const auto a = oracle::random_members(rng, n, 0.05 + 0.5 * (rng() % 100) / 100.0);
        const auto b = oracle::random_members(rng, n, 0.05 + 0.5 * (rng() % 100) / 100.0);
        const auto got = sumset(oracle::make(n, a), oracle::make(n, b));
        ASSERT_EQ(got.members(), oracle::sumset(n, a, b)) << "n=" << n;
    }
}

TEST(SumsetTest, LargeModulusMatchesOracle) {
    std::mt19937_64 rng(99);
    for (std::size_t n : {127u, 128u, 129u, 200u, 333u}) {
        const auto a = oracle::random_members(rng, n, 0.1);
        const auto b = oracle::random_members(rng, n, 0.1);
        EXPECT_EQ(sumset(oracle::make(n, a), oracle::make(n, b)).members(), oracle::sumset(n, a, b));
        EXPECT_EQ(difference(oracle::make(n, a), oracle::make(n, b)).members(),
                  oracle::sumset(n, a, oracle::negate(n, b)));
    }
}

TEST(SumsetTest, AlgebraicLaws) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const auto u = oracle::make(n, oracle::random_members(rng, n, 0.2));
        const auto v = oracle::make(n, oracle::random_members(rng, n, 0.2));
        const auto w = oracle::make(n, oracle::random_members(rng, n, 0.2));
        EXPECT_EQ(sumset(u, v), sumset(v, u));
        EXPECT_EQ(sumset(sumset(u, v), w), sumset(u, sumset(v, w)));
        if (!u.empty() && !v.empty()) {
            EXPECT_GE(sumset(u, v).size(), std::max(u.size(), v.size()));
        }
    }
}

// =============================================================================
// Subgroups, cosets, periods, units
// =============================================================================

TEST(SubgroupTest, Examples) {
    EXPECT_EQ(subgroup_generated(3, 12), S(12, {0, 3, 6, 9}));
    EXPECT_EQ(subgroup_generated(0, 8), S(8, {0}));
    const auto evens = subgroup_generated(2, 16);
    EXPECT_EQ(evens.size(), 8u);
    EXPECT_EQ(evens, dilate(ResidueSet::full(16), 2));
    EXPECT_EQ(subgroup_generated(10, 12).size(), 6u);
}

TEST(SmallestCosetTest, Examples) {
    const Coset c = smallest_coset(S(8, {1, 3}));
    EXPECT_EQ(c.representative, 1);
    EXPECT_EQ(c.subgroup, S(8, {0, 2, 4, 6}));
    const Coset z = smallest_coset(S(6, {0}));
    EXPECT_EQ(z.representative, 0);
    EXPECT_EQ(z.subgroup, S(6, {0}));
    for (std::size_t k : {4u, 5u, 9u, 40u}) {
        const Coset ca = smallest_coset(oracle::make(2 * k, oracle::family_a(k)));
        EXPECT_EQ(ca.representative, 0);
        EXPECT_TRUE(ca.subgroup.is_full());
    }
    EXPECT_THROW(smallest_coset(ResidueSet(6)), std::invalid_argument);
}

TEST(SmallestCosetTest, MinimalAmongAllSubgroups) {
    // Oracle: try every subgroup <d>, d | n, and every coset of it.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 48;
        const auto m = oracle::random_members(rng, n, 0.15);
        if (m.empty()) continue;
        const auto s = oracle::make(n, m);
        std::size_t best = n + 1;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const auto h = subgroup_generated(static_cast<Residue>(d), n);
            for (Residue r = 0; r < static_cast<Residue>(d); ++r) {
                if (set_union(translate(h, r), s) == translate(h, r)) best = std::min(best, h.size());
            }
        }
        const Coset c = smallest_coset(s);
        EXPECT_EQ(c.subgroup.size(), best);
        EXPECT_EQ(set_union(translate(c.subgroup, c.representative), s),
                  translate(c.subgroup, c.representative));
    }
}

TEST(PeriodTest, Examples) {
    EXPECT_EQ(period(parse_set("0,2,4,6", 8)), S(8, {0, 2, 4, 6}));
    EXPECT_EQ(period(ResidueSet(7)), ResidueSet::full(7));
    EXPECT_EQ(period(S(12, {0, 1, 6, 7})), S(12, {0, 6}));
    for (std::size_t k = 6; k <= 40; ++k) {
        EXPECT_EQ(period(oracle::make(2 * k, oracle::family_a(k))).size(), 1u) << k;
    }
}

TEST(PeriodTest, StabilizerProperties) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        // Unions of cosets of a random <d> give non-trivial periods.
        const auto divs = divisors(n);
        const auto d = static_cast<Residue>(divs[rng() % divs.size()]);
        const auto s = sumset(oracle::make(n, oracle::random_members(rng, n, 0.2)),
                              subgroup_generated(d, n));
        const auto p = period(s);
        if (!s.empty()) EXPECT_EQ(sumset(s, p), s);
        // Brute force stabilizer.
        std::vector<Residue> stab;
        for (Residue h = 0; h < static_cast<Residue>(n); ++h) {
            if (translate(s, h) == s) stab.push_back(h);
        }
        EXPECT_EQ(p.members(), stab);
        if (!s.empty()) {
            EXPECT_EQ(set_union(smallest_coset(s).subgroup, p), smallest_coset(s).subgroup);
        }
    }
}

TEST(UnitsTest, Examples) {
    EXPECT_EQ(units(12), (std::vector<Residue>{1, 5, 7, 11}));
    EXPECT_EQ(units(2), (std::vector<Residue>{1}));
    EXPECT_EQ(units(16), (std::vector<Residue>{1, 3, 5, 7, 9, 11, 13, 15}));
    EXPECT_EQ(divisors(12), (std::vector<std::size_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(1), (std::vector<std::size_t>{1}));
}
