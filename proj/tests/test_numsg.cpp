#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gk/numsg.hpp"
#include "oracles.hpp"

namespace gk {
namespace {

using Seq = std::vector<std::uint64_t>;

TEST(Semigroup, GapsOfSixEightNine) {
    const Seq gens{6, 8, 9};
    const auto s = NumericalSemigroup::from_generators(gens);
    EXPECT_EQ(s.gaps(), (Seq{1, 2, 3, 4, 5, 7, 10, 11, 13, 19}));
    EXPECT_EQ(s.genus(), 10u);
    EXPECT_EQ(s.conductor(), 20u);
    EXPECT_TRUE(s.contains(12));
    EXPECT_FALSE(s.contains(19));
    EXPECT_TRUE(s.contains(1000));
    EXPECT_EQ(s.count_up_to(9), 4u);
    EXPECT_EQ(s.count_up_to(19), 10u);
}

TEST(Semigroup, MatchesBruteForce) {
    const std::vector<Seq> cases{{6, 8, 9}, {3, 5}, {4, 6, 9}, {5, 7, 11}, {7, 11, 13, 17}, {21, 27, 28}};
    for (const auto& g : cases) {
        const auto s = NumericalSemigroup::from_generators(g);
        const std::uint64_t limit = s.conductor() + 50;
        EXPECT_EQ(s.gaps(), oracle::gaps_brute(g, limit));
        for (std::uint64_t m = 0; m <= 40; ++m) EXPECT_EQ(s.contains(m), oracle::in_semigroup(g, m)) << m;
    }
}

TEST(Semigroup, DegenerateAndInvalid) {
    const auto one = NumericalSemigroup::from_generators(Seq{1});
    EXPECT_EQ(one.genus(), 0u);
    EXPECT_EQ(one.conductor(), 0u);
    EXPECT_THROW(NumericalSemigroup::from_generators(Seq{2, 4}), ArgumentError);
    EXPECT_THROW(NumericalSemigroup::from_generators(Seq{}), ArgumentError);
    EXPECT_THROW(NumericalSemigroup::from_generators(Seq{0, 1}), ArgumentError);
}

TEST(Telescopic, Examples) {
    EXPECT_TRUE(is_telescopic(Seq{6, 8, 9}).telescopic);
    EXPECT_EQ(is_telescopic(Seq{6, 8, 9}).d, (Seq{6, 2, 1}));
    EXPECT_TRUE(is_telescopic(Seq{4, 6, 9}).telescopic);
    EXPECT_FALSE(is_telescopic(Seq{5, 7, 11}).telescopic);
    EXPECT_TRUE(is_telescopic(Seq{3, 5}).telescopic);
    EXPECT_EQ(genus_telescopic(Seq{4, 6, 9}), 6u);
    EXPECT_EQ(genus_telescopic(Seq{3, 5}), 4u);
    EXPECT_THROW(genus_telescopic(Seq{5, 7, 11}), ArgumentError);
}

TEST(Weierstrass, GenusThreeWays) {
    for (std::uint64_t n = 2; n <= 9; ++n) {
        if (n == 6) continue;
        const auto gens = weierstrass_generators(n);
        const auto s = weierstrass_semigroup(n);
        EXPECT_EQ(s.genus(), genus(n)) << n;
        EXPECT_EQ(genus_telescopic(gens), genus(n)) << n;
        const auto t = is_telescopic(gens);
        EXPECT_EQ(t.d[0] / t.d[1], n * n - n + 1);
        EXPECT_EQ(t.d[1] / t.d[2], n);
    }
    EXPECT_EQ(weierstrass_semigroup(3).genus(), 99u);
}

TEST(Weierstrass, OrderSequence) {
    for (std::uint64_t n = 2; n <= 9; ++n) {
        const std::array<std::uint64_t, 4> expect{0, 1, n * n - n + 1, n * n * n + 1};
        EXPECT_EQ(order_sequence(n), expect) << n;
    }
}

TEST(Decompose, Examples) {
    const Seq g{6, 8, 9};
    EXPECT_EQ(decompose(g, 17), (Seq{0, 1, 1}));
    EXPECT_EQ(decompose(g, 18), (Seq{3, 0, 0}));
    EXPECT_EQ(decompose(g, 0), (Seq{0, 0, 0}));
    EXPECT_THROW(decompose(g, 7), ArgumentError);
    EXPECT_THROW(decompose(Seq{5, 7, 11}, 12), ArgumentError);
}

TEST(Decompose, MatchesExhaustiveSearch) {
    for (std::uint64_t n : {2, 3}) {
        const auto a = weierstrass_generators(n);
        const Seq seq(a.begin(), a.end());
        const auto t = is_telescopic(seq);
        const Seq bounds{0, t.d[0] / t.d[1], t.d[1] / t.d[2]};
        const auto s = weierstrass_semigroup(n);
        for (std::uint64_t m = 0; m <= s.conductor() + 20; ++m) {
            const auto all = oracle::decompositions_brute(seq, bounds, m);
            if (!s.contains(m)) {
                EXPECT_TRUE(all.empty()) << m;
                EXPECT_THROW(decompose(seq, m), ArgumentError) << m;
                continue;
            }
            ASSERT_EQ(all.size(), 1u) << "n=" << n << " m=" << m;
            EXPECT_EQ(decompose(seq, m), all.front()) << m;
        }
    }
}

TEST(RrBasis, SizesAndPoleOrders) {
    EXPECT_EQ(rr_basis(2, 9).size(), 4u);
    EXPECT_EQ(rr_basis(2, 19).size(), 10u);
    for (std::uint64_t n : {2, 3}) {
        const auto s = weierstrass_semigroup(n);
        const std::uint64_t g = genus(n);
        for (std::uint64_t m = 0; m <= 3 * g; ++m) {
            const auto b = rr_basis(n, m);
            ASSERT_EQ(b.size(), s.count_up_to(m)) << m;
            if (m + 1 >= 2 * g) ASSERT_EQ(b.size(), m + 1 - g) << m;
            std::set<std::uint64_t> orders;
            for (std::size_t i = 0; i < b.size(); ++i) {
                const auto po = pole_order(n, b[i]);
                EXPECT_LE(po, m);
                EXPECT_TRUE(s.contains(po));
                if (i > 0) EXPECT_LE(pole_order(n, b[i - 1]), po);
                orders.insert(po);
            }
            ASSERT_EQ(orders.size(), b.size());
        }
    }
}

TEST(Rank, IncrementalMatchesGaussian) {
    const TowerField f(2, 1);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint32_t> pick(0, 63);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cols = 3 + static_cast<std::size_t>(trial % 7);
        std::vector<std::vector<FieldElem>> rows;
        for (std::size_t r = 0; r < cols + 2; ++r) {
            std::vector<FieldElem> row(cols);
            if (r >= 2 && trial % 2 == 0) {
                // a combination of the two previous rows
                const FieldElem c{pick(rng)};
                for (std::size_t j = 0; j < cols; ++j) row[j] = f.add(rows[r - 1][j], f.mul(c, rows[r - 2][j]));
            } else {
                for (auto& e : row) e = FieldElem{pick(rng) % (trial % 3 == 0 ? 2u : 64u)};
            }
            rows.push_back(row);
        }
        IncrementalRank inc(f, cols);
        for (const auto& r : rows) inc.insert(r);
        EXPECT_EQ(inc.rank(), serial::matrix_rank(f, rows)) << trial;
    }
}

TEST(RrIndependence, SweepOverSmallCurves) {
    for (std::uint64_t n : {2, 3}) {
        const auto prm = TowerParams::from_n(n);
        const TowerField f(prm.p, prm.h);
        const auto pts = enumerate_points(f);
        const std::uint64_t m_max = 2 * genus(n) + 10;
        const auto ok = rr_independence_sweep(f, m_max, pts);
        ASSERT_EQ(ok.size(), m_max + 1);
        for (std::uint64_t m = 0; m <= m_max; ++m) EXPECT_TRUE(ok[m]) << "n=" << n << " m=" << m;
        for (std::uint64_t m : {std::uint64_t{0}, std::uint64_t{5}, m_max}) EXPECT_TRUE(rr_independence_check(f, m, pts));
    }
}

TEST(RrIndependence, DependentAndOversizedInputs) {
    const TowerField f(2, 1);
    const auto pts = enumerate_points(f);
    std::vector<Monomial> dup{{1, 0, 0}, {0, 1, 0}, {1, 0, 0}};
    EXPECT_FALSE(rr_independence_check(f, dup, pts));
    EXPECT_THROW(rr_independence_check(f, 400, pts), LimitError);
}

}  // namespace
}  // namespace gk
