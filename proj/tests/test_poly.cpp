#include <gtest/gtest.h>

#include "gk/poly.hpp"

namespace gk {
namespace {

UniPoly from_ints(const TowerField& f, std::initializer_list<std::int64_t> c) {
    std::vector<FieldElem> v;
    for (auto x : c) v.push_back(f.from_int(x));
    return UniPoly(v);
}

TEST(UniPoly, TrimsAndReportsDegree) {
    const TowerField f(3, 1);
    EXPECT_EQ(UniPoly().degree(), UniPoly::kZeroDegree);
    EXPECT_EQ(from_ints(f, {1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(from_ints(f, {0, 0}).is_zero());
    EXPECT_EQ(UniPoly::monomial(f.one(), 4).degree(), 4);
}

TEST(UniPoly, ArithmeticOverF3) {
    const TowerField f(3, 1);
    const auto a = from_ints(f, {1, 1});   // X + 1
    const auto b = from_ints(f, {2, 1});   // X + 2
    EXPECT_EQ(poly::mul(f, a, b), from_ints(f, {2, 0, 1}));
    EXPECT_EQ(poly::pow(f, a, 3), from_ints(f, {1, 0, 0, 1}));
    EXPECT_TRUE(poly::sub(f, a, a).is_zero());
    EXPECT_EQ(poly::derivative(f, from_ints(f, {5, 1, 1, 1})), from_ints(f, {1, 2}));
    EXPECT_EQ(poly::eval(f, b, f.from_int(1)), f.zero());
    EXPECT_EQ(poly::binomial(f, 3, -1, 1), from_ints(f, {0, 2, 0, 1}));
}

TEST(HPolynomial, SmallCases) {
    const TowerField f2(2, 1);
    EXPECT_EQ(build_h(f2), from_ints(f2, {1, 1, 1}));
    const TowerField f3(3, 1);
    EXPECT_EQ(build_h(f3), from_ints(f3, {2, 0, 1, 0, 2, 0, 1}));
    const TowerField f5(5, 1);
    const auto h5 = build_h(f5);
    EXPECT_EQ(h5.degree(), 20);
    // Only exponents that are multiples of n-1 appear, with alternating sign.
    for (std::size_t i = 0; i <= 20; ++i) {
        if (i % 4 != 0) {
            EXPECT_TRUE(h5.coeff(i).is_zero());
        } else {
            EXPECT_EQ(h5.coeff(i), f5.from_int(((i / 4) % 2 == 0) ? -1 : 1));
        }
    }
}

class HIdentities : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(HIdentities, HoldExactly) {
    const auto prm = TowerParams::from_n(GetParam());
    const TowerField f(prm.p, prm.h);
    const auto r = verify_h_identities(f);
    EXPECT_TRUE(r.factorization);
    EXPECT_TRUE(r.power);
    EXPECT_TRUE(r.cleared);
}

INSTANTIATE_TEST_SUITE_P(AllSmallN, HIdentities, ::testing::Values(2, 3, 4, 5, 7, 8, 9));

TEST(HIdentities, PerturbedHFails) {
    for (std::uint64_t n : {2, 3, 4}) {
        const auto prm = TowerParams::from_n(n);
        const TowerField f(prm.p, prm.h);
        const auto h1 = poly::add(f, build_h(f), UniPoly::monomial(f.one(), 0));
        const auto r = verify_h_identities(f, h1);
        EXPECT_FALSE(r.factorization);
        EXPECT_FALSE(r.power);
    }
}

// Pointwise: at every x in F_{n^2} with x^n + x != 0, h(x) (x^n + x) = x^{n^2} - x.
TEST(HIdentities, PointwiseFactorization) {
    for (std::uint64_t n : {2, 3}) {
        const auto prm = TowerParams::from_n(n);
        const TowerField f(prm.p, prm.h);
        const auto h = build_h(f);
        for (std::uint32_t c = 0; c < prm.sub_size; ++c) {
            const FieldElem x{c};
            const FieldElem tr = f.add(f.pow_reference(x, n), x);
            const FieldElem lhs = f.mul_reference(poly::eval(f, h, x), tr);
            const FieldElem rhs = f.sub(f.pow_reference(x, n * n), x);
            EXPECT_EQ(lhs, rhs) << "n=" << n << " x=" << c;
        }
    }
}

}  // namespace
}  // namespace gk
