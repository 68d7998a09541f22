#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewperm;

namespace {

std::set<int> oracle_descents(const oracle::Perm& p) {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) d.insert(static_cast<int>(i) + 1);
    return d;
}

}  // namespace

TEST(Composition, PartsSumsAndMask) {
    const Composition c({1, 2});
    EXPECT_EQ(c.n(), 3);
    EXPECT_EQ(c.partial_sums(), (std::set<int>{1}));
    EXPECT_EQ(c.mask(), 1u);
    EXPECT_EQ(c.str(), "(1,2)");
    EXPECT_EQ(Composition::from_mask(1u, 3), c);
    EXPECT_EQ(Composition::from_mask(0u, 4), Composition({4}));
    EXPECT_EQ(Composition::from_mask(7u, 4), Composition({1, 1, 1, 1}));
    EXPECT_THROW(Composition({}), std::invalid_argument);
    EXPECT_THROW(Composition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Composition::from_mask(4u, 3), std::invalid_argument);
}

TEST(Composition, EnumerationOrder) {
    const auto c3 = compositions(3);
    ASSERT_EQ(c3.size(), 4u);
    EXPECT_EQ(c3[0].str(), "(3)");
    EXPECT_EQ(c3[1].str(), "(1,2)");
    EXPECT_EQ(c3[2].str(), "(2,1)");
    EXPECT_EQ(c3[3].str(), "(1,1,1)");
    for (int n = 1; n <= 8; ++n) {
        const auto cs = compositions(n);
        EXPECT_EQ(cs.size(), std::size_t{1} << (n - 1));
        for (std::size_t m = 0; m < cs.size(); ++m) EXPECT_EQ(cs[m].mask(), m);
    }
    EXPECT_EQ(p_composition(2, 4), Composition({1, 2, 1}));
    EXPECT_EQ(p_composition(1, 3), Composition({2, 1}));
    EXPECT_THROW(p_composition(4, 4), std::invalid_argument);
}

TEST(BElement, CountsPermutationsWithDescentsInside) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : compositions(n)) {
            const auto b = b_element(c);
            const auto sums = c.partial_sums();
            for (const auto& p : oracle::perms(n)) {
                const auto d = oracle_descents(p);
                const bool inside = std::includes(sums.begin(), sums.end(), d.begin(), d.end());
                ASSERT_EQ(b.at(support::to_lib(p)), inside ? 1 : 0) << c.str();
            }
        }
    // B_(n) is delta_e and B_(1^n) is the all-ones element.
    EXPECT_EQ(b_element(Composition({4})), GAElement::identity(4));
    EXPECT_EQ(b_element(Composition({1, 1, 1, 1})), GAElement::ones(4));
}

TEST(BElement, BasisIsIndependent) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& c : compositions(n)) {
            const auto b = b_element(c);
            rows.emplace_back(b.coeffs().begin(), b.coeffs().end());
        }
        if (n <= 5) EXPECT_EQ(oracle::rank(rows), rows.size());
        std::vector<GAElement> bs;
        for (const auto& c : compositions(n)) bs.push_back(b_element(c));
        EXPECT_EQ(linalg::rank(as_rows(bs)), bs.size());
    }
}

TEST(Membership, DesAndMajExpansions) {
    for (int n = 2; n <= 6; ++n)
        for (auto k : {StatKind::des, StatKind::maj}) {
            const auto u = from_stat(k, n, false);
            const auto r = solomon_membership(u);
            ASSERT_TRUE(r.member) << name(k) << n;
            const auto want = descent_expansion(k, n);
            ASSERT_EQ(r.coefficients.size(), want.size());
            for (std::size_t p = 0; p < want.size(); ++p) EXPECT_EQ(r.coefficients[p].second, want[p]) << r.coefficients[p].first.str();
            // Rebuild the element from the closed-form coefficients.
            GAElement sum(n);
            const auto cs = compositions(n);
            for (std::size_t p = 0; p < cs.size(); ++p)
                if (want[p] != 0) sum = sum + want[p] * b_element(cs[p]);
            EXPECT_EQ(sum, u);
            EXPECT_TRUE(r.residual.is_zero());
        }
}

TEST(Membership, ExpansionExamples) {
    const auto d3 = descent_expansion(StatKind::des, 3);
    EXPECT_EQ(d3, (std::vector<Rational>{0, -1, -1, 2}));
    const auto m3 = descent_expansion(StatKind::maj, 3);
    EXPECT_EQ(m3, (std::vector<Rational>{0, -2, -1, 3}));
    EXPECT_THROW(descent_expansion(StatKind::inv, 3), std::invalid_argument);
}

TEST(Membership, InvIsOutsideFromThree) {
    EXPECT_TRUE(solomon_membership(from_stat(StatKind::inv, 2, false)).member);
    for (int n = 3; n <= 6; ++n) {
        const auto r = solomon_membership(from_stat(StatKind::inv, n, false));
        EXPECT_FALSE(r.member) << n;
        EXPECT_FALSE(r.residual.is_zero());
        // The residual is orthogonal to every basis element.
        for (const auto& c : compositions(n)) EXPECT_EQ(inner(r.residual, b_element(c)), 0);
    }
}

TEST(Membership, CoefficientsAreUnique) {
    const auto cs = compositions(4);
    const auto u = Rational(3) * b_element(cs[5]) - Rational(1, 2) * b_element(cs[2]);
    const auto r = solomon_membership(u);
    ASSERT_TRUE(r.member);
    for (std::size_t p = 0; p < cs.size(); ++p)
        EXPECT_EQ(r.coefficients[p].second, p == 5 ? Rational(3) : p == 2 ? Rational(-1, 2) : Rational(0));
}

TEST(Closure, ProductsStayInTheDescentAlgebra) {
    for (int n = 1; n <= 5; ++n)
        for (auto conv : {Convention::variant_a, Convention::variant_b}) {
            const auto r = closure_check(n, conv);
            EXPECT_TRUE(r.passed) << n;
            EXPECT_EQ(r.pairs_checked, std::size_t{1} << (2 * (n - 1)));
        }
    EXPECT_THROW(closure_check(7), std::invalid_argument);
}
