#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace skewperm;

namespace {

GAElement random_element(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Rational> c(factorial(n));
    for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) & 1));
    return GAElement(n, std::move(c));
}

oracle::Perm oracle_product(const oracle::Perm& a, const oracle::Perm& b, Convention conv) {
    return conv == Convention::variant_a ? oracle::after(a, b) : oracle::left_first(a, b);
}

}  // namespace

TEST(FromStat, Examples) {
    const auto d = from_stat(StatKind::des, 2, false);
    EXPECT_EQ(d[0], 0);
    EXPECT_EQ(d[1], 1);
    const auto dc = from_stat(StatKind::des, 2, true);
    EXPECT_EQ(dc[0], Rational(-1, 2));
    EXPECT_EQ(dc[1], Rational(1, 2));
    EXPECT_EQ(from_stat(StatKind::maj, 5, false).sum(), 600);
    for (auto k : {StatKind::des, StatKind::maj, StatKind::inv}) EXPECT_EQ(from_stat(k, 5, true).sum(), 0);
    // Centering constants (n-1)/2 for des and n(n-1)/4 for maj and inv.
    EXPECT_EQ(from_stat(StatKind::des, 5, false)[0] - from_stat(StatKind::des, 5, true)[0], 2);
    EXPECT_EQ(from_stat(StatKind::inv, 5, false)[0] - from_stat(StatKind::inv, 5, true)[0], 5);
}

TEST(Convolve, UnitAndAllOnes) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 5; ++n) {
        const auto v = random_element(n, rng);
        EXPECT_EQ(convolve(GAElement::identity(n), v), v);
        EXPECT_EQ(convolve(v, GAElement::identity(n)), v);
        EXPECT_EQ(convolve(GAElement::ones(n), GAElement::ones(n)), Rational(factorial(n)) * GAElement::ones(n));
    }
}

TEST(Convolve, DesTildeSquaredAtFour) {
    const auto d = from_stat(StatKind::des, 4, true);
    EXPECT_EQ(convolve(d, d), Rational(-6) * d);
}

TEST(Convolve, MatchesMapOracleBothConventions) {
    std::mt19937_64 rng(2);
    for (auto conv : {Convention::variant_a, Convention::variant_b})
        for (int n = 2; n <= 4; ++n)
            for (int t = 0; t < 3; ++t) {
                const auto u = random_element(n, rng), v = random_element(n, rng);
                const auto want = oracle::convolve(support::to_map(u), support::to_map(v),
                                                   [conv](const auto& a, const auto& b) { return oracle_product(a, b, conv); });
                EXPECT_EQ(support::to_map(convolve(u, v, conv)), want);
            }
}

TEST(Convolve, BigCoefficientsTakeExactPath) {
    std::vector<Rational> c(6, Rational(0));
    c[0] = Rational(Integer(1) << 70);
    c[3] = Rational(1, 3);
    const GAElement u(3, c);
    const auto want = oracle::convolve(support::to_map(u), support::to_map(u),
                                       [](const auto& a, const auto& b) { return oracle::left_first(a, b); });
    EXPECT_EQ(support::to_map(convolve(u, u, Convention::variant_b)), want);
}

TEST(Convolve, AssociativeOnRandomTriples) {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 5; ++n) {
        const auto a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
        EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
    }
}

TEST(Convolve, DegreeMismatchThrows) {
    EXPECT_THROW(convolve(GAElement::ones(2), GAElement::ones(3)), std::invalid_argument);
    EXPECT_THROW(inner(GAElement::ones(2), GAElement::ones(3)), std::invalid_argument);
}

TEST(Inner, Examples) {
    EXPECT_EQ(inner(GAElement::identity(4), GAElement::identity(4)), 1);
    EXPECT_EQ(inner(from_stat(StatKind::des, 4, true), GAElement::ones(4)), 0);
    for (int n = 3; n <= 6; ++n)
        EXPECT_EQ(inner(pseudounit(1, 2, n), pseudounit(1, 3, n)) / Rational(factorial(n)), Rational(1, 3));
}

TEST(Translate, IsMultiplicationByBasisElement) {
    std::mt19937_64 rng(4);
    for (auto conv : {Convention::variant_a, Convention::variant_b}) {
        const auto u = random_element(4, rng);
        for (const auto& s : all_permutations(4)) {
            const auto ds = GAElement::delta(s);
            EXPECT_EQ(translate(u, s, Side::left, conv), convolve(ds, u, conv));
            EXPECT_EQ(translate(u, s, Side::right, conv), convolve(u, ds, conv));
        }
    }
}

TEST(Translate, Examples) {
    std::mt19937_64 rng(5);
    const auto u = random_element(4, rng);
    for (const auto& s : all_permutations(4)) {
        EXPECT_EQ(translate(GAElement::identity(4), s, Side::left), GAElement::delta(s));
        EXPECT_EQ(translate(translate(u, s, Side::left), s.inverse(), Side::left), u);
        EXPECT_EQ(translate(translate(u, s, Side::right), s.inverse(), Side::right), u);
    }
    EXPECT_EQ(translate(u, Permutation::identity(4), Side::right), u);
}

TEST(Translate, PseudounitIndicesUnderPinnedSide) {
    // Under the pinned pair, multiplying u_12 by s on the ideal side yields
    // the pseudounit indexed by the preimages of 1 and 2.
    for (const auto& s : all_permutations(3)) {
        const auto si = s.inverse();
        EXPECT_EQ(translate(pseudounit(1, 2, 3), s, ideal_side()), pseudounit(si(1), si(2), 3)) << s;
    }
}

TEST(Translate, CommutesWithConvolutionOnOtherSide) {
    std::mt19937_64 rng(6);
    for (int n = 3; n <= 5; ++n) {
        const auto u = random_element(n, rng), v = random_element(n, rng);
        const auto s = unrank(rng() % factorial(n), n);
        EXPECT_EQ(translate(convolve(u, v), s, Side::left), convolve(translate(u, s, Side::left), v));
        EXPECT_EQ(translate(convolve(u, v), s, Side::right), convolve(u, translate(v, s, Side::right)));
    }
}

TEST(IdealDimension, Examples) {
    EXPECT_EQ(ideal_dimension(GAElement::identity(4)), 24u);
    EXPECT_EQ(ideal_dimension(from_stat(StatKind::inv, 4, false)), 7u);
    EXPECT_EQ(ideal_dimension(from_stat(StatKind::exc, 4, false)), 10u);
}

TEST(IdealDimension, MatchesOracleRankOfTranslates) {
    const int n = 4;
    for (auto k : {StatKind::maj, StatKind::des, StatKind::inv, StatKind::exc, StatKind::fix}) {
        const auto u = from_stat(k, n, false);
        const auto um = support::to_map(u);
        std::vector<std::vector<oracle::Q>> rows;
        const auto ps = oracle::perms(n);
        for (const auto& s : ps) {
            oracle::Element ds{{s, oracle::Q(1)}};
            const auto t = oracle::convolve(ds, um, [](const auto& a, const auto& b) { return oracle::left_first(a, b); });
            std::vector<oracle::Q> row;
            for (const auto& p : ps) row.push_back(t.count(p) ? t.at(p) : oracle::Q(0));
            rows.push_back(row);
        }
        EXPECT_EQ(ideal_dimension(u, Side::left), oracle::rank(rows)) << name(k);
    }
}

TEST(IdealDimension, ClosedFormsAndSharedIdeals) {
    for (int n = 3; n <= 5; ++n) {
        const std::size_t m1 = n * (n - 1) / 2 + 1, e1 = (n - 1) * (n - 1) + 1;
        std::vector<GAElement> three;
        for (auto k : {StatKind::maj, StatKind::des, StatKind::inv}) {
            three.push_back(from_stat(k, n, false));
            EXPECT_EQ(ideal_dimension(three.back()), m1);
        }
        EXPECT_EQ(span_dimension(three, ideal_side()), m1);
        std::vector<GAElement> ef{from_stat(StatKind::exc, n, false), from_stat(StatKind::fix, n, false)};
        EXPECT_EQ(ideal_dimension(ef[0]), e1);
        EXPECT_EQ(span_dimension(ef, ideal_side()), e1);
    }
}

TEST(IdealDimension, PseudounitsSpanInvariantOnlyOnPinnedSide) {
    for (int n = 3; n <= 4; ++n) {
        const auto us = pseudounits(n);
        EXPECT_EQ(span_dimension(us, ideal_side()), us.size());
        EXPECT_GT(span_dimension(us, opposite(ideal_side())), us.size());
    }
}

TEST(Pseudounit, Examples) {
    const auto u = pseudounit(1, 2, 2);
    EXPECT_EQ(u[0], 1);
    EXPECT_EQ(u[1], -1);
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) {
            EXPECT_TRUE(pseudounit(i, i, n).is_zero());
            for (int j = 1; j <= n; ++j) EXPECT_EQ(pseudounit(j, i, n), -pseudounit(i, j, n));
        }
    EXPECT_THROW(pseudounit(0, 1, 3), std::out_of_range);
    EXPECT_EQ(inner(pseudounit(1, 2, 3), pseudounit(2, 3, 3)) / Rational(6), Rational(-1, 3));
}

TEST(Pseudounit, GramMatchesOracle) {
    for (int n = 2; n <= 5; ++n) {
        const auto g = gram_pseudounits(n);
        const auto pairs = upper_pairs(n);
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                long s = 0;
                for (const auto& p : oracle::perms(n)) {
                    const auto e = [&](int i, int j) { return p[i - 1] < p[j - 1] ? 1 : -1; };
                    s += e(pairs[a].first, pairs[a].second) * e(pairs[b].first, pairs[b].second);
                }
                EXPECT_EQ(g[a][b], ratio(s, static_cast<long>(factorial(n))));
            }
    }
    const auto g4 = gram_pseudounits(4);
    EXPECT_EQ(g4[pair_index(1, 2, 4)][pair_index(3, 4, 4)], 0);
    EXPECT_EQ(g4[pair_index(1, 2, 4)][pair_index(1, 2, 4)], 1);
    EXPECT_EQ(g4[pair_index(1, 2, 4)][pair_index(1, 3, 4)], Rational(1, 3));
}

TEST(CentralIdempotent, Examples) {
    EXPECT_TRUE(central_idempotent_apply(DiagramLabel::row, GAElement::ones(4)).is_zero());
    EXPECT_TRUE(central_idempotent_apply(DiagramLabel::hook, GAElement::ones(4)).is_zero());
    for (int n = 3; n <= 5; ++n)
        for (const auto& [i, j] : upper_pairs(n)) {
            const auto u = pseudounit(i, j, n);
            const auto c1 = central_idempotent_apply(DiagramLabel::row, u);
            GAElement rhs(n);
            for (int k = 1; k <= n; ++k) rhs = rhs + pseudounit(i, k, n) + pseudounit(k, j, n);
            EXPECT_EQ(c1, ratio(1, n) * rhs);
            EXPECT_EQ(c1 + central_idempotent_apply(DiagramLabel::hook, u), u);
        }
}

TEST(CentralIdempotent, IdempotentOrthogonalAndCentral) {
    std::mt19937_64 rng(8);
    for (int n = 3; n <= 5; ++n) {
        const auto c1 = central_idempotent(DiagramLabel::row, n);
        const auto c2 = central_idempotent(DiagramLabel::hook, n);
        EXPECT_EQ(convolve(c1, c1), c1);
        EXPECT_EQ(convolve(c2, c2), c2);
        EXPECT_TRUE(convolve(c1, c2).is_zero());
        const auto u = random_element(n, rng);
        EXPECT_EQ(convolve(c1, u), convolve(u, c1));
        const auto s = unrank(rng() % factorial(n), n);
        EXPECT_EQ(central_idempotent_apply(DiagramLabel::row, translate(u, s, Side::left)),
                  translate(central_idempotent_apply(DiagramLabel::row, u), s, Side::left));
    }
    EXPECT_THROW(central_idempotent(DiagramLabel::row, 2), std::invalid_argument);
}

TEST(PrimedInner, Orthonormal) {
    EXPECT_EQ(primed_inner({1, 2}, {1, 2}, 4), 1);
    EXPECT_EQ(primed_inner({1, 2}, {3, 4}, 4), 0);
    const auto c12 = central_idempotent_apply(DiagramLabel::row, pseudounit(1, 2, 4));
    const auto c13 = central_idempotent_apply(DiagramLabel::row, pseudounit(1, 3, 4));
    EXPECT_EQ(inner(c12, c13) / Rational(24), Rational(5, 12));
    for (int n = 3; n <= 5; ++n) {
        const auto pairs = upper_pairs(n);
        for (const auto& a : pairs)
            for (const auto& b : pairs) EXPECT_EQ(primed_inner(a, b, n), Rational(a == b ? 1 : 0));
    }
}
