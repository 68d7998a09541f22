#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewperm;

TEST(Compose, IdentityAndInverseLaws) {
    for (auto conv : {Convention::variant_a, Convention::variant_b})
        for (const auto& s : all_permutations(4)) {
            EXPECT_EQ(compose(Permutation::identity(4), s, conv), s);
            EXPECT_EQ(compose(s, Permutation::identity(4), conv), s);
            EXPECT_TRUE(compose(s, s.inverse(), conv).is_identity());
            EXPECT_EQ(s.inverse().inverse(), s);
        }
}

TEST(Compose, ValueCompositionExample) {
    EXPECT_EQ(apply_after(Permutation{2, 1, 3}, Permutation{1, 3, 2}), (Permutation{2, 3, 1}));
    EXPECT_EQ(compose(Permutation{2, 1, 3}, Permutation{1, 3, 2}, Convention::variant_a), (Permutation{2, 3, 1}));
}

TEST(Compose, MatchesOracleUnderBothConventions) {
    for (const auto& a : oracle::perms(4))
        for (const auto& b : oracle::perms(4)) {
            const auto la = support::to_lib(a), lb = support::to_lib(b);
            EXPECT_EQ(compose(la, lb, Convention::variant_a).one_line(), oracle::after(a, b));
            EXPECT_EQ(compose(la, lb, Convention::variant_b).one_line(), oracle::left_first(a, b));
        }
}

TEST(Compose, Associative) {
    const auto all = all_permutations(4);
    for (auto conv : {Convention::variant_a, Convention::variant_b})
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = 0; j < all.size(); j += 5)
                for (const auto& c : all)
                    EXPECT_EQ(compose(compose(all[i], all[j], conv), c, conv), compose(all[i], compose(all[j], c, conv), conv));
}

TEST(Compose, DegreeMismatchThrows) {
    EXPECT_THROW(compose(Permutation{1, 2}, Permutation{1, 2, 3}), std::invalid_argument);
}

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW((Permutation{1, 1, 2}), std::invalid_argument);
    EXPECT_THROW((Permutation{0, 1}), std::invalid_argument);
    EXPECT_THROW((Permutation{1, 4, 2}), std::invalid_argument);
}

TEST(DescentSet, Examples) {
    EXPECT_TRUE(descent_set(Permutation::identity(5)).empty());
    EXPECT_EQ(descent_set(Permutation::reversal(5)), (std::set<int>{1, 2, 3, 4}));
    EXPECT_EQ(descent_set(Permutation{3, 1, 2}), (std::set<int>{1}));
}

TEST(Stat, Examples) {
    for (int n = 1; n <= 6; ++n) {
        const auto id = Permutation::identity(n);
        EXPECT_EQ(stat(StatKind::maj, id), 0);
        EXPECT_EQ(stat(StatKind::inv, id), 0);
        EXPECT_EQ(stat(StatKind::fix, id), n);
        const auto rev = Permutation::reversal(n);
        EXPECT_EQ(stat(StatKind::inv, rev), n * (n - 1) / 2);
        EXPECT_EQ(stat(StatKind::maj, rev), n * (n - 1) / 2);
        EXPECT_EQ(stat(StatKind::des, rev), n - 1);
    }
    const Permutation s{3, 1, 2};
    EXPECT_EQ(stat(StatKind::des, s), 1);
    EXPECT_EQ(stat(StatKind::maj, s), 1);
    EXPECT_EQ(stat(StatKind::inv, s), 2);
    EXPECT_EQ(stat(StatKind::exc, s), 1);
    EXPECT_EQ(stat(StatKind::fix, s), 0);
    EXPECT_EQ(stat(StatKind::comaj, s), 2);
}

TEST(Stat, MatchesDirectLoops) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : oracle::perms(n)) {
            const auto s = support::to_lib(p);
            ASSERT_EQ(stat(StatKind::des, s), oracle::des(p));
            ASSERT_EQ(stat(StatKind::maj, s), oracle::maj(p));
            ASSERT_EQ(stat(StatKind::inv, s), oracle::inv(p));
            ASSERT_EQ(stat(StatKind::exc, s), oracle::exc(p));
            ASSERT_EQ(stat(StatKind::fix, s), oracle::fix(p));
            ASSERT_EQ(stat(StatKind::comaj, s), n * oracle::des(p) - oracle::maj(p));
        }
}

TEST(StatKind, ParsePrintRoundTrip) {
    for (auto k : kAllStats) EXPECT_EQ(parse_stat(name(k)), k);
    EXPECT_THROW(parse_stat("foo"), std::invalid_argument);
}

TEST(GeneratingPolynomial, Examples) {
    EXPECT_EQ(generating_polynomial(StatKind::inv, 2), (std::vector<std::uint64_t>{1, 1}));
    EXPECT_EQ(generating_polynomial(StatKind::maj, 3), (std::vector<std::uint64_t>{1, 2, 2, 1}));
    EXPECT_EQ(generating_polynomial(StatKind::des, 3), (std::vector<std::uint64_t>{1, 4, 1}));
}

TEST(GeneratingPolynomial, QFactorialAndEulerian) {
    for (int n = 1; n <= 7; ++n) {
        const auto qf = oracle::q_factorial(n);
        const auto eu = oracle::eulerian(n);
        const auto as_u64 = [](const std::vector<long>& v) { return std::vector<std::uint64_t>(v.begin(), v.end()); };
        EXPECT_EQ(generating_polynomial(StatKind::inv, n), as_u64(qf)) << n;
        EXPECT_EQ(generating_polynomial(StatKind::maj, n), as_u64(qf)) << n;
        EXPECT_EQ(generating_polynomial(StatKind::des, n), as_u64(eu)) << n;
        EXPECT_EQ(generating_polynomial(StatKind::exc, n), as_u64(eu)) << n;
    }
}

TEST(StatSum, ClosedForms) {
    EXPECT_EQ(stat_sum(StatKind::maj, 4), 72);
    EXPECT_EQ(stat_sum(StatKind::des, 4), 36);
    EXPECT_EQ(stat_sum(StatKind::inv, 2), 1);
    for (int n = 2; n <= 8; ++n) {
        const auto f = static_cast<std::int64_t>(factorial(n));
        EXPECT_EQ(stat_sum(StatKind::maj, n), f * n * (n - 1) / 4);
        EXPECT_EQ(stat_sum(StatKind::inv, n), f * n * (n - 1) / 4);
        EXPECT_EQ(stat_sum(StatKind::des, n), f * (n - 1) / 2);
    }
}

TEST(Characters, IdentityValuesAndOrthogonality) {
    EXPECT_EQ(chi_nat(Permutation::identity(5)), 4);
    EXPECT_EQ(chi_wedge2(Permutation::identity(5)), 6);
    for (int n = 3; n <= 7; ++n) {
        long nn = 0, ww = 0, nw = 0;
        for (const auto& p : oracle::perms(n)) {
            const auto s = support::to_lib(p);
            ASSERT_EQ(chi_nat(s), oracle::fix(p) - 1);
            ASSERT_EQ(chi_wedge2(s), oracle::wedge2_character(p));
            nn += chi_nat(s) * chi_nat(s);
            ww += chi_wedge2(s) * chi_wedge2(s);
            nw += chi_nat(s) * chi_wedge2(s);
        }
        EXPECT_EQ(nn, static_cast<long>(factorial(n)));
        EXPECT_EQ(ww, static_cast<long>(factorial(n)));
        EXPECT_EQ(nw, 0);
    }
    EXPECT_THROW(chi_nat(Permutation{1}), std::invalid_argument);
    EXPECT_THROW(chi_wedge2(Permutation{2, 1}), std::invalid_argument);
}

TEST(Enumeration, LexicographicRankUnrank) {
    EXPECT_EQ(rank(Permutation::identity(4)), 0u);
    EXPECT_EQ(unrank(23, 4), Permutation::reversal(4));
    std::vector<std::string> s3;
    for (const auto& p : all_permutations(3)) s3.push_back(p.str());
    EXPECT_EQ(s3, (std::vector<std::string>{"[1,2,3]", "[1,3,2]", "[2,1,3]", "[2,3,1]", "[3,1,2]", "[3,2,1]"}));
    for (int n = 1; n <= 6; ++n) {
        const auto ref = oracle::perms(n);
        for (std::size_t k = 0; k < ref.size(); ++k) {
            ASSERT_EQ(unrank(k, n).one_line(), ref[k]);
            ASSERT_EQ(rank(support::to_lib(ref[k])), k);
        }
    }
}

TEST(Enumeration, DegreeCap) {
    EXPECT_THROW(all_permutations(degree_cap() + 1), std::out_of_range);
    EXPECT_THROW(unrank(factorial(4), 4), std::out_of_range);
}
