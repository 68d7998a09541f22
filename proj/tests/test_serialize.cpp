#include <gtest/gtest.h>

#include <random>

#include "skewperm/skewperm.hpp"

using namespace skewperm;

TEST(Json, Rationals) {
    EXPECT_EQ(to_json(Rational(-3, 4)), "-3/4");
    EXPECT_EQ(to_json(Rational(5)), "5/1");
    EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
    EXPECT_EQ(rational_from_json(Json(7)), 7);
    EXPECT_THROW(rational_from_json(Json("1/0")), std::invalid_argument);
}

TEST(Json, GroupAlgebraElementRoundTrip) {
    const auto u = from_stat(StatKind::maj, 4, true);
    const auto j = to_json(u);
    EXPECT_EQ(j.at("n"), 4);
    EXPECT_EQ(j.at("coeffs").size(), 24u);
    EXPECT_EQ(j.at("coeffs")[0], "-3/1");
    EXPECT_EQ(ga_element_from_json(Json::parse(j.dump())), u);
    EXPECT_THROW(ga_element_from_json(Json{{"n", 3}, {"coeffs", {"1/1"}}}), std::invalid_argument);
}

TEST(Json, SkewMatrixRoundTrip) {
    const auto a = Rational(1, 3) * h_matrix(StatKind::inv, 5) + toeplitz_b(5);
    const auto j = to_json(a);
    EXPECT_EQ(j.at("upper").size(), 10u);
    EXPECT_EQ(skew_matrix_from_json(Json::parse(j.dump())), a);
}

TEST(Json, Reports) {
    const auto s = to_json(verify_spectrum(StatKind::inv, 3));
    EXPECT_EQ(s.at("stat"), "inv");
    EXPECT_EQ(s.at("passed"), true);
    EXPECT_EQ(s.at("eigenvalues")[0].at("value"), "9/1");
    EXPECT_EQ(s.at("kernel_dim"), 2);

    const auto ids = to_json(convolution_identities(3, Convention::variant_b));
    EXPECT_EQ(ids.size(), 6u);
    EXPECT_EQ(ids[0].at("passed"), true);

    const auto m = to_json(solomon_membership(from_stat(StatKind::des, 3, false)));
    EXPECT_EQ(m.at("member"), true);
    EXPECT_EQ(m.at("coefficients")[3].at("composition"), Json({1, 1, 1}));
    EXPECT_EQ(m.at("coefficients")[3].at("coefficient"), "2/1");
    EXPECT_FALSE(m.contains("residual"));
    const auto nm = to_json(solomon_membership(from_stat(StatKind::inv, 3, false)));
    EXPECT_EQ(nm.at("member"), false);
    EXPECT_EQ(nm.at("residual").at("n"), 3);
}

TEST(Csv, BenchRow) {
    BenchRecord b;
    b.stat = StatKind::maj;
    b.n = 6;
    b.naive_ns = 1000;
    b.structured_ns = 10;
    b.op_ratio = ratio(720, 16);
    EXPECT_EQ(std::string(kBenchCsvHeader), "stat,n,naive_ns,structured_ns,op_ratio");
    EXPECT_EQ(to_csv_row(b), "maj,6,1000,10,45/1");
    EXPECT_EQ(to_json(b).at("op_ratio"), "45/1");
}

TEST(Csv, MatrixAndElement) {
    EXPECT_EQ(to_csv(h_matrix(StatKind::des, 3)), "0/1,1/1,0/1\n-1/1,0/1,1/1\n0/1,-1/1,0/1\n");
    const auto e = to_csv(from_stat(StatKind::inv, 3, false));
    EXPECT_EQ(e.substr(0, e.find('\n')), "permutation,coefficient");
    EXPECT_NE(e.find("3-2-1,3/1\n"), std::string::npos);
    EXPECT_NE(e.find("1-2-3,0/1\n"), std::string::npos);
}
