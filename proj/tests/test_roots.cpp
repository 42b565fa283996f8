#include <gtest/gtest.h>

#include <algorithm>

#include <loopeis/roots.hpp>

#include "oracles.hpp"

using namespace loopeis;

namespace {

std::vector<std::vector<std::int64_t>> sorted_coords(const std::vector<RootVector>& rs) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& r : rs) out.push_back(r.coords());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Roots, ClosureMatchesBruteForceOracle) {
    for (const auto& t : finite_types(7)) {
        const auto a = finite_cartan(t);
        auto expected = oracle::brute_positive_roots(a.entries().to_rows());
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(sorted_coords(positive_roots(a)), expected) << t.str();
    }
}

TEST(Roots, Counts) {
    EXPECT_EQ(positive_roots(finite_cartan(Series::E, 6)).size(), 36u);
    EXPECT_EQ(positive_roots(finite_cartan(Series::E, 7)).size(), 63u);
    EXPECT_EQ(positive_roots(finite_cartan(Series::E, 8)).size(), 120u);
    EXPECT_EQ(positive_roots(finite_cartan(Series::F, 4)).size(), 24u);
    EXPECT_EQ(positive_roots(finite_cartan(Series::G, 2)).size(), 6u);
    EXPECT_EQ(positive_roots(finite_cartan(Series::B, 5)).size(), 25u);
    EXPECT_EQ(positive_roots(finite_cartan(Series::D, 5)).size(), 20u);
}

TEST(Roots, OrderedByHeight) {
    const auto rs = positive_roots(finite_cartan(Series::E, 7));
    for (std::size_t k = 1; k < rs.size(); ++k) EXPECT_LE(rs[k - 1].height(), rs[k].height());
    EXPECT_EQ(rs.back(), highest_root(finite_cartan(Series::E, 7)));
}

TEST(Roots, HighestRootKnownValues) {
    EXPECT_EQ(marks(finite_cartan(Series::E, 6)), (std::vector<std::int64_t>{1, 2, 2, 3, 2, 1}));
    EXPECT_EQ(marks(finite_cartan(Series::E, 8)), (std::vector<std::int64_t>{2, 3, 4, 6, 5, 4, 3, 2}));
    EXPECT_EQ(marks(finite_cartan(Series::G, 2)), (std::vector<std::int64_t>{3, 2}));
    EXPECT_EQ(comarks(finite_cartan(Series::G, 2)), (std::vector<std::int64_t>{1, 2}));
    EXPECT_EQ(marks(finite_cartan(Series::F, 4)), (std::vector<std::int64_t>{2, 3, 4, 2}));
    EXPECT_EQ(comarks(finite_cartan(Series::F, 4)), (std::vector<std::int64_t>{2, 3, 2, 1}));
}

TEST(Roots, ComarksMatchHighestCorootOracle) {
    for (const auto& t : finite_types(8)) {
        const auto a = finite_cartan(t);
        EXPECT_EQ(comarks(a), oracle::comarks_from_highest(a.entries().to_rows(), marks(a))) << t.str();
    }
}

TEST(Roots, DualCoxeterTable) {
    for (int l = 1; l <= 8; ++l) EXPECT_EQ(dual_coxeter(finite_cartan(Series::A, l)), l + 1);
    for (int l = 2; l <= 8; ++l) EXPECT_EQ(dual_coxeter(finite_cartan(Series::B, l)), 2 * l - 1);
    for (int l = 2; l <= 8; ++l) EXPECT_EQ(dual_coxeter(finite_cartan(Series::C, l)), l + 1);
    for (int l = 4; l <= 8; ++l) EXPECT_EQ(dual_coxeter(finite_cartan(Series::D, l)), 2 * l - 2);
    EXPECT_EQ(dual_coxeter(finite_cartan(Series::E, 6)), 12);
    EXPECT_EQ(dual_coxeter(finite_cartan(Series::E, 7)), 18);
    EXPECT_EQ(dual_coxeter(finite_cartan(Series::E, 8)), 30);
    EXPECT_EQ(dual_coxeter(finite_cartan(Series::F, 4)), 9);
    EXPECT_EQ(dual_coxeter(finite_cartan(Series::G, 2)), 4);
}

TEST(Roots, CoxeterNumberIsTopDegree) {
    for (const auto& t : finite_types(8)) {
        const auto d = oracle::degrees(static_cast<char>(t.series), t.rank);
        EXPECT_EQ(coxeter_number(finite_cartan(t)), *std::max_element(d.begin(), d.end())) << t.str();
    }
}

TEST(Roots, DeltaAndCentralElement) {
    const auto a = finite_cartan(TypeLabel::parse("E6affine"));
    EXPECT_EQ(delta(a).coords(), (std::vector<std::int64_t>{1, 2, 2, 3, 2, 1, 1}));
    EXPECT_EQ(central_coroot(a), (std::vector<std::int64_t>{1, 2, 2, 3, 2, 1, 1}));
    const auto g = finite_cartan(TypeLabel::parse("G2affine"));
    EXPECT_EQ(delta(g).coords(), (std::vector<std::int64_t>{3, 2, 1}));
    EXPECT_EQ(central_coroot(g), (std::vector<std::int64_t>{1, 2, 1}));
}

TEST(Roots, AffineRootsAtDepth) {
    const auto a = finite_cartan(TypeLabel::parse("A2affine"));
    const auto rs = affine_roots(a, 1);
    // Real roots: 6 finite roots times 3 delta shifts; imaginary: +-delta.
    std::size_t real = 0, imag = 0;
    for (const auto& r : rs) (r.imaginary ? imag : real)++;
    EXPECT_EQ(real, 18u);
    EXPECT_EQ(imag, 2u);
    for (const auto& r : rs) EXPECT_TRUE(r.coords.is_positive() || r.coords.is_negative());
}

TEST(Roots, RootsInSpanOfTheta) {
    const auto a = finite_cartan(TypeLabel::parse("E6affine"));
    const auto rs = roots_in_span(a, {1, 2, 3, 5, 6, 7}, 3);
    EXPECT_EQ(rs.size(), 18u);  // three A2 systems, 6 roots each
    EXPECT_THROW(roots_in_span(a, {1, 2, 3, 4, 5, 6, 7}, 1), DomainError);
}

TEST(Roots, Errors) {
    EXPECT_THROW(highest_root(finite_cartan(TypeLabel::parse("A2affine"))), DomainError);
    EXPECT_THROW(delta(finite_cartan(Series::A, 2)), DomainError);
    EXPECT_THROW(RootVector::simple(3, 0), DomainError);
}
