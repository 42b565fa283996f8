#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <loopeis/cartan.hpp>
#include <loopeis/roots.hpp>

#include "oracles.hpp"

using namespace loopeis;

namespace {

IntMatrix m(std::vector<std::vector<std::int64_t>> rows) { return IntMatrix::from_rows(rows); }

}  // namespace

TEST(Cartan, A2Entries) {
    const auto a = finite_cartan(Series::A, 2);
    EXPECT_EQ(a.entries(), m({{2, -1}, {-1, 2}}));
    EXPECT_EQ(a.rank(), 2);
    EXPECT_TRUE(a.is_finite());
}

TEST(Cartan, B2AndC2AreTransposes) {
    const auto b = finite_cartan(Series::B, 2);
    const auto c = finite_cartan(Series::C, 2);
    EXPECT_EQ(b.entries(), m({{2, -2}, {-1, 2}}));
    EXPECT_EQ(c.entries(), b.entries().transpose());
    EXPECT_EQ(classify(c).str(), "B2");
}

TEST(Cartan, G2LongAndShort) {
    const auto g = finite_cartan(Series::G, 2);
    EXPECT_EQ(g.entries(), m({{2, -1}, {-3, 2}}));
    const auto& len = g.root_lengths();
    EXPECT_EQ(len[0], 1);
    EXPECT_EQ(len[1], 3);
}

TEST(Cartan, SymmetrizerSymmetrizes) {
    for (const auto& t : finite_types(8)) {
        const auto a = finite_cartan(t);
        const auto d = a.symmetrizer();
        for (int i = 1; i <= a.size(); ++i)
            for (int j = 1; j <= a.size(); ++j)
                EXPECT_EQ(d[i - 1] * a.pairing(i, j), d[j - 1] * a.pairing(j, i)) << t.str();
    }
}

TEST(Cartan, AffineA1) {
    const auto a = finite_cartan(TypeLabel::parse("A1affine"));
    EXPECT_EQ(a.entries(), m({{2, -2}, {-2, 2}}));
    EXPECT_TRUE(a.is_affine());
    EXPECT_EQ(a.rank(), 1);
}

TEST(Cartan, AffineE6Node7AttachesToNode2) {
    const auto a = finite_cartan(TypeLabel::parse("E6affine"));
    for (int j = 1; j <= 6; ++j) EXPECT_EQ(a.pairing(7, j), j == 2 ? -1 : 0);
    EXPECT_EQ(determinant(a.entries()), 0);
}

TEST(Cartan, AffineC2AndG2) {
    EXPECT_EQ(finite_cartan(TypeLabel::parse("C2affine")).entries(), m({{2, -1, -1}, {-2, 2, 0}, {-2, 0, 2}}));
    EXPECT_EQ(finite_cartan(TypeLabel::parse("G2affine")).entries(), m({{2, -1, 0}, {-3, 2, -1}, {0, -1, 2}}));
}

TEST(Cartan, AffineNullVectors) {
    // Left null vector: marks with 1 on the affine node. Right: comarks with 1.
    for (const auto& t : affine_catalog(8)) {
        const auto a = finite_cartan(t);
        const auto f = a.finite_part();
        auto mk = marks(f);
        auto cm = comarks(f);
        mk.push_back(1);
        cm.push_back(1);
        const auto& e = a.entries();
        EXPECT_EQ(e.transpose() * std::span<const std::int64_t>(mk), std::vector<std::int64_t>(mk.size(), 0)) << t.str();
        EXPECT_EQ(e * std::span<const std::int64_t>(cm), std::vector<std::int64_t>(cm.size(), 0)) << t.str();
    }
}

TEST(Cartan, FromEntriesRejects) {
    EXPECT_THROW(CartanMatrix::from_entries(m({{2, 1}, {-1, 2}})), DomainError);
    EXPECT_THROW(CartanMatrix::from_entries(m({{2, -1}, {0, 2}})), DomainError);
    EXPECT_THROW(CartanMatrix::from_entries(m({{2, -3}, {-3, 2}})), DomainError);
    EXPECT_THROW(CartanMatrix::from_entries(m({{2, -4}, {-1, 2}})), UnsupportedError);
}

TEST(Cartan, FromEntriesAcceptsReducible) {
    const auto a = CartanMatrix::from_entries(m({{2, 0}, {0, 2}}));
    EXPECT_TRUE(a.is_finite());
    EXPECT_FALSE(a.is_irreducible());
}

TEST(Cartan, UnsupportedLabels) {
    EXPECT_THROW(finite_cartan(Series::D, 3), DomainError);
    EXPECT_THROW(finite_cartan(Series::E, 9), DomainError);
    EXPECT_THROW(TypeLabel::parse("Q4"), DomainError);
}

TEST(Cartan, LabelRoundTrip) {
    for (const auto& t : affine_catalog(8)) EXPECT_EQ(TypeLabel::parse(t.str()), t);
    EXPECT_EQ(affine_catalog(1).size(), 1u);
    EXPECT_EQ(affine_catalog(8).size(), 31u);
}

TEST(Cartan, DiagramRoundTrip) {
    for (const auto& t : finite_types(8)) {
        const auto a = finite_cartan(t);
        EXPECT_EQ(cartan_from_diagram(dynkin_diagram(a)), a) << t.str();
        const auto aff = affinize(a);
        EXPECT_EQ(cartan_from_diagram(dynkin_diagram(aff)), aff) << t.str();
    }
}

// Property: classification is invariant under random relabelling of nodes.
TEST(Cartan, ClassifyInvariantUnderPermutation) {
    std::mt19937 rng(12345);
    for (const auto& t : finite_types(8)) {
        const auto rows = finite_cartan(t).entries().to_rows();
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<std::size_t> p(rows.size());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            const auto b = CartanMatrix::from_entries(IntMatrix::from_rows(oracle::permute(rows, p)));
            ASSERT_TRUE(b.label().has_value());
            EXPECT_EQ(*b.label(), t) << t.str();
        }
    }
}

TEST(Cartan, SubdiagramComponents) {
    const auto a = finite_cartan(TypeLabel::parse("E6affine"));
    const auto parts = subdiagram(a, {1, 2, 3, 5, 6, 7});
    ASSERT_EQ(parts.size(), 3u);
    for (const auto& p : parts) EXPECT_EQ(classify(p.cartan).str(), "A2");
}

TEST(Cartan, DeterminantsOfFiniteTypes) {
    // det = index of the root lattice in the weight lattice.
    EXPECT_EQ(determinant(finite_cartan(Series::A, 5).entries()), 6);
    EXPECT_EQ(determinant(finite_cartan(Series::D, 6).entries()), 4);
    EXPECT_EQ(determinant(finite_cartan(Series::E, 6).entries()), 3);
    EXPECT_EQ(determinant(finite_cartan(Series::E, 7).entries()), 2);
    EXPECT_EQ(determinant(finite_cartan(Series::E, 8).entries()), 1);
    EXPECT_EQ(determinant(finite_cartan(Series::F, 4).entries()), 1);
    EXPECT_EQ(determinant(finite_cartan(Series::B, 4).entries()), 2);
}
