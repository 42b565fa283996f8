#include <gtest/gtest.h>

#include <random>

#include <loopeis/weyl.hpp>

#include "oracles.hpp"

using namespace loopeis;

namespace {

std::vector<int> all_nodes(const CartanMatrix& a) {
    std::vector<int> v;
    for (int i = 1; i <= a.size(); ++i) v.push_back(i);
    return v;
}

std::vector<std::int64_t> count_by_length(const CartanMatrix& a, int max_length) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(max_length) + 1, 0);
    for_each_element(a, all_nodes(a), max_length, [&](const ElementView& w) {
        ++c[static_cast<std::size_t>(w.length())];
        return true;
    });
    return c;
}

}  // namespace

TEST(Weyl, ReflectionOfSimpleRoot) {
    const auto a = finite_cartan(Series::A, 2);
    EXPECT_EQ(reflect(a, 1, RootVector({1, 0})).coords(), (std::vector<std::int64_t>{-1, 0}));
    EXPECT_EQ(reflect(a, 1, RootVector({0, 1})).coords(), (std::vector<std::int64_t>{1, 1}));
}

TEST(Weyl, FiniteGroupOrders) {
    EXPECT_EQ(enumerate(finite_cartan(Series::A, 2), {1, 2}, 100).size(), 6u);
    EXPECT_EQ(enumerate(finite_cartan(Series::B, 2), {1, 2}, 100).size(), 8u);
    EXPECT_EQ(enumerate(finite_cartan(Series::G, 2), {1, 2}, 100).size(), 12u);
    EXPECT_EQ(enumerate(finite_cartan(Series::A, 3), {1, 2, 3}, 100).size(), 24u);
}

TEST(Weyl, FinitePoincareSeries) {
    for (const auto& t : finite_types(5)) {
        const auto a = finite_cartan(t);
        const auto deg = oracle::degrees(static_cast<char>(t.series), t.rank);
        int top = 0;
        for (int d : deg) top += d - 1;
        const auto expected = oracle::finite_poincare(deg, static_cast<std::size_t>(top) + 1);
        EXPECT_EQ(count_by_length(a, top), expected) << t.str();
        EXPECT_EQ(longest_element(a, all_nodes(a)).length(), top) << t.str();
    }
}

TEST(Weyl, AffinePoincareSeries) {
    for (const auto& t : affine_catalog(4)) {
        const auto a = finite_cartan(t);
        const auto deg = oracle::degrees(static_cast<char>(t.series), t.rank);
        const int depth = 10;
        EXPECT_EQ(count_by_length(a, depth), oracle::affine_poincare(deg, depth + 1)) << t.str();
    }
}

TEST(Weyl, EnumeratorIsLengthOrderedAndMatchesWalk) {
    const auto a = finite_cartan(TypeLabel::parse("G2affine"));
    WeylEnumerator e(a, {1, 2, 3}, 7);
    int last = 0;
    std::size_t n = 0;
    while (auto w = e.next()) {
        EXPECT_GE(w->length(), last);
        last = w->length();
        ++n;
    }
    std::int64_t total = 0;
    for (auto c : count_by_length(a, 7)) total += c;
    EXPECT_EQ(static_cast<std::int64_t>(n), total);
}

TEST(Weyl, ReduceCancelsAndRecoversLength) {
    const auto a = finite_cartan(Series::A, 2);
    EXPECT_TRUE(reduce(a, {1, 1}).is_identity());
    EXPECT_EQ(reduce(a, {1, 2, 1, 2}).length(), 2);
    EXPECT_EQ(reduce(a, {1, 2, 1}), reduce(a, {2, 1, 2}));
}

TEST(Weyl, BraidRelations) {
    for (const auto& t : affine_catalog(4)) {
        const auto a = finite_cartan(t);
        for (int i = 1; i <= a.size(); ++i)
            for (int j = i + 1; j <= a.size(); ++j) {
                const auto p = a.pairing(i, j) * a.pairing(j, i);
                const int mij = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : 0;
                if (mij == 0) continue;  // infinite order
                std::vector<int> x, y;
                for (int k = 0; k < mij; ++k) {
                    x.push_back(k % 2 == 0 ? i : j);
                    y.push_back(k % 2 == 0 ? j : i);
                }
                EXPECT_EQ(reduce(a, x), reduce(a, y)) << t.str() << " " << i << "," << j;
                EXPECT_EQ(reduce(a, x).length(), mij);
            }
    }
}

TEST(Weyl, InverseAndCompose) {
    std::mt19937 rng(7);
    const auto a = finite_cartan(TypeLabel::parse("C3affine"));
    std::uniform_int_distribution<int> node(1, a.size());
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<int> word(12);
        for (auto& x : word) x = node(rng);
        const auto w = reduce(a, word);
        EXPECT_TRUE(compose(w, inverse(w)).is_identity());
        EXPECT_EQ(inverse(w).length(), w.length());
        EXPECT_EQ(inversion_count(w, 20), w.length());
        const auto v = delta(a);
        EXPECT_EQ(w.apply(v), v);
    }
}

TEST(Weyl, RightDescents) {
    const auto a = finite_cartan(Series::A, 3);
    const auto w = reduce(a, {1, 2, 3});
    EXPECT_EQ(right_descents(w), (std::vector<int>{3}));
}

TEST(Weyl, LongestElementSendsPositiveToNegative) {
    for (const auto& t : finite_types(6)) {
        const auto a = finite_cartan(t);
        const auto w0 = longest_element(a, all_nodes(a));
        for (const auto& r : positive_roots(a)) EXPECT_TRUE(w0.apply(r).is_negative()) << t.str();
    }
}

TEST(Weyl, LongestElementOfInfiniteSubgroupThrows) {
    const auto a = finite_cartan(TypeLabel::parse("A1affine"));
    EXPECT_THROW(longest_element(a, {1, 2}), DomainError);
}
