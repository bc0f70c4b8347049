#include "oracles.hpp"

#include "turan/exact.hpp"
#include "turan/hypergraph.hpp"
#include "turan/io.hpp"
#include "turan/ksubset.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace turan;

TEST(Binomial, SmallValues) {
    EXPECT_EQ(binom_exact(5, 2), 10);
    EXPECT_EQ(binom_exact(0, 0), 1);
    EXPECT_EQ(binom_exact(3, 5), 0);
    EXPECT_THROW(binom_exact(-1, 0), std::invalid_argument);
    EXPECT_THROW(binom_exact(4, -1), std::invalid_argument);
}

TEST(Binomial, MatchesPascalTriangle) {
    const auto rows = oracle::pascal(80);
    EXPECT_EQ(to_decimal(binom_exact(50, 25)), "126410606437752");
    EXPECT_EQ(binom_exact(50, 25), rows[50][25]);
    for (int n = 0; n <= 80; ++n) {
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(binom_exact(n, k), rows[n][k]) << n << ' ' << k;
            ASSERT_EQ(binom_exact(n, k), binom_exact(n, n - k));
            if (k >= 1) {
                ASSERT_EQ(binom_exact(n, k), binom_exact(n - 1, k - 1) + binom_exact(n - 1, k));
            }
        }
    }
}

TEST(Binomial, SignedUpperArgument) {
    // C(-1, k) = (-1)^k and C(-2, 3) = -4.
    for (int k = 0; k < 6; ++k) {
        EXPECT_EQ(binom_signed(-1, k), (k % 2 == 0) ? 1 : -1);
    }
    EXPECT_EQ(binom_signed(-2, 3), -4);
    EXPECT_EQ(binom_signed(7, 3), 35);
    EXPECT_EQ(binom_signed(3, -1), 0);
}

TEST(BinomialReal, Examples) {
    EXPECT_EQ(binom_real(5.0, 2), 10.0);
    EXPECT_DOUBLE_EQ(binom_real(4.5, 2), 7.875);
    EXPECT_EQ(binom_real(1.0, 2), 0.0);
    EXPECT_THROW(binom_real(3.0, -1), std::invalid_argument);
}

TEST(BinomialReal, ExactAtIntegers) {
    for (int x = 0; x <= 30; ++x) {
        for (int k = 0; k <= 10; ++k) {
            ASSERT_EQ(binom_real(static_cast<double>(x), k), binom_exact(x, k).convert_to<double>())
                << x << ' ' << k;
        }
    }
}

TEST(KSubsets, Examples) {
    const auto four_two = enumerate_ksubsets(4, 2);
    ASSERT_EQ(four_two.size(), 6U);
    EXPECT_EQ(four_two.front().indices(), (std::vector<int>{0, 1}));
    EXPECT_EQ(four_two.back().indices(), (std::vector<int>{2, 3}));

    const auto whole = enumerate_ksubsets(3, 3);
    ASSERT_EQ(whole.size(), 1U);
    EXPECT_EQ(whole[0].indices(), (std::vector<int>{0, 1, 2}));

    const auto empty = enumerate_ksubsets(5, 0);
    ASSERT_EQ(empty.size(), 1U);
    EXPECT_EQ(empty[0].bits, 0U);

    EXPECT_THROW(enumerate_ksubsets(2, 3), std::invalid_argument);
}

TEST(KSubsets, CountAndOrderMatchRecursion) {
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto fast = enumerate_ksubsets(n, k);
            ASSERT_EQ(ExactInteger(fast.size()), binom_exact(n, k));
            if (n <= 12) {
                const auto slow = oracle::subsets(n, k);
                ASSERT_EQ(fast.size(), slow.size());
                for (std::size_t i = 0; i < slow.size(); ++i) {
                    ASSERT_EQ(fast[i].indices(), slow[i]);
                }
            }
        }
    }
}

TEST(KSubsets, SubmasksOfGivenSize) {
    std::vector<Mask> seen;
    for_each_submask_of_size(0b101101, 2, [&](Mask m) { seen.push_back(m); });
    EXPECT_EQ(seen, (std::vector<Mask>{0b101, 0b1001, 0b100001, 0b1100, 0b100100, 0b101000}));
}

TEST(Hypergraph, Canonicalizes) {
    const Hypergraph h(6, 2, {0b111100, 0b001111, 0b110011});
    EXPECT_EQ(h.edges(), (std::vector<Mask>{0b001111, 0b110011, 0b111100}));
    EXPECT_TRUE(h.contains(0b110011));
    EXPECT_FALSE(h.contains(0b010111));
    EXPECT_EQ(h.degree(0), 2U);
    EXPECT_THROW(Hypergraph(6, 2, {0b111, 0b1111}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(4, 2, {0b1111, 0b1111}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(4, 2, {0b110011}), std::invalid_argument);
}

TEST(HypergraphText, RoundTrip) {
    const Hypergraph h(4, 2, {0b1111});
    const std::string text = format_hypergraph(h);
    EXPECT_EQ(text, "turan-hg v1\nn=4 k=2\ne 0 1 2 3\n");
    EXPECT_EQ(format_hypergraph(parse_hypergraph(text)), text);
    EXPECT_EQ(parse_hypergraph(text), h);
}

TEST(HypergraphText, IgnoresCommentsAndBlankLines) {
    const Hypergraph h = parse_hypergraph("# made by hand\nturan-hg v1\n\nn=5 k=2\n# edges\ne 0 1 2 4\n");
    EXPECT_EQ(h.edges(), (std::vector<Mask>{0b10111}));
}

TEST(HypergraphText, CardinalityErrorNamesTheLine) {
    try {
        parse_hypergraph("turan-hg v1\nn=4 k=2\ne 0 1 2\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(HypergraphText, DuplicateEdgeRejected) {
    try {
        parse_hypergraph("turan-hg v1\nn=5 k=2\ne 0 1 2 3\ne 1 2 3 4\ne 0 1 2 3\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5);
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    }
}

TEST(HypergraphText, MalformedInputs) {
    EXPECT_THROW(parse_hypergraph(""), ParseError);
    EXPECT_THROW(parse_hypergraph("turan-hg v2\nn=4 k=2\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("turan-hg v1\nn=4\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("turan-hg v1\nn=4 k=2\ne 0 2 1 3\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("turan-hg v1\nn=4 k=2\ne 0 1 2 4\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("turan-hg v1\nn=4 k=2\ne 0 1 x 3\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("turan-hg v1\nn=4 k=2\nf 0 1 2 3\n"), ParseError);
}

TEST(Hypergraph, DegenerateSizeIsEmpty) {
    EXPECT_EQ(complete_hypergraph(3, 2).edge_count(), 0U);
    EXPECT_EQ(complete_hypergraph(6, 2).edge_count(), 15U);
}
