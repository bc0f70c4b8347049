#include "oracles.hpp"

#include "turan/algebra.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace turan;

namespace {

std::vector<std::vector<int>> all_colorings(int pairs, int colors) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(pairs), 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < pairs && ++cur[i] == colors) {
            cur[i++] = 0;
        }
        if (i == pairs) {
            return out;
        }
    }
}

// wx and yz disjoint with one color force color(wy) = color(xz) and
// color(xy) = color(wz).
bool opposite_edges_agree(const EdgeColoring& c) {
    const int s = c.vertex_count();
    for (int w = 0; w < s; ++w) {
        for (int x = 0; x < s; ++x) {
            for (int y = 0; y < s; ++y) {
                for (int z = 0; z < s; ++z) {
                    const std::set<int> distinct{w, x, y, z};
                    if (distinct.size() != 4 || c.color(w, x) != c.color(y, z)) {
                        continue;
                    }
                    if (c.color(w, y) != c.color(x, z) || c.color(x, y) != c.color(w, z)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST(Gf2Coloring, Shapes) {
    const EdgeColoring one = generate_gf2_coloring(1);
    EXPECT_EQ(one.vertex_count(), 2);
    EXPECT_EQ(one.color_count(), 1);
    EXPECT_EQ(one.pair_colors().size(), 1U);
    for (int p = 2; p <= 3; ++p) {
        const EdgeColoring c = generate_gf2_coloring(p);
        const int s = 1 << p;
        EXPECT_EQ(c.color_count(), s - 1);
        std::vector<int> class_size(static_cast<std::size_t>(s - 1), 0);
        for (int color : c.pair_colors()) {
            ++class_size[color];
        }
        for (int size : class_size) {
            EXPECT_EQ(size, s / 2);
        }
    }
    EXPECT_THROW(generate_gf2_coloring(0), std::invalid_argument);
}

TEST(Gf2Coloring, PassesVerification) {
    for (int p = 1; p <= 5; ++p) {
        const ColoringReport r = verify_coloring(generate_gf2_coloring(p));
        EXPECT_TRUE(r.passes()) << p;
        EXPECT_FALSE(r.first_violation.has_value());
    }
    const EdgeColoring k4 = generate_gf2_coloring(2);
    std::set<int> spanned(k4.pair_colors().begin(), k4.pair_colors().end());
    EXPECT_EQ(spanned.size(), 3U);
}

TEST(Verify, IncidentEdgesInOneClassFail) {
    // Pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3): color 0 on 01 and 02.
    const EdgeColoring c(4, 3, {0, 0, 1, 2, 1, 2});
    const ColoringReport r = verify_coloring(c);
    EXPECT_FALSE(r.every_color_perfect_matching);
    EXPECT_FALSE(r.matching_violation.empty());
    EXPECT_FALSE(r.passes());
}

TEST(Verify, EveryOneFactorizationOfK6FailsFourSetCondition) {
    const auto factorizations = oracle::one_factorizations(6);
    ASSERT_EQ(factorizations.size(), 6U);
    for (const auto& colors : factorizations) {
        const ColoringReport r = verify_coloring(EdgeColoring(6, 5, colors));
        EXPECT_TRUE(r.is_full_coloring);
        EXPECT_TRUE(r.every_color_perfect_matching);
        EXPECT_FALSE(r.four_set_condition);
        ASSERT_TRUE(r.first_violation.has_value());
    }
}

TEST(Verify, OddOrderNeverPasses) {
    for (const auto& colors : all_colorings(3, 2)) {
        EXPECT_FALSE(verify_coloring(EdgeColoring(3, 2, colors)).passes());
    }
}

TEST(Group, KleinFourGroup) {
    const ColorGroup g = build_group(generate_gf2_coloring(2));
    EXPECT_EQ(g.order, 4);
    EXPECT_EQ(g.dimension, 2);
    for (int a = 0; a < 4; ++a) {
        EXPECT_EQ(g.add(a, a), 0);
        EXPECT_EQ(g.add(0, a), a);
    }
}

TEST(Group, XorTableUpToDimensionFour) {
    for (int p = 1; p <= 4; ++p) {
        const ColorGroup g = build_group(generate_gf2_coloring(p));
        EXPECT_EQ(g.dimension, p);
        // Color of {0,w} is w-1, which is group element w.
        for (int a = 0; a < g.order; ++a) {
            for (int b = 0; b < g.order; ++b) {
                ASSERT_EQ(g.add(a, b), a ^ b);
            }
        }
    }
}

TEST(Group, FailingColoringIsRejected) {
    const EdgeColoring c(4, 3, {0, 0, 1, 2, 1, 2});
    EXPECT_THROW(build_group(c), std::invalid_argument);
}

TEST(Group, ExhaustiveOnFourVertices) {
    int passing = 0;
    for (const auto& colors : all_colorings(6, 3)) {
        const EdgeColoring c(4, 3, colors);
        if (!verify_coloring(c).passes()) {
            continue;
        }
        ++passing;
        const ColorGroup g = build_group(c);
        EXPECT_EQ(g.order, 4);
        EXPECT_TRUE(opposite_edges_agree(c));
    }
    // Three perfect matchings of K_4, colored in 3! ways.
    EXPECT_EQ(passing, 6);
}

TEST(ColoringText, RoundTripAndErrors) {
    std::ostringstream out;
    write_coloring(out, generate_gf2_coloring(2));
    EXPECT_EQ(out.str(),
              "turan-col v1\ns=4 colors=3\nc 0 1 0\nc 0 2 1\nc 0 3 2\nc 1 2 2\nc 1 3 1\nc 2 3 0\n");
    std::istringstream in(out.str());
    EXPECT_EQ(read_coloring(in).pair_colors(), generate_gf2_coloring(2).pair_colors());

    std::istringstream missing("turan-col v1\ns=3 colors=2\nc 0 1 0\nc 0 2 1\n");
    EXPECT_THROW(read_coloring(missing), ParseError);
    std::istringstream twice("turan-col v1\ns=2 colors=1\nc 0 1 0\nc 0 1 0\n");
    EXPECT_THROW(read_coloring(twice), ParseError);
    std::istringstream range("turan-col v1\ns=2 colors=1\nc 0 1 1\n");
    EXPECT_THROW(read_coloring(range), ParseError);
}
