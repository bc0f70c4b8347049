#include "oracles.hpp"

#include "turan/construct.hpp"
#include "turan/stability.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace turan;

namespace {

Bipartition random_partition(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution side(0.5);
    std::vector<int> part(static_cast<std::size_t>(n));
    for (int& p : part) {
        p = side(rng) ? 1 : 2;
    }
    return Bipartition(part);
}

// Direct recount with vectors.
TupleCensus census_oracle(const Hypergraph& h, const Bipartition& part) {
    const auto edges = oracle::edge_set(h);
    TupleCensus c;
    for (const auto& s : oracle::subsets(h.vertex_count(), h.uniformity())) {
        const bool good = oracle::count_in(s, part.parts(), 1) % 2 == 1 &&
                          oracle::count_in(s, part.parts(), 2) % 2 == 1;
        const bool edge = edges.count(s) != 0;
        (good ? (edge ? c.good_edges : c.good_non_edges) : (edge ? c.bad_edges : c.bad_non_edges)) += 1;
    }
    return c;
}

void expect_same(const TupleCensus& a, const TupleCensus& b) {
    EXPECT_EQ(a.good_edges, b.good_edges);
    EXPECT_EQ(a.bad_edges, b.bad_edges);
    EXPECT_EQ(a.good_non_edges, b.good_non_edges);
    EXPECT_EQ(a.bad_non_edges, b.bad_non_edges);
}

void expect_vertex_stable(const Hypergraph& h, const Bipartition& part) {
    for (const Incidence& cell : vertex_incidence(h, part)) {
        EXPECT_LE(cell.bad, cell.good);
    }
}

void expect_strict_descent(const ImprovementRun& run) {
    ASSERT_EQ(run.bad_edge_trace.size(), run.moves.size() + 1);
    for (std::size_t i = 1; i < run.bad_edge_trace.size(); ++i) {
        EXPECT_LT(run.bad_edge_trace[i], run.bad_edge_trace[i - 1]);
    }
}

}  // namespace

TEST(Census, DefiningPartitionIsAllCorrect) {
    const auto c = build_parity(8, 2, ShiftValue{4});
    const TupleCensus census = classify_tuples(c.hypergraph, c.partition);
    EXPECT_EQ(census.incorrect(), 0);
    EXPECT_EQ(census.correct(), 70);
    EXPECT_EQ(census.good_edges, 40);

    const Bipartition moved = c.partition.moved(0);
    const TupleCensus off = classify_tuples(c.hypergraph, moved);
    EXPECT_GT(off.incorrect(), 0);
    expect_same(off, census_oracle(c.hypergraph, moved));
}

TEST(Census, EmptyHypergraph) {
    const Hypergraph h(8, 2);
    const Bipartition part = Bipartition::contiguous(8, 3);
    const TupleCensus census = classify_tuples(h, part);
    EXPECT_EQ(census.good_edges, 0);
    EXPECT_EQ(census.bad_edges, 0);
    std::size_t bad = 0;
    for (const auto& s : oracle::subsets(8, 4)) {
        bad += oracle::count_in(s, part.parts(), 1) % 2 == 0 ? 1 : 0;
    }
    EXPECT_EQ(census.bad_non_edges, bad);
}

TEST(Census, CellsSumToAllTuples) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 6 + trial % 5;
        std::bernoulli_distribution keep(0.4);
        std::vector<Mask> edges;
        for_each_ksubset(n, 4, [&](Mask e) {
            if (keep(rng)) {
                edges.push_back(e);
            }
        });
        const Hypergraph h(n, 2, edges);
        const Bipartition part = random_partition(rng, n);
        const TupleCensus census = classify_tuples(h, part);
        EXPECT_EQ(census.total(), binom_exact(n, 4));
        expect_same(census, census_oracle(h, part));
    }
}

TEST(Census, CapAndCover) {
    const Hypergraph h(25, 1);
    const Bipartition part = Bipartition::contiguous(25, 12);
    EXPECT_THROW(classify_tuples(h, part), std::invalid_argument);
    CensusOptions force;
    force.force = true;
    EXPECT_EQ(classify_tuples(h, part, force).total(), 300);
    EXPECT_THROW(classify_tuples(Hypergraph(8, 2), Bipartition::contiguous(7, 3)), std::invalid_argument);
}

TEST(Improve, FixedPoints) {
    const auto c = build_parity(8, 2, ShiftValue{4});
    const ImprovementRun run = improve_partition(c.hypergraph, c.partition);
    EXPECT_EQ(run.partition, c.partition);
    EXPECT_TRUE(run.moves.empty());
    EXPECT_EQ(run.bad_edge_trace, (std::vector<std::size_t>{0}));

    std::mt19937_64 rng(1);
    const Bipartition any = random_partition(rng, 8);
    EXPECT_EQ(improve_partition(Hypergraph(8, 2), any).partition, any);
}

TEST(Improve, RecoversFromOneMovedVertex) {
    const auto c = build_parity(8, 2, ShiftValue{4});
    for (int v = 0; v < 8; ++v) {
        const Bipartition start = c.partition.moved(v);
        const ImprovementRun run = improve_partition(c.hypergraph, start);
        EXPECT_LE(run.bad_edge_trace.back(), bad_edge_count(c.hypergraph, start));
        EXPECT_EQ(run.bad_edge_trace.back(), bad_edge_count(c.hypergraph, run.partition));
        expect_vertex_stable(c.hypergraph, run.partition);
        expect_strict_descent(run);
    }
}

TEST(Improve, RandomStartsOnNoisyHypergraphs) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph h = build_parity(10, 2, ShiftValue{4}).hypergraph;
        std::bernoulli_distribution flip(0.1);
        for_each_ksubset(10, 4, [&](Mask e) {
            if (flip(rng)) {
                h = h.contains(e) ? h.without_edge(e) : h.with_edge(e);
            }
        });
        const ImprovementRun run = improve_partition(h, random_partition(rng, 10));
        expect_vertex_stable(h, run.partition);
        expect_strict_descent(run);
    }
}

TEST(TuranGraph, Counts) {
    EXPECT_EQ(turan_graph_count(3, 7), 16);
    EXPECT_EQ(turan_graph(3, 7).edge_count(), 16U);
    for (int s = 1; s <= 5; ++s) {
        for (int n = 0; n <= 20; ++n) {
            EXPECT_EQ(turan_graph_count(s, n), turan_graph(s, n).edge_count());
        }
    }
}

TEST(Simonovits, CompleteBipartite) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 3; ++a) {
        for (int b = 3; b < 6; ++b) {
            edges.emplace_back(a, b);
        }
    }
    const SimonovitsResult r = simonovits_partition(SimpleGraph(6, edges), 2);
    EXPECT_EQ(r.internal_edges, 0U);
    EXPECT_EQ(r.part_of[0], r.part_of[1]);
    EXPECT_EQ(r.part_of[0], r.part_of[2]);
    EXPECT_EQ(r.part_of[3], r.part_of[4]);
    EXPECT_NE(r.part_of[0], r.part_of[3]);
}

TEST(Simonovits, FiveCycle) {
    const SimpleGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const SimonovitsResult r = simonovits_partition(c5, 2);
    std::uint64_t best = 5;
    for (int mask = 0; mask < 32; ++mask) {
        std::uint64_t internal = 0;
        for (auto [a, b] : c5.edges()) {
            internal += ((mask >> a) & 1) == ((mask >> b) & 1) ? 1 : 0;
        }
        best = std::min(best, internal);
    }
    EXPECT_EQ(best, 1U);
    EXPECT_LE(r.internal_edges, 1U);
}

TEST(Simonovits, TuranGraphsSplitExactly) {
    EXPECT_EQ(simonovits_partition(turan_graph(3, 9), 3).internal_edges, 0U);
    for (int s = 1; s <= 5; ++s) {
        for (int n = 1; n <= 30; ++n) {
            const SimonovitsResult r = simonovits_partition(turan_graph(s, n), s);
            ASSERT_EQ(r.internal_edges, 0U) << s << ' ' << n;
            EXPECT_TRUE(r.deleted.empty());
            // With fewer than s vertices there is no K_s to seed the parts.
            EXPECT_EQ(r.hypothesis_failure, n < s) << s << ' ' << n;
        }
    }
}

TEST(Simonovits, RejectsLargerCliques) {
    EXPECT_THROW(simonovits_partition(turan_graph(3, 6), 2), std::invalid_argument);
}

TEST(Simonovits, DenseBipartiteGraphsMeetTheBound) {
    std::mt19937_64 rng(40);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 10 + trial % 31;
        std::bernoulli_distribution side(0.5);
        std::bernoulli_distribution keep(0.97);
        std::vector<int> part(static_cast<std::size_t>(n));
        for (int& p : part) {
            p = side(rng) ? 1 : 0;
        }
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (part[a] != part[b] && keep(rng)) {
                    edges.emplace_back(a, b);
                }
            }
        }
        const SimonovitsResult r = simonovits_partition(SimpleGraph(n, edges), 2);
        if (r.density_hypothesis) {
            ++checked;
            EXPECT_TRUE(r.within_theorem_bound) << "n " << n;
            EXPECT_FALSE(r.hypothesis_failure);
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(PartitionText, RoundTrip) {
    const Bipartition part({1, 2, 2, 1});
    std::ostringstream out;
    write_partition(out, part);
    EXPECT_EQ(out.str(), "p 0 1\np 1 2\np 2 2\np 3 1\n");
    std::istringstream in(out.str());
    EXPECT_EQ(read_partition(in), part);
    std::istringstream gap("p 0 1\np 2 2\n");
    EXPECT_THROW(read_partition(gap), ParseError);
    std::istringstream bad("p 0 3\n");
    EXPECT_THROW(read_partition(bad), ParseError);
}

TEST(GraphText, RoundTrip) {
    const SimpleGraph g(4, {{0, 1}, {2, 3}, {1, 3}});
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(out.str(), "turan-g v1\nn=4\ng 0 1\ng 1 3\ng 2 3\n");
    std::istringstream in(out.str());
    EXPECT_EQ(read_graph(in).edges(), g.edges());
    std::istringstream loop("turan-g v1\nn=3\ng 1 1\n");
    EXPECT_THROW(read_graph(loop), ParseError);
}
