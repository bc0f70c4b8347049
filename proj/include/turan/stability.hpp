#pragma once

/// @file
/// Structure of near-extremal hypergraphs relative to a bipartition: the
/// good/bad tuple census, the vertex-move local search, and a constructive
/// version of the Simonovits stability partition for K_{s+1}-free graphs.

#include "turan/clique.hpp"
#include "turan/construct.hpp"
#include "turan/exact.hpp"
#include "turan/hypergraph.hpp"
#include "turan/io.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace turan {

/// Counts of the four kinds of 2k-tuples. A tuple is good when it meets
/// both parts in an odd number of vertices; it is correct when it is a good
/// edge or a bad non-edge.
struct TupleCensus {
    ExactInteger good_edges = 0;
    ExactInteger bad_edges = 0;
    ExactInteger good_non_edges = 0;
    ExactInteger bad_non_edges = 0;

    ExactInteger correct() const { return good_edges + bad_non_edges; }
    ExactInteger incorrect() const { return bad_edges + good_non_edges; }
    ExactInteger total() const { return good_edges + bad_edges + good_non_edges + bad_non_edges; }
};

struct CensusOptions {
    int max_vertices = 24;
    bool force = false;
};

inline void require_cover(const Hypergraph& h, const Bipartition& part) {
    if (part.vertex_count() != h.vertex_count()) {
        throw std::invalid_argument("partition covers " + std::to_string(part.vertex_count()) +
                                    " vertices, hypergraph has " + std::to_string(h.vertex_count()));
    }
}

/// Classifies every 2k-subset of the vertex set.
inline TupleCensus classify_tuples(const Hypergraph& h, const Bipartition& part,
                                   const CensusOptions& options = {}) {
    require_cover(h, part);
    if (h.vertex_count() > options.max_vertices && !options.force) {
        throw std::invalid_argument("classify_tuples: n=" + std::to_string(h.vertex_count()) +
                                    " exceeds the enumeration cap " +
                                    std::to_string(options.max_vertices) + " (use force)");
    }
    const Mask first = part.first_part_mask();
    const std::unordered_set<Mask> edges(h.edges().begin(), h.edges().end());
    std::uint64_t counts[2][2] = {{0, 0}, {0, 0}};  // [good][edge]
    for_each_ksubset(h.vertex_count(), h.uniformity(), [&](Mask tuple) {
        const int good = is_good_tuple(tuple, first) ? 1 : 0;
        const int edge = edges.count(tuple) != 0 ? 1 : 0;
        ++counts[good][edge];
    });
    TupleCensus census;
    census.good_edges = counts[1][1];
    census.bad_edges = counts[0][1];
    census.good_non_edges = counts[1][0];
    census.bad_non_edges = counts[0][0];
    return census;
}

/// Good and bad edges at one vertex.
struct Incidence {
    std::size_t good = 0;
    std::size_t bad = 0;
};

inline std::vector<Incidence> vertex_incidence(const Hypergraph& h, const Bipartition& part) {
    require_cover(h, part);
    const Mask first = part.first_part_mask();
    std::vector<Incidence> out(static_cast<std::size_t>(h.vertex_count()));
    for (Mask e : h.edges()) {
        const bool good = is_good_tuple(e, first);
        for (Mask m = e; m != 0; m &= m - 1) {
            auto& cell = out[static_cast<std::size_t>(std::countr_zero(m))];
            (good ? cell.good : cell.bad) += 1;
        }
    }
    return out;
}

inline std::size_t bad_edge_count(const Hypergraph& h, const Bipartition& part) {
    const Mask first = part.first_part_mask();
    return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(),
                                                  [first](Mask e) { return !is_good_tuple(e, first); }));
}

struct ImprovementRun {
    Bipartition partition;
    std::vector<int> moves;                   // vertices moved, in order
    std::vector<std::size_t> bad_edge_trace;  // before the first move, then after each
};

/// Moves any vertex lying in strictly more bad edges than good edges to the
/// other part, scanning vertices in ascending order and restarting after
/// each move. Moving v swaps good and bad among the edges at v, so every
/// move lowers the bad-edge count and the loop terminates.
inline ImprovementRun improve_partition(const Hypergraph& h, const Bipartition& start) {
    require_cover(h, start);
    ImprovementRun run{start, {}, {}};
    std::vector<Incidence> incidence = vertex_incidence(h, start);
    std::size_t bad = bad_edge_count(h, start);
    run.bad_edge_trace.push_back(bad);
    Mask first = start.first_part_mask();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < h.vertex_count(); ++v) {
            const auto& cell = incidence[static_cast<std::size_t>(v)];
            if (cell.bad <= cell.good) {
                continue;
            }
            const Mask bit = singleton(v);
            for (Mask e : h.edges()) {
                if ((e & bit) == 0) {
                    continue;
                }
                const bool was_good = is_good_tuple(e, first);
                for (Mask m = e; m != 0; m &= m - 1) {
                    auto& other = incidence[static_cast<std::size_t>(std::countr_zero(m))];
                    if (was_good) {
                        --other.good;
                        ++other.bad;
                    } else {
                        --other.bad;
                        ++other.good;
                    }
                }
                if (was_good) {
                    ++bad;
                } else {
                    --bad;
                }
            }
            first ^= bit;
            run.partition = run.partition.moved(v);
            run.moves.push_back(v);
            run.bad_edge_trace.push_back(bad);
            moved = true;
            break;
        }
    }
    return run;
}

/// Simple undirected graph on vertices 0..N-1.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges = {})
        : n_(n), adjacency_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        if (n < 0) {
            throw std::invalid_argument("SimpleGraph: negative vertex count");
        }
        for (auto [a, b] : edges) {
            add_edge(a, b);
        }
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int a, int b) const {
        return adjacency_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                          static_cast<std::size_t>(b)] != 0;
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u) {
            d += adjacent(v, u) ? 1 : 0;
        }
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_; ++a) {
            for (int b = a + 1; b < n_; ++b) {
                if (adjacent(a, b)) {
                    out.emplace_back(a, b);
                }
            }
        }
        return out;
    }

private:
    void add_edge(int a, int b) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) {
            throw std::invalid_argument("SimpleGraph: bad edge (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        }
        auto& cell = adjacency_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                                static_cast<std::size_t>(b)];
        if (cell != 0) {
            throw std::invalid_argument("SimpleGraph: duplicate edge");
        }
        cell = 1;
        adjacency_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(a)] = 1;
        ++edge_count_;
    }

    int n_ = 0;
    std::vector<std::uint8_t> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Balanced part sizes for s parts of N vertices, larger parts first.
inline std::vector<std::int64_t> balanced_parts(std::int64_t s, std::int64_t n) {
    if (s < 1 || n < 0) {
        throw std::invalid_argument("balanced_parts: requires s >= 1 and N >= 0");
    }
    std::vector<std::int64_t> parts(static_cast<std::size_t>(s), n / s);
    for (std::int64_t i = 0; i < n % s; ++i) {
        ++parts[static_cast<std::size_t>(i)];
    }
    return parts;
}

/// t_s(N), the edge count of the balanced complete s-partite graph.
inline ExactInteger turan_graph_count(std::int64_t s, std::int64_t n) {
    ExactInteger count = binom_exact(n, 2);
    for (std::int64_t size : balanced_parts(s, n)) {
        count -= binom_exact(size, 2);
    }
    return count;
}

/// T_s(N) with vertex v in part v mod s.
inline SimpleGraph turan_graph(int s, int n) {
    (void)balanced_parts(s, n);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (a % s != b % s) {
                edges.emplace_back(a, b);
            }
        }
    }
    return SimpleGraph(n, edges);
}

struct SimonovitsResult {
    std::vector<int> part_of;        // 0..s-1 per vertex
    std::uint64_t internal_edges = 0;
    ExactRational c = 0;             // e(G) = ((s-1)/(2s) - c) N^2
    std::vector<int> deleted;        // in deletion order
    std::vector<int> clique;         // the K_s used to seed the parts
    std::vector<int> leftovers;      // vertices with fewer than s-1 clique neighbours
    bool hypothesis_failure = false;
    std::string note;

    bool density_hypothesis = false;  // c < 1/(4 s^4)
    double theorem_bound = 0.0;       // (2s+1) sqrt(c) N^2
    bool within_theorem_bound = false;
    std::optional<double> min_degree_alpha;  // alpha with delta(G) = (1 - 1/s - alpha) N
    std::optional<double> proposition_bound; // s alpha N^2 when alpha < 1/s^2
};

namespace detail {

/// a < sqrt(q) for integer a and nonnegative rational q.
inline bool below_sqrt(const ExactRational& a, const ExactRational& q) {
    return a < 0 || a * a < q;
}

}  // namespace detail

/// Splits a K_{s+1}-free graph into s parts with few internal edges.
///
/// Vertices of degree strictly below (1 - 1/s - 2 sqrt(c)) m are deleted one
/// at a time (lowest index first, m the current order). If more than
/// sqrt(c) N deletions would be needed the input contradicts the density
/// hypothesis and the run stops with `hypothesis_failure`. A K_s found by
/// exact search in the residual graph seeds the parts: a vertex adjacent to
/// every clique vertex except a_i joins part i. Leftover and deleted
/// vertices go to the currently smallest part, ties to the lowest index.
inline SimonovitsResult simonovits_partition(const SimpleGraph& g, int s) {
    if (s < 1) {
        throw std::invalid_argument("simonovits_partition: s must be >= 1");
    }
    const int n = g.vertex_count();
    auto adjacent = [&g](int a, int b) { return g.adjacent(a, b); };
    if (find_clique(n, s + 1, adjacent)) {
        throw std::invalid_argument("simonovits_partition: graph contains K_" + std::to_string(s + 1));
    }
    SimonovitsResult result;
    result.part_of.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) {
        result.density_hypothesis = true;
        result.within_theorem_bound = true;
        return result;
    }

    const ExactRational big_n = n;
    result.c = ExactRational(s - 1, 2 * s) - ExactRational(ExactInteger(g.edge_count()), ExactInteger(n) * n);

    std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
    }
    int order = n;
    while (order > 0) {
        int victim = -1;
        for (int v = 0; v < n && victim < 0; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) {
                continue;
            }
            // deg < (1 - 1/s - 2 sqrt c) m  <=>  ((s-1)m - s deg)/s > 2 sqrt(c) m
            const ExactRational slack =
                ExactRational((s - 1) * order - s * degree[static_cast<std::size_t>(v)], s);
            if (slack > 0 && slack * slack > 4 * result.c * order * order) {
                victim = v;
            }
        }
        if (victim < 0) {
            break;
        }
        const ExactRational next_count = static_cast<int>(result.deleted.size()) + 1;
        if (next_count * next_count > result.c * big_n * big_n) {
            result.hypothesis_failure = true;
            result.note = "deletion loop needs more than sqrt(c) N deletions; the graph is too sparse";
            break;
        }
        alive[static_cast<std::size_t>(victim)] = 0;
        result.deleted.push_back(victim);
        --order;
        for (int u = 0; u < n; ++u) {
            if (alive[static_cast<std::size_t>(u)] && g.adjacent(u, victim)) {
                --degree[static_cast<std::size_t>(u)];
            }
        }
    }

    std::vector<int> residual;
    for (int v = 0; v < n; ++v) {
        if (alive[static_cast<std::size_t>(v)]) {
            residual.push_back(v);
        }
    }
    auto residual_adjacent = [&](int a, int b) {
        return g.adjacent(residual[static_cast<std::size_t>(a)], residual[static_cast<std::size_t>(b)]);
    };
    const auto seed = find_clique(static_cast<int>(residual.size()), s, residual_adjacent);
    std::vector<int> parts_size(static_cast<std::size_t>(s), 0);
    std::vector<int> pending;
    if (seed) {
        for (int i : *seed) {
            result.clique.push_back(residual[static_cast<std::size_t>(i)]);
        }
        for (int v : residual) {
            const auto self = std::find(result.clique.begin(), result.clique.end(), v);
            if (self != result.clique.end()) {
                const int i = static_cast<int>(self - result.clique.begin());
                result.part_of[static_cast<std::size_t>(v)] = i;
                ++parts_size[static_cast<std::size_t>(i)];
                continue;
            }
            std::vector<int> missed;
            for (int i = 0; i < s; ++i) {
                if (!g.adjacent(v, result.clique[static_cast<std::size_t>(i)])) {
                    missed.push_back(i);
                }
            }
            if (missed.size() == 1) {
                result.part_of[static_cast<std::size_t>(v)] = missed.front();
                ++parts_size[static_cast<std::size_t>(missed.front())];
            } else {
                result.leftovers.push_back(v);
                pending.push_back(v);
            }
        }
    } else {
        result.hypothesis_failure = true;
        if (!result.note.empty()) {
            result.note += "; ";
        }
        result.note += "residual graph contains no K_" + std::to_string(s) + "; partition is partial";
        pending = residual;
    }
    pending.insert(pending.end(), result.deleted.begin(), result.deleted.end());
    for (int v : pending) {
        const auto smallest = std::min_element(parts_size.begin(), parts_size.end());
        const int i = static_cast<int>(smallest - parts_size.begin());
        result.part_of[static_cast<std::size_t>(v)] = i;
        ++*smallest;
    }

    for (auto [a, b] : g.edges()) {
        if (result.part_of[static_cast<std::size_t>(a)] == result.part_of[static_cast<std::size_t>(b)]) {
            ++result.internal_edges;
        }
    }

    const ExactRational s4 = ExactRational(s) * s * s * s;
    result.density_hypothesis = result.c < ExactRational(1) / (4 * s4);
    const double c_real = std::max(0.0, result.c.convert_to<double>());
    const double n_real = static_cast<double>(n);
    result.theorem_bound = (2.0 * s + 1.0) * std::sqrt(c_real) * n_real * n_real;
    // internal < (2s+1) sqrt(c) N^2, compared exactly. At c = 0 the bound is
    // read as "no internal edges".
    const ExactRational internal = ExactRational(ExactInteger(result.internal_edges));
    const ExactRational scale = ExactRational(2 * s + 1) * big_n * big_n;
    result.within_theorem_bound =
        result.c == 0 ? result.internal_edges == 0
                      : detail::below_sqrt(internal / scale, result.c);

    int min_degree = n;
    for (int v = 0; v < n; ++v) {
        min_degree = std::min(min_degree, g.degree(v));
    }
    const double alpha = 1.0 - 1.0 / s - static_cast<double>(min_degree) / n_real;
    result.min_degree_alpha = alpha;
    if (alpha < 1.0 / (static_cast<double>(s) * s)) {
        result.proposition_bound = s * alpha * n_real * n_real;
    }
    return result;
}

// Partition file: one line `p <vertex> <1|2>` per vertex.

inline Bipartition read_partition(std::istream& in) {
    LineReader reader(in);
    std::vector<int> part;
    std::vector<std::uint8_t> seen;
    while (auto tokens = reader.next()) {
        if (tokens->size() != 3 || (*tokens)[0] != "p") {
            reader.fail("expected 'p <vertex> <1|2>'");
        }
        const long long v = reader.integer((*tokens)[1]);
        const long long side = reader.integer((*tokens)[2]);
        if (v < 0 || v >= kMaxVertices) {
            reader.fail("vertex index out of range");
        }
        if (side != 1 && side != 2) {
            reader.fail("part must be 1 or 2");
        }
        if (static_cast<std::size_t>(v) >= part.size()) {
            part.resize(static_cast<std::size_t>(v) + 1, 0);
            seen.resize(static_cast<std::size_t>(v) + 1, 0);
        }
        if (seen[static_cast<std::size_t>(v)]) {
            reader.fail("vertex listed twice");
        }
        seen[static_cast<std::size_t>(v)] = 1;
        part[static_cast<std::size_t>(v)] = static_cast<int>(side);
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v]) {
            throw ParseError(reader.line(), "vertex " + std::to_string(v) + " has no part");
        }
    }
    return Bipartition(std::move(part));
}

inline void write_partition(std::ostream& out, const Bipartition& part) {
    for (int v = 0; v < part.vertex_count(); ++v) {
        out << "p " << v << ' ' << part.part_of(v) << '\n';
    }
}

// turan-g v1
// n=<int>
// g <i> <j>

inline SimpleGraph read_graph(std::istream& in) {
    LineReader reader(in);
    reader.expect_header(reader.require("header"), "turan-g v1");
    const auto dims = reader.require("'n=<int>'");
    if (dims.size() != 1) {
        reader.fail("expected 'n=<int>'");
    }
    const long long n = reader.keyed(dims[0], "n");
    if (n < 0 || n > 100000) {
        reader.fail("n out of range");
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n * n), 0);
    while (auto tokens = reader.next()) {
        if (tokens->size() != 3 || (*tokens)[0] != "g") {
            reader.fail("expected 'g <i> <j>'");
        }
        long long a = reader.integer((*tokens)[1]);
        long long b = reader.integer((*tokens)[2]);
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
            reader.fail("edge endpoints must be distinct vertices below n");
        }
        if (a > b) {
            std::swap(a, b);
        }
        auto& cell = seen[static_cast<std::size_t>(a * n + b)];
        if (cell) {
            reader.fail("duplicate edge");
        }
        cell = 1;
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return SimpleGraph(static_cast<int>(n), edges);
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << "turan-g v1\n";
    out << "n=" << g.vertex_count() << '\n';
    for (auto [a, b] : g.edges()) {
        out << "g " << a << ' ' << b << '\n';
    }
}

}  // namespace turan
