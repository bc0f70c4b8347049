#pragma once

/// @file
/// Detection of the expanded clique: r pairwise disjoint k-sets whose
/// pairwise unions are all edges. Copies correspond exactly to r-cliques
/// of the auxiliary graph on k-subsets, where P ~ Q iff P u Q is an edge
/// (which forces P and Q to be disjoint).

#include "turan/clique.hpp"
#include "turan/exact.hpp"
#include "turan/hypergraph.hpp"
#include "turan/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace turan {

/// r pairwise-disjoint k-sets.
struct ExpansionCopy {
    std::vector<KSubset> parts;
};

inline bool is_expansion_copy(const Hypergraph& h, const ExpansionCopy& copy) {
    const int k = h.half_uniformity();
    for (std::size_t i = 0; i < copy.parts.size(); ++i) {
        if (copy.parts[i].size() != k) {
            return false;
        }
        for (std::size_t j = i + 1; j < copy.parts.size(); ++j) {
            if (!copy.parts[i].disjoint(copy.parts[j]) ||
                !h.contains(copy.parts[i].bits | copy.parts[j].bits)) {
                return false;
            }
        }
    }
    return true;
}

/// The graph on all C(n,k) k-subsets with P ~ Q iff P u Q is an edge.
struct AuxGraph {
    int n = 0;
    int k = 0;
    std::vector<Mask> vertices;  // lexicographic order
    std::vector<std::vector<int>> neighbours;
    std::size_t edge_count = 0;

    int index_of(Mask subset) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), subset, LexLess{});
        if (it == vertices.end() || *it != subset) {
            throw std::out_of_range("AuxGraph: not a k-subset of the vertex set");
        }
        return static_cast<int>(it - vertices.begin());
    }

    bool adjacent(int a, int b) const {
        const auto& row = neighbours[static_cast<std::size_t>(a)];
        return std::binary_search(row.begin(), row.end(), b);
    }
};

namespace detail {

/// Calls visit(P, Q) once per unordered split of `edge` into two k-sets.
template <typename F>
void for_each_split(Mask edge, int k, F&& visit) {
    const Mask low = edge & -edge;
    for_each_submask_of_size(edge & ~low, k - 1, [&](Mask rest) {
        const Mask p = rest | low;
        visit(p, edge ^ p);
    });
}

}  // namespace detail

inline AuxGraph auxiliary_graph(const Hypergraph& h) {
    AuxGraph g;
    g.n = h.vertex_count();
    g.k = h.half_uniformity();
    if (g.k <= g.n) {
        for (const KSubset& s : enumerate_ksubsets(g.n, g.k)) {
            g.vertices.push_back(s.bits);
        }
    }
    g.neighbours.assign(g.vertices.size(), {});
    for (Mask e : h.edges()) {
        detail::for_each_split(e, g.k, [&](Mask p, Mask q) {
            const int a = g.index_of(p);
            const int b = g.index_of(q);
            g.neighbours[static_cast<std::size_t>(a)].push_back(b);
            g.neighbours[static_cast<std::size_t>(b)].push_back(a);
        });
    }
    std::size_t degree_sum = 0;
    for (auto& row : g.neighbours) {
        std::sort(row.begin(), row.end());
        degree_sum += row.size();
    }
    g.edge_count = degree_sum / 2;
    const ExactInteger expected = binom_exact(2 * g.k, g.k) * h.edge_count() / 2;
    if (ExactInteger(g.edge_count) != expected) {
        throw std::logic_error("auxiliary_graph: edge count differs from C(2k,k) e(H) / 2");
    }
    return g;
}

struct FreenessOptions {
    /// Largest n for which the auxiliary graph is materialized; above it the
    /// search tests adjacency directly against the edge set.
    int materialize_cap = 14;
    unsigned threads = 1;
};

namespace detail {

struct ActiveTuples {
    std::vector<Mask> subsets;  // k-sets lying in at least one edge, lex order
};

inline ActiveTuples active_tuples(const Hypergraph& h) {
    ActiveTuples out;
    for (Mask e : h.edges()) {
        for_each_split(e, h.half_uniformity(), [&](Mask p, Mask q) {
            out.subsets.push_back(p);
            out.subsets.push_back(q);
        });
    }
    std::sort(out.subsets.begin(), out.subsets.end(), LexLess{});
    out.subsets.erase(std::unique(out.subsets.begin(), out.subsets.end()), out.subsets.end());
    return out;
}

/// Searches for an r-clique among `subsets` whose adjacency is given by
/// `adjacent(i, j)`, branching on each start vertex in parallel.
template <typename Adjacent>
std::optional<std::vector<int>> parallel_clique(int count, int r, const Adjacent& adjacent,
                                                unsigned threads) {
    std::atomic<bool> found{false};
    std::mutex witness_mutex;
    std::optional<std::vector<int>> witness;
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t start) {
        if (found.load(std::memory_order_relaxed)) {
            return;
        }
        const int v = static_cast<int>(start);
        std::vector<int> candidates;
        for (int u = v + 1; u < count; ++u) {
            if (adjacent(v, u)) {
                candidates.push_back(u);
            }
        }
        CliqueFinder<const Adjacent&> finder(adjacent, r, &found);
        std::vector<int> clique{v};
        if (finder.extend(clique, candidates)) {
            std::lock_guard<std::mutex> lock(witness_mutex);
            if (!witness) {
                witness = clique;
            }
            found.store(true);
        }
    });
    return witness;
}

}  // namespace detail

/// An expansion copy with r parts if one exists. The search is exhaustive.
inline std::optional<ExpansionCopy> find_expansion(const Hypergraph& h, int r,
                                                   const FreenessOptions& options = {}) {
    if (r < 2) {
        throw std::invalid_argument("find_expansion: r must be >= 2");
    }
    std::optional<std::vector<int>> clique;
    std::vector<Mask> labels;
    if (h.vertex_count() <= options.materialize_cap) {
        const AuxGraph g = auxiliary_graph(h);
        // Restrict to non-isolated k-sets; they are the only possible parts.
        std::vector<int> active;
        for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
            if (!g.neighbours[static_cast<std::size_t>(i)].empty()) {
                active.push_back(i);
            }
        }
        std::vector<std::uint8_t> matrix(active.size() * active.size(), 0);
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = 0; b < active.size(); ++b) {
                matrix[a * active.size() + b] = g.adjacent(active[a], active[b]) ? 1 : 0;
            }
        }
        const std::size_t width = active.size();
        auto adjacent = [&matrix, width](int a, int b) {
            return matrix[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)] != 0;
        };
        clique = detail::parallel_clique(static_cast<int>(width), r, adjacent, options.threads);
        for (int i : active) {
            labels.push_back(g.vertices[static_cast<std::size_t>(i)]);
        }
    } else {
        labels = detail::active_tuples(h).subsets;
        const std::unordered_set<Mask> edges(h.edges().begin(), h.edges().end());
        auto adjacent = [&labels, &edges](int a, int b) {
            const Mask p = labels[static_cast<std::size_t>(a)];
            const Mask q = labels[static_cast<std::size_t>(b)];
            return (p & q) == 0 && edges.count(p | q) != 0;
        };
        clique = detail::parallel_clique(static_cast<int>(labels.size()), r, adjacent,
                                         options.threads);
    }
    if (!clique) {
        return std::nullopt;
    }
    ExpansionCopy copy;
    for (int i : *clique) {
        copy.parts.push_back(KSubset{labels[static_cast<std::size_t>(i)]});
    }
    std::sort(copy.parts.begin(), copy.parts.end());
    if (!is_expansion_copy(h, copy)) {
        throw std::logic_error("find_expansion: produced an invalid witness");
    }
    return copy;
}

/// A non-edge whose addition keeps H free of the r-part expansion, if any.
/// Requires H itself to be free.
inline std::optional<Mask> find_free_extension(const Hypergraph& h, int r,
                                               const FreenessOptions& options = {}) {
    if (find_expansion(h, r, options)) {
        throw std::invalid_argument("hypergraph already contains the expansion");
    }
    const int k = h.half_uniformity();
    const std::vector<Mask> active = detail::active_tuples(h).subsets;
    const std::unordered_set<Mask> edges(h.edges().begin(), h.edges().end());
    std::optional<Mask> extension;
    // Any new copy must use the added set X = P u Q as one of its edges, so
    // it exists iff some split P|Q of X has r-2 further parts adjacent to
    // both P and Q and to each other.
    for_each_ksubset(h.vertex_count(), 2 * k, [&](Mask x) {
        if (extension || edges.count(x) != 0) {
            return;
        }
        bool creates_copy = false;
        detail::for_each_split(x, k, [&](Mask p, Mask q) {
            if (creates_copy) {
                return;
            }
            if (r == 2) {
                creates_copy = true;
                return;
            }
            std::vector<Mask> common;
            for (Mask s : active) {
                if ((s & x) == 0 && edges.count(s | p) != 0 && edges.count(s | q) != 0) {
                    common.push_back(s);
                }
            }
            auto adjacent = [&common, &edges](int a, int b) {
                const Mask u = common[static_cast<std::size_t>(a)];
                const Mask w = common[static_cast<std::size_t>(b)];
                return (u & w) == 0 && edges.count(u | w) != 0;
            };
            creates_copy = find_clique(static_cast<int>(common.size()), r - 2, adjacent).has_value();
        });
        if (!creates_copy) {
            extension = x;
        }
    });
    return extension;
}

/// True iff H is free and adding any non-edge creates a copy.
inline bool is_maximal_free(const Hypergraph& h, int r, const FreenessOptions& options = {}) {
    return !find_free_extension(h, r, options).has_value();
}

}  // namespace turan
