#pragma once

/// @file
/// The 2k-uniform hypergraph value type and the k-set family used by the
/// shadow module.

#include "turan/ksubset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// A 2k-uniform hypergraph on vertices 0..n-1. Edges are kept in
/// lexicographic order without duplicates; the value is immutable.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, int k, std::vector<Mask> edges = {})
        : n_(n), k_(k), edges_(std::move(edges)) {
        check_ground_set(n, k);
        if (k < 1) {
            throw std::invalid_argument("Hypergraph: half-uniformity k must be >= 1");
        }
        const Mask allowed = prefix_mask(n);
        for (Mask e : edges_) {
            if (popcount(e) != 2 * k) {
                throw std::invalid_argument("Hypergraph: edge of wrong cardinality");
            }
            if ((e & ~allowed) != 0) {
                throw std::invalid_argument("Hypergraph: edge vertex out of range");
            }
        }
        std::sort(edges_.begin(), edges_.end(), LexLess{});
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw std::invalid_argument("Hypergraph: duplicate edge");
        }
    }

    int vertex_count() const { return n_; }
    int half_uniformity() const { return k_; }
    int uniformity() const { return 2 * k_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Mask>& edges() const { return edges_; }

    bool contains(Mask e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e, LexLess{});
    }

    std::size_t degree(int v) const {
        const Mask bit = singleton(v);
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [bit](Mask e) { return (e & bit) != 0; }));
    }

    Hypergraph with_edge(Mask e) const {
        std::vector<Mask> next = edges_;
        next.push_back(e);
        return Hypergraph(n_, k_, std::move(next));
    }

    Hypergraph without_edge(Mask e) const {
        std::vector<Mask> next;
        next.reserve(edges_.size());
        for (Mask x : edges_) {
            if (x != e) {
                next.push_back(x);
            }
        }
        return Hypergraph(n_, k_, std::move(next));
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    int k_ = 1;
    std::vector<Mask> edges_;
};

/// The complete 2k-uniform hypergraph on n vertices.
inline Hypergraph complete_hypergraph(int n, int k) {
    std::vector<Mask> edges;
    for_each_ksubset(n, 2 * k, [&](Mask m) { edges.push_back(m); });
    return Hypergraph(n, k, std::move(edges));
}

/// A family of k-subsets of {0..m-1}, sorted and duplicate-free.
class SetFamily {
public:
    SetFamily() = default;

    SetFamily(int m, int k, std::vector<Mask> members = {})
        : m_(m), k_(k), members_(std::move(members)) {
        check_ground_set(m, k);
        const Mask allowed = prefix_mask(m);
        for (Mask s : members_) {
            if (popcount(s) != k) {
                throw std::invalid_argument("SetFamily: member of wrong cardinality");
            }
            if ((s & ~allowed) != 0) {
                throw std::invalid_argument("SetFamily: member outside the ground set");
            }
        }
        std::sort(members_.begin(), members_.end(), LexLess{});
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
            throw std::invalid_argument("SetFamily: duplicate member");
        }
    }

    int ground_size() const { return m_; }
    int member_size() const { return k_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Mask>& members() const { return members_; }

    bool contains(Mask s) const {
        return std::binary_search(members_.begin(), members_.end(), s, LexLess{});
    }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int m_ = 0;
    int k_ = 0;
    std::vector<Mask> members_;
};

}  // namespace turan
