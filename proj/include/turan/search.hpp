#pragma once

/// @file
/// Exact ex(n, C_3^(4)) for small n: a maximum set of 4-subsets containing
/// no conflict triple {P1 u P2, P1 u P3, P2 u P3}, found by branch and bound.

#include "turan/construct.hpp"
#include "turan/exact.hpp"
#include "turan/hypergraph.hpp"
#include "turan/krawtchouk.hpp"
#include "turan/parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// Items are the 4-subsets of [n]; conflicts are the copies of C_3^(4).
struct ConflictSystem {
    int n = 0;
    std::vector<Mask> items;                     // lexicographic order
    std::vector<std::array<int, 3>> conflicts;   // sorted item indices
    std::vector<std::vector<int>> item_conflicts;

    int index_of(Mask item) const {
        auto it = std::lower_bound(items.begin(), items.end(), item, LexLess{});
        if (it == items.end() || *it != item) {
            throw std::out_of_range("ConflictSystem: not an item");
        }
        return static_cast<int>(it - items.begin());
    }
};

inline ConflictSystem conflict_triples(int n) {
    if (n < 4) {
        throw std::invalid_argument("conflict_triples: n must be >= 4");
    }
    check_ground_set(n, 4);
    ConflictSystem system;
    system.n = n;
    for_each_ksubset(n, 4, [&](Mask m) { system.items.push_back(m); });
    std::set<std::array<int, 3>> unique;
    for_each_ksubset(n, 6, [&](Mask six) {
        const auto v = KSubset{six}.indices();
        // Perfect matchings of the six vertices: pair v0 with one of five,
        // then the smallest remaining with one of three.
        for (int a = 1; a < 6; ++a) {
            std::vector<int> rest;
            for (int i = 1; i < 6; ++i) {
                if (i != a) {
                    rest.push_back(v[static_cast<std::size_t>(i)]);
                }
            }
            for (int b = 1; b < 4; ++b) {
                const Mask p1 = singleton(v[0]) | singleton(v[static_cast<std::size_t>(a)]);
                const Mask p2 = singleton(rest[0]) | singleton(rest[static_cast<std::size_t>(b)]);
                const Mask p3 = six & ~p1 & ~p2;
                std::array<int, 3> triple{system.index_of(p1 | p2), system.index_of(p1 | p3),
                                          system.index_of(p2 | p3)};
                std::sort(triple.begin(), triple.end());
                unique.insert(triple);
            }
        }
    });
    system.conflicts.assign(unique.begin(), unique.end());
    system.item_conflicts.assign(system.items.size(), {});
    for (std::size_t c = 0; c < system.conflicts.size(); ++c) {
        for (int item : system.conflicts[c]) {
            system.item_conflicts[static_cast<std::size_t>(item)].push_back(static_cast<int>(c));
        }
    }
    return system;
}

/// The best parity construction: B(n, t*) with the smallest maximizing t*.
inline Hypergraph lower_bound_construction(int n) {
    if (n < 4) {
        throw std::invalid_argument("lower_bound_construction: n must be >= 4");
    }
    const OptimalShiftReport report = optimal_shift(n, 2);
    return build_parity(n, 2, report.maximizers.front()).hypergraph;
}

struct SearchOptions {
    int cap = 8;
    unsigned threads = 1;
    /// Abandon the proof after this many nodes (0 = unlimited).
    std::uint64_t max_nodes = 0;
};

struct SearchResult {
    ExactInteger value = 0;
    Hypergraph witness;
    std::uint64_t nodes = 0;
    bool proof_of_optimality = false;
};

namespace detail {

class IndependentSetSearch {
public:
    struct Shared {
        std::atomic<int> best{0};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> aborted{false};
        std::uint64_t max_nodes = 0;
        std::mutex witness_mutex;
        std::vector<int> witness;  // item indices
    };

    struct Decision {
        int item;
        bool include;
    };

    IndependentSetSearch(const ConflictSystem& system, Shared& shared)
        : system_(system),
          shared_(shared),
          status_(system.items.size(), kUndecided),
          in_count_(system.conflicts.size(), 0),
          out_count_(system.conflicts.size(), 0),
          used_(system.items.size(), 0),
          undecided_(static_cast<int>(system.items.size())) {}

    void replay(const std::vector<Decision>& path) {
        for (const Decision& d : path) {
            if (status_[static_cast<std::size_t>(d.item)] != kUndecided) {
                continue;
            }
            if (d.include) {
                include(d.item);
            } else {
                exclude(d.item);
            }
        }
    }

    /// Collects the open subproblems `depth` decisions below the current node.
    void frontier(int depth, std::vector<Decision>& path, std::vector<std::vector<Decision>>& out) {
        if (prune()) {
            return;
        }
        const int item = depth == 0 ? -1 : branching_item();
        if (item < 0) {
            out.push_back(path);
            return;
        }
        for (bool include_first : {true, false}) {
            const std::size_t mark = trail_.size();
            if (include_first) {
                include(item);
            } else {
                exclude(item);
            }
            path.push_back({item, include_first});
            frontier(depth - 1, path, out);
            path.pop_back();
            undo(mark);
        }
    }

    void run() {
        if (shared_.aborted.load(std::memory_order_relaxed)) {
            return;
        }
        const std::uint64_t count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.max_nodes != 0 && count > shared_.max_nodes) {
            shared_.aborted.store(true);
            return;
        }
        if (prune()) {
            return;
        }
        const int item = branching_item();
        if (item < 0) {
            // No live conflicts remain: every undecided item can be added.
            record();
            return;
        }
        std::size_t mark = trail_.size();
        include(item);
        run();
        undo(mark);
        mark = trail_.size();
        exclude(item);
        run();
        undo(mark);
    }

private:
    static constexpr std::int8_t kUndecided = 0;
    static constexpr std::int8_t kIn = 1;
    static constexpr std::int8_t kOut = 2;

    bool prune() {
        return in_ + undecided_ - packing() <= shared_.best.load(std::memory_order_relaxed);
    }

    // Disjoint live conflicts, each of which must still lose a member.
    int packing() {
        std::fill(used_.begin(), used_.end(), 0);
        int packed = 0;
        for (std::size_t c = 0; c < system_.conflicts.size(); ++c) {
            if (out_count_[c] != 0) {
                continue;
            }
            bool free = true;
            for (int item : system_.conflicts[c]) {
                if (status_[static_cast<std::size_t>(item)] == kUndecided && used_[static_cast<std::size_t>(item)]) {
                    free = false;
                }
            }
            if (!free) {
                continue;
            }
            for (int item : system_.conflicts[c]) {
                if (status_[static_cast<std::size_t>(item)] == kUndecided) {
                    used_[static_cast<std::size_t>(item)] = 1;
                }
            }
            ++packed;
        }
        return packed;
    }

    // Undecided item in the most conflicts that have no excluded member.
    int branching_item() const {
        int best_item = -1;
        int best_live = 0;
        for (std::size_t i = 0; i < status_.size(); ++i) {
            if (status_[i] != kUndecided) {
                continue;
            }
            int live = 0;
            for (int c : system_.item_conflicts[i]) {
                live += out_count_[static_cast<std::size_t>(c)] == 0 ? 1 : 0;
            }
            if (live > best_live) {
                best_live = live;
                best_item = static_cast<int>(i);
            }
        }
        return best_item;
    }

    void set_status(int item, std::int8_t value) {
        status_[static_cast<std::size_t>(item)] = value;
        trail_.push_back(item);
        --undecided_;
        for (int c : system_.item_conflicts[static_cast<std::size_t>(item)]) {
            if (value == kIn) {
                ++in_count_[static_cast<std::size_t>(c)];
            } else {
                ++out_count_[static_cast<std::size_t>(c)];
            }
        }
        if (value == kIn) {
            ++in_;
        }
    }

    void include(int item) {
        set_status(item, kIn);
        // A conflict with two members in forces its third member out.
        for (int c : system_.item_conflicts[static_cast<std::size_t>(item)]) {
            if (in_count_[static_cast<std::size_t>(c)] == 2 && out_count_[static_cast<std::size_t>(c)] == 0) {
                for (int other : system_.conflicts[static_cast<std::size_t>(c)]) {
                    if (status_[static_cast<std::size_t>(other)] == kUndecided) {
                        set_status(other, kOut);
                    }
                }
            }
        }
    }

    void exclude(int item) { set_status(item, kOut); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const int item = trail_.back();
            trail_.pop_back();
            const std::int8_t value = status_[static_cast<std::size_t>(item)];
            for (int c : system_.item_conflicts[static_cast<std::size_t>(item)]) {
                if (value == kIn) {
                    --in_count_[static_cast<std::size_t>(c)];
                } else {
                    --out_count_[static_cast<std::size_t>(c)];
                }
            }
            if (value == kIn) {
                --in_;
            }
            status_[static_cast<std::size_t>(item)] = kUndecided;
            ++undecided_;
        }
    }

    void record() {
        const int value = in_ + undecided_;
        int current = shared_.best.load();
        if (value <= current) {
            return;
        }
        std::lock_guard<std::mutex> lock(shared_.witness_mutex);
        if (value <= shared_.best.load()) {
            return;
        }
        shared_.witness.clear();
        for (std::size_t i = 0; i < status_.size(); ++i) {
            if (status_[i] != kOut) {
                shared_.witness.push_back(static_cast<int>(i));
            }
        }
        shared_.best.store(value);
    }

    const ConflictSystem& system_;
    Shared& shared_;
    std::vector<std::int8_t> status_;
    std::vector<int> in_count_;
    std::vector<int> out_count_;
    std::vector<std::uint8_t> used_;
    std::vector<int> trail_;
    int in_ = 0;
    int undecided_ = 0;
};

}  // namespace detail

/// Exact ex(n, C_3^(4)) with a witness, seeded by the parity construction.
inline SearchResult exact_turan(int n, const SearchOptions& options = {}) {
    if (n < 0) {
        throw std::invalid_argument("exact_turan: n must be nonnegative");
    }
    if (n > options.cap) {
        throw std::invalid_argument("exact_turan: n=" + std::to_string(n) + " exceeds the cap " +
                                    std::to_string(options.cap));
    }
    SearchResult result;
    if (n < 4) {
        result.witness = Hypergraph(n, 2);
        result.proof_of_optimality = true;
        return result;
    }
    const ConflictSystem system = conflict_triples(n);
    detail::IndependentSetSearch::Shared shared;
    shared.max_nodes = options.max_nodes;

    const Hypergraph seed = lower_bound_construction(n);
    for (Mask e : seed.edges()) {
        shared.witness.push_back(system.index_of(e));
    }
    shared.best.store(static_cast<int>(seed.edge_count()));

    const unsigned threads = resolve_threads(options.threads);
    if (threads <= 1) {
        detail::IndependentSetSearch search(system, shared);
        search.run();
    } else {
        std::vector<std::vector<detail::IndependentSetSearch::Decision>> tasks;
        std::vector<detail::IndependentSetSearch::Decision> path;
        detail::IndependentSetSearch splitter(system, shared);
        splitter.frontier(8, path, tasks);
        parallel_for(tasks.size(), threads, [&](std::size_t t) {
            detail::IndependentSetSearch search(system, shared);
            search.replay(tasks[t]);
            search.run();
        });
    }

    std::vector<Mask> edges;
    for (int item : shared.witness) {
        edges.push_back(system.items[static_cast<std::size_t>(item)]);
    }
    result.witness = Hypergraph(n, 2, std::move(edges));
    result.value = static_cast<long long>(result.witness.edge_count());
    result.nodes = shared.nodes.load();
    result.proof_of_optimality = !shared.aborted.load();
    return result;
}

}  // namespace turan
