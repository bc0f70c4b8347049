#pragma once

/// @file
/// Exact search for a clique of a given size, by branch and bound with a
/// greedy coloring bound. Vertices are dense indices; adjacency is any
/// symmetric predicate.

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

namespace turan {

template <typename Adjacent>
class CliqueFinder {
public:
    CliqueFinder(Adjacent adjacent, int target, const std::atomic<bool>* stop = nullptr)
        : adjacent_(std::move(adjacent)), target_(target), stop_(stop) {}

    /// Tries to grow `clique` to the target size using vertices from
    /// `candidates`, each of which must be adjacent to every clique member.
    bool extend(std::vector<int>& clique, const std::vector<int>& candidates) {
        ++nodes_;
        if (static_cast<int>(clique.size()) >= target_) {
            return true;
        }
        if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) {
            return false;
        }
        const int needed = target_ - static_cast<int>(clique.size());
        if (static_cast<int>(candidates.size()) < needed) {
            return false;
        }
        if (color_bound(candidates) < needed) {
            return false;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (static_cast<int>(candidates.size() - i) < needed) {
                return false;
            }
            const int v = candidates[i];
            std::vector<int> next;
            next.reserve(candidates.size() - i);
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (adjacent_(v, candidates[j])) {
                    next.push_back(candidates[j]);
                }
            }
            clique.push_back(v);
            if (extend(clique, next)) {
                return true;
            }
            clique.pop_back();
        }
        return false;
    }

    std::size_t nodes() const { return nodes_; }

private:
    // Number of color classes in a greedy proper coloring; an upper bound
    // on the clique number of the candidate set.
    int color_bound(const std::vector<int>& candidates) const {
        std::vector<std::vector<int>> classes;
        for (int v : candidates) {
            bool placed = false;
            for (auto& cls : classes) {
                bool clash = false;
                for (int u : cls) {
                    if (adjacent_(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.push_back({v});
            }
        }
        return static_cast<int>(classes.size());
    }

    Adjacent adjacent_;
    int target_;
    const std::atomic<bool>* stop_;
    std::size_t nodes_ = 0;
};

/// Finds a clique of `size` among vertices 0..count-1.
template <typename Adjacent>
std::optional<std::vector<int>> find_clique(int count, int size, Adjacent adjacent) {
    if (size <= 0) {
        return std::vector<int>{};
    }
    std::vector<int> all(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    CliqueFinder<Adjacent> finder(std::move(adjacent), size);
    std::vector<int> clique;
    if (finder.extend(clique, all)) {
        return clique;
    }
    return std::nullopt;
}

}  // namespace turan
