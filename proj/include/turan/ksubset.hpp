#pragma once

/// @file
/// k-subsets of a small ground set stored as 64-bit masks.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turan {

using Mask = std::uint64_t;

/// Largest ground set a mask can hold.
inline constexpr int kMaxVertices = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask singleton(int v) { return Mask{1} << v; }

/// Mask with bits 0..n-1 set.
inline Mask prefix_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Lexicographic order on the sorted index lists of two masks of equal
/// cardinality: a precedes b iff the lowest differing element lies in a.
inline bool lex_less(Mask a, Mask b) {
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & -diff)) != 0;
}

struct LexLess {
    bool operator()(Mask a, Mask b) const { return lex_less(a, b); }
};

/// A subset of {0,...,n-1}; the cardinality is the popcount.
struct KSubset {
    Mask bits = 0;

    int size() const { return popcount(bits); }
    bool contains(int v) const { return (bits >> v) & 1U; }
    bool disjoint(KSubset other) const { return (bits & other.bits) == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask m = bits; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m));
        }
        return out;
    }

    static KSubset from_indices(const std::vector<int>& vertices) {
        KSubset s;
        for (int v : vertices) {
            if (v < 0 || v >= kMaxVertices) {
                throw std::out_of_range("KSubset: vertex index out of mask range");
            }
            s.bits |= singleton(v);
        }
        return s;
    }

    friend bool operator==(KSubset a, KSubset b) { return a.bits == b.bits; }
    friend bool operator<(KSubset a, KSubset b) { return lex_less(a.bits, b.bits); }
};

inline void check_ground_set(int n, int k) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("ground set size must lie in [0, 64]");
    }
    if (k < 0) {
        throw std::invalid_argument("subset size must be nonnegative");
    }
}

/// Visits every k-subset of {0..n-1} in lexicographic order of the sorted
/// index lists. Nothing is visited when k > n.
template <typename F>
void for_each_ksubset(int n, int k, F&& visit) {
    check_ground_set(n, k);
    if (k > n) {
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[i] = i;
    }
    Mask mask = prefix_mask(k);
    while (true) {
        visit(mask);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        for (int j = i; j < k; ++j) {
            mask &= ~singleton(idx[j]);
        }
        ++idx[i];
        mask |= singleton(idx[i]);
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
            mask |= singleton(idx[j]);
        }
    }
}

/// Every k-subset of {0..n-1}, in lexicographic order.
inline std::vector<KSubset> enumerate_ksubsets(int n, int k) {
    if (k > n) {
        throw std::invalid_argument("enumerate_ksubsets: requires 0 <= k <= n");
    }
    std::vector<KSubset> out;
    for_each_ksubset(n, k, [&](Mask m) { out.push_back(KSubset{m}); });
    return out;
}

/// Submasks of `set` with exactly `size` elements, in lexicographic order.
template <typename F>
void for_each_submask_of_size(Mask set, int size, F&& visit) {
    std::vector<int> members;
    for (Mask m = set; m != 0; m &= m - 1) {
        members.push_back(std::countr_zero(m));
    }
    const int total = static_cast<int>(members.size());
    for_each_ksubset(total, size, [&](Mask local) {
        Mask out = 0;
        for (Mask m = local; m != 0; m &= m - 1) {
            out |= singleton(members[std::countr_zero(m)]);
        }
        visit(out);
    });
}

}  // namespace turan
