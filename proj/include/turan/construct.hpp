#pragma once

/// @file
/// The two extremal constructions: the parity bipartition hypergraph and
/// the GF(2)^p-labelled hypergraph, with closed-form edge and degree counts.

#include "turan/exact.hpp"
#include "turan/hypergraph.hpp"
#include "turan/krawtchouk.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// Vertex -> part map. Part 1 holds n/2 + t vertices, part 2 the rest.
class Bipartition {
public:
    Bipartition() = default;

    explicit Bipartition(std::vector<int> part_of) : part_of_(std::move(part_of)) {
        if (part_of_.size() > static_cast<std::size_t>(kMaxVertices)) {
            throw std::invalid_argument("Bipartition: more than 64 vertices");
        }
        for (int p : part_of_) {
            if (p != 1 && p != 2) {
                throw std::invalid_argument("Bipartition: parts are labelled 1 and 2");
            }
        }
    }

    /// Vertices 0..first-1 in part 1, the remaining n-first in part 2.
    static Bipartition contiguous(int n, int first) {
        if (first < 0 || first > n) {
            throw std::invalid_argument("Bipartition: first part size out of range");
        }
        std::vector<int> part(static_cast<std::size_t>(n), 2);
        for (int v = 0; v < first; ++v) {
            part[static_cast<std::size_t>(v)] = 1;
        }
        return Bipartition(std::move(part));
    }

    int vertex_count() const { return static_cast<int>(part_of_.size()); }
    int part_of(int v) const { return part_of_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& parts() const { return part_of_; }

    Mask first_part_mask() const {
        Mask m = 0;
        for (std::size_t v = 0; v < part_of_.size(); ++v) {
            if (part_of_[v] == 1) {
                m |= singleton(static_cast<int>(v));
            }
        }
        return m;
    }

    int first_size() const { return popcount(first_part_mask()); }
    int second_size() const { return vertex_count() - first_size(); }

    Bipartition moved(int v) const {
        std::vector<int> next = part_of_;
        next.at(static_cast<std::size_t>(v)) = 3 - next[static_cast<std::size_t>(v)];
        return Bipartition(std::move(next));
    }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<int> part_of_;
};

/// A 2k-set is good for a bipartition when it meets each part in an odd
/// number of vertices (for even size, one odd intersection forces both).
inline bool is_good_tuple(Mask tuple, Mask first_part) {
    return (popcount(tuple & first_part) & 1) != 0;
}

struct ParityConstruction {
    Hypergraph hypergraph;
    Bipartition partition;
};

/// The parity hypergraph: parts {0..n/2+t-1} and the rest, edges are all
/// 2k-subsets meeting each part in an odd number of vertices.
inline ParityConstruction build_parity(int n, int k, ShiftValue shift) {
    require_feasible_shift(n, shift);
    check_ground_set(n, 2 * k);
    const int first = static_cast<int>(shift.first_part(n));
    Bipartition partition = Bipartition::contiguous(n, first);
    const Mask v1 = partition.first_part_mask();
    std::vector<Mask> edges;
    for_each_ksubset(n, 2 * k, [&](Mask e) {
        if (is_good_tuple(e, v1)) {
            edges.push_back(e);
        }
    });
    return {Hypergraph(n, k, std::move(edges)), std::move(partition)};
}

/// Edge count of the parity construction. For k = 2 the quartic closed
/// form is evaluated as well and must agree with the Krawtchouk form.
inline ExactInteger b_count(std::int64_t n, std::int64_t k, ShiftValue shift) {
    if (k < 1) {
        throw std::invalid_argument("b_count: k must be >= 1");
    }
    require_feasible_shift(n, shift);
    const std::int64_t x = shift.first_part(n);
    // For n < 2k the construction is empty: both terms vanish.
    const ExactInteger twice =
        2 * k > n ? ExactInteger(0) : binom_exact(n, 2 * k) - kraw_eval(2 * k, n, x);
    if (twice % 2 != 0) {
        throw std::logic_error("b_count: Krawtchouk form is not even");
    }
    ExactInteger edges = twice / 2;
    if (k == 2) {
        // ((n^2-3n+4)^2 - (4t^2-3n+4)^2) / 48 with 4t^2 = (2t)^2.
        const ExactInteger nn = n;
        const ExactInteger tau = shift.twoT;
        const ExactInteger a = nn * nn - 3 * nn + 4;
        const ExactInteger b = tau * tau - 3 * nn + 4;
        const ExactInteger numerator = a * a - b * b;
        const ExactRational closed(numerator, ExactInteger(48));
        if (denominator(closed) != 1) {
            throw std::logic_error("b_count: quartic closed form is not integral");
        }
        if (numerator / 48 != edges) {
            throw std::logic_error("b_count: closed form and Krawtchouk form disagree");
        }
    }
    return edges;
}

enum class Side { large, small };

/// Degree of a vertex in the part of size n/2 + t (`large`) or n/2 - t
/// (`small`). The names follow t >= 0; for negative t they swap roles.
inline ExactInteger degree_count(std::int64_t n, std::int64_t k, ShiftValue shift, Side side) {
    if (k < 1) {
        throw std::invalid_argument("degree_count: k must be >= 1");
    }
    require_feasible_shift(n, shift);
    const ShiftValue own = side == Side::large ? shift : ShiftValue{-shift.twoT};
    const std::int64_t part = own.first_part(n);
    if (part < 1) {
        throw std::invalid_argument("degree_count: the addressed part is empty");
    }
    const ExactInteger twice =
        2 * k > n ? ExactInteger(0)
                  : binom_exact(n - 1, 2 * k - 1) + kraw_eval(2 * k - 1, n - 1, part - 1);
    if (twice % 2 != 0) {
        throw std::logic_error("degree_count: Krawtchouk form is not even");
    }
    ExactInteger degree = twice / 2;
    if (k == 2) {
        // (n^3-6n^2+8n+12t^2)/12 + (6tn-8t^3-16t)/12, written in tau = 2t.
        const ExactInteger nn = n;
        const ExactInteger tau = own.twoT;
        const ExactInteger numerator = nn * nn * nn - 6 * nn * nn + 8 * nn + 3 * tau * tau +
                                       3 * tau * nn - tau * tau * tau - 8 * tau;
        if (numerator % 12 != 0 || numerator / 12 != degree) {
            throw std::logic_error("degree_count: cubic closed form disagrees");
        }
    }
    return degree;
}

/// Largest vertex degree of the parity construction.
inline ExactInteger max_degree(std::int64_t n, std::int64_t k, ShiftValue shift) {
    require_feasible_shift(n, shift);
    ExactInteger best = 0;
    if (shift.first_part(n) >= 1) {
        best = degree_count(n, k, shift, Side::large);
    }
    if (shift.second_part(n) >= 1) {
        ExactInteger other = degree_count(n, k, shift, Side::small);
        if (other > best) {
            best = other;
        }
    }
    return best;
}

/// Vertex -> GF(2)^p label, each label a p-bit mask.
class GF2Labeling {
public:
    GF2Labeling() = default;

    GF2Labeling(int p, std::vector<std::uint32_t> labels) : p_(p), labels_(std::move(labels)) {
        if (p < 0 || p > 31) {
            throw std::invalid_argument("GF2Labeling: dimension must lie in [0, 31]");
        }
        for (std::uint32_t w : labels_) {
            if ((w >> p) != 0) {
                throw std::invalid_argument("GF2Labeling: label has more than p bits");
            }
        }
    }

    int dimension() const { return p_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    std::uint32_t label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::uint32_t>& labels() const { return labels_; }

private:
    int p_ = 0;
    std::vector<std::uint32_t> labels_;
};

/// XOR of the labels of the members of X.
inline std::uint32_t sigma_sum(KSubset x, const GF2Labeling& labeling) {
    std::uint32_t sum = 0;
    for (Mask m = x.bits; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (v >= labeling.vertex_count()) {
            throw std::out_of_range("sigma_sum: vertex has no label");
        }
        sum ^= labeling.label(v);
    }
    return sum;
}

/// Contiguous blocks in label order. Without `allow_remainder` every block
/// has exactly n / 2^p vertices; with it the first n mod 2^p labels get one
/// extra vertex each.
inline GF2Labeling block_labeling(int n, int p, bool allow_remainder = false) {
    if (p < 0 || p > 20) {
        throw std::invalid_argument("block_labeling: p must lie in [0, 20]");
    }
    if (n < 0) {
        throw std::invalid_argument("block_labeling: n must be nonnegative");
    }
    const int blocks = 1 << p;
    if (!allow_remainder && n % blocks != 0) {
        throw std::invalid_argument("n=" + std::to_string(n) + " is not divisible by 2^p=" +
                                    std::to_string(blocks));
    }
    const int base = n / blocks;
    const int extra = n % blocks;
    std::vector<std::uint32_t> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int w = 0; w < blocks; ++w) {
        const int size = base + (w < extra ? 1 : 0);
        labels.insert(labels.end(), static_cast<std::size_t>(size), static_cast<std::uint32_t>(w));
    }
    return GF2Labeling(p, std::move(labels));
}

struct SidorenkoConstruction {
    Hypergraph hypergraph;
    GF2Labeling labeling;
};

/// Edges are the 2k-subsets whose label sum is nonzero.
inline SidorenkoConstruction build_sidorenko(int n, int k, int p, bool allow_remainder = false) {
    check_ground_set(n, 2 * k);
    GF2Labeling labeling = block_labeling(n, p, allow_remainder);
    std::vector<Mask> edges;
    for_each_ksubset(n, 2 * k, [&](Mask e) {
        if (sigma_sum(KSubset{e}, labeling) != 0) {
            edges.push_back(e);
        }
    });
    return {Hypergraph(n, k, std::move(edges)), std::move(labeling)};
}

/// Edge count of the labelled construction without building it: a
/// dynamic program over (chosen count, label sum) across the blocks.
inline ExactInteger sidorenko_edge_count(std::int64_t n, std::int64_t k, int p,
                                         bool allow_remainder = false) {
    if (p < 0 || p > 20 || n < 0 || k < 1) {
        throw std::invalid_argument("sidorenko_edge_count: bad arguments");
    }
    const std::int64_t blocks = std::int64_t{1} << p;
    if (!allow_remainder && n % blocks != 0) {
        throw std::invalid_argument("sidorenko_edge_count: n not divisible by 2^p");
    }
    const std::int64_t uniform = 2 * k;
    const std::size_t sums = static_cast<std::size_t>(blocks);
    // ways[j][s]: j vertices chosen so far with label sum s.
    std::vector<std::vector<ExactInteger>> ways(
        static_cast<std::size_t>(uniform + 1), std::vector<ExactInteger>(sums, ExactInteger(0)));
    ways[0][0] = 1;
    for (std::int64_t w = 0; w < blocks; ++w) {
        const std::int64_t size = n / blocks + (w < n % blocks ? 1 : 0);
        auto next = ways;
        for (auto& row : next) {
            std::fill(row.begin(), row.end(), ExactInteger(0));
        }
        for (std::int64_t j = 0; j <= uniform; ++j) {
            for (std::size_t s = 0; s < sums; ++s) {
                if (ways[j][s] == 0) {
                    continue;
                }
                for (std::int64_t i = 0; i + j <= uniform && i <= size; ++i) {
                    const std::size_t target = (i % 2 == 1) ? (s ^ static_cast<std::size_t>(w)) : s;
                    next[j + i][target] += ways[j][s] * binom_exact(size, i);
                }
            }
        }
        ways = std::move(next);
    }
    return binom_exact(n, uniform) - ways[uniform][0];
}

}  // namespace turan
