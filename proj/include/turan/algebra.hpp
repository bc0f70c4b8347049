#pragma once

/// @file
/// Edge colorings of K_s with s-1 colors in which every color class is
/// a matching and every 4 vertices span 3 or 6 colors. Such a coloring
/// carries an elementary abelian 2-group on {0} u colors, with c_i + c_j
/// the color of y_i y_j where x y_i, x y_j have colors c_i, c_j.

#include "turan/io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

class EdgeColoring {
public:
    EdgeColoring() = default;

    /// `pair_colors` lists the color of {i,j} for i < j in lexicographic
    /// pair order: (0,1), (0,2), ..., (s-2,s-1).
    EdgeColoring(int s, int color_count, std::vector<int> pair_colors)
        : s_(s), color_count_(color_count), colors_(std::move(pair_colors)) {
        if (s < 0 || color_count < 0) {
            throw std::invalid_argument("EdgeColoring: negative size");
        }
        if (colors_.size() != pair_count(s)) {
            throw std::invalid_argument("EdgeColoring: expected one color per vertex pair");
        }
        for (int c : colors_) {
            if (c < 0 || c >= color_count) {
                throw std::invalid_argument("EdgeColoring: color index out of range");
            }
        }
    }

    template <typename F>
    static EdgeColoring from_function(int s, int color_count, F&& color_of) {
        std::vector<int> colors;
        colors.reserve(pair_count(s));
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                colors.push_back(color_of(i, j));
            }
        }
        return EdgeColoring(s, color_count, std::move(colors));
    }

    static std::size_t pair_count(int s) {
        return s < 2 ? 0 : static_cast<std::size_t>(s) * static_cast<std::size_t>(s - 1) / 2;
    }

    int vertex_count() const { return s_; }
    int color_count() const { return color_count_; }

    int color(int i, int j) const {
        if (i == j || i < 0 || j < 0 || i >= s_ || j >= s_) {
            throw std::out_of_range("EdgeColoring: not a vertex pair");
        }
        if (i > j) {
            std::swap(i, j);
        }
        // Pairs before row i: sum_{a<i} (s-1-a).
        const std::size_t row = static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * s_ - i - 1) / 2;
        return colors_[row + static_cast<std::size_t>(j - i - 1)];
    }

    const std::vector<int>& pair_colors() const { return colors_; }

private:
    int s_ = 0;
    int color_count_ = 0;
    std::vector<int> colors_;
};

/// K_{2^p} on GF(2)^p with {u,v} colored by u xor v; color index is
/// (u xor v) - 1.
inline EdgeColoring generate_gf2_coloring(int p) {
    if (p < 1 || p > 12) {
        throw std::invalid_argument("generate_gf2_coloring: p must lie in [1, 12]");
    }
    const int s = 1 << p;
    return EdgeColoring::from_function(s, s - 1, [](int u, int v) { return (u ^ v) - 1; });
}

struct ColoringReport {
    bool is_full_coloring = false;             // exactly s-1 colors
    bool every_color_perfect_matching = false;
    bool four_set_condition = false;           // every 4-set spans 3 or 6 colors
    std::optional<std::array<int, 4>> first_violation;  // first bad 4-set
    std::string matching_violation;            // first vertex/color failure

    bool passes() const {
        return is_full_coloring && every_color_perfect_matching && four_set_condition;
    }
};

inline ColoringReport verify_coloring(const EdgeColoring& c) {
    ColoringReport report;
    const int s = c.vertex_count();
    report.is_full_coloring = c.color_count() == s - 1;

    report.every_color_perfect_matching = true;
    for (int v = 0; v < s && report.every_color_perfect_matching; ++v) {
        std::vector<int> incident(static_cast<std::size_t>(c.color_count()), 0);
        for (int u = 0; u < s; ++u) {
            if (u != v) {
                ++incident[static_cast<std::size_t>(c.color(u, v))];
            }
        }
        for (int color = 0; color < c.color_count(); ++color) {
            if (incident[static_cast<std::size_t>(color)] != 1) {
                report.every_color_perfect_matching = false;
                report.matching_violation =
                    "vertex " + std::to_string(v) + " meets color " + std::to_string(color) + " " +
                    std::to_string(incident[static_cast<std::size_t>(color)]) + " times";
                break;
            }
        }
    }

    report.four_set_condition = true;
    if (s >= 4) {
        for_each_ksubset(s, 4, [&](Mask m) {
            if (report.first_violation) {
                return;
            }
            const auto v = KSubset{m}.indices();
            std::array<int, 6> seen{};
            int distinct = 0;
            for (int a = 0; a < 4; ++a) {
                for (int b = a + 1; b < 4; ++b) {
                    const int color = c.color(v[a], v[b]);
                    bool repeat = false;
                    for (int i = 0; i < distinct; ++i) {
                        repeat = repeat || seen[static_cast<std::size_t>(i)] == color;
                    }
                    if (!repeat) {
                        seen[static_cast<std::size_t>(distinct++)] = color;
                    }
                }
            }
            if (distinct != 3 && distinct != 6) {
                report.four_set_condition = false;
                report.first_violation = std::array<int, 4>{v[0], v[1], v[2], v[3]};
            }
        });
    }
    return report;
}

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Elements 0..order-1; element 0 is the identity and element c+1 stands
/// for color c.
struct ColorGroup {
    int order = 1;
    int dimension = 0;
    std::vector<int> table{0};

    int add(int a, int b) const {
        return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                     static_cast<std::size_t>(b)];
    }
};

/// Builds the color group, checking every group axiom by brute force:
/// the table from each base vertex must agree, and associativity is
/// checked over all triples.
inline ColorGroup build_group(const EdgeColoring& c) {
    const ColoringReport report = verify_coloring(c);
    if (!report.passes()) {
        throw std::invalid_argument("build_group: coloring fails verification");
    }
    const int s = c.vertex_count();
    const int colors = c.color_count();

    // partner[x][color] = the vertex joined to x by that color.
    std::vector<std::vector<int>> partner(static_cast<std::size_t>(s),
                                          std::vector<int>(static_cast<std::size_t>(colors), -1));
    for (int x = 0; x < s; ++x) {
        for (int y = 0; y < s; ++y) {
            if (x != y) {
                partner[static_cast<std::size_t>(x)][static_cast<std::size_t>(c.color(x, y))] = y;
            }
        }
    }

    auto sum_from = [&](int x, int ci, int cj) {
        if (ci == cj) {
            return 0;
        }
        const int yi = partner[static_cast<std::size_t>(x)][static_cast<std::size_t>(ci)];
        const int yj = partner[static_cast<std::size_t>(x)][static_cast<std::size_t>(cj)];
        return c.color(yi, yj) + 1;
    };

    ColorGroup group;
    group.order = s;
    group.table.assign(static_cast<std::size_t>(s) * static_cast<std::size_t>(s), 0);
    auto cell = [&](int a, int b) -> int& {
        return group.table[static_cast<std::size_t>(a) * static_cast<std::size_t>(s) +
                           static_cast<std::size_t>(b)];
    };
    for (int a = 0; a < s; ++a) {
        cell(0, a) = a;
        cell(a, 0) = a;
    }
    for (int ci = 0; ci < colors; ++ci) {
        for (int cj = 0; cj < colors; ++cj) {
            const int value = sum_from(0, ci, cj);
            for (int x = 1; x < s; ++x) {
                if (sum_from(x, ci, cj) != value) {
                    throw GroupError("color sum c" + std::to_string(ci) + " + c" + std::to_string(cj) +
                                     " differs between base vertices 0 and " + std::to_string(x));
                }
            }
            cell(ci + 1, cj + 1) = value;
        }
    }

    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            if (group.add(a, b) != group.add(b, a)) {
                throw GroupError("not commutative at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
            }
            for (int d = 0; d < s; ++d) {
                if (group.add(group.add(a, b), d) != group.add(a, group.add(b, d))) {
                    throw GroupError("not associative at (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ", " + std::to_string(d) + ")");
                }
            }
        }
    }
    // Every element is its own inverse, so the group is a GF(2) vector space.
    if (s < 1 || !std::has_single_bit(static_cast<unsigned>(s))) {
        throw GroupError("group order " + std::to_string(s) + " is not a power of 2");
    }
    group.dimension = std::countr_zero(static_cast<unsigned>(s));
    return group;
}

// turan-col v1
// s=<int> colors=<int>
// c <i> <j> <color>     for each 0 <= i < j < s

inline EdgeColoring read_coloring(std::istream& in) {
    LineReader reader(in);
    reader.expect_header(reader.require("header"), "turan-col v1");
    const auto dims = reader.require("'s=<int> colors=<int>'");
    if (dims.size() != 2) {
        reader.fail("expected 's=<int> colors=<int>'");
    }
    const long long s = reader.keyed(dims[0], "s");
    const long long colors = reader.keyed(dims[1], "colors");
    if (s < 0 || s > 4096 || colors < 0) {
        reader.fail("s must lie in [0, 4096] and colors must be nonnegative");
    }
    const int size = static_cast<int>(s);
    std::vector<int> table(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), -1);
    std::size_t filled = 0;
    while (auto tokens = reader.next()) {
        if (tokens->size() != 4 || (*tokens)[0] != "c") {
            reader.fail("expected 'c <i> <j> <color>'");
        }
        const long long i = reader.integer((*tokens)[1]);
        const long long j = reader.integer((*tokens)[2]);
        const long long color = reader.integer((*tokens)[3]);
        if (i < 0 || j <= i || j >= s) {
            reader.fail("pair must satisfy 0 <= i < j < s");
        }
        if (color < 0 || color >= colors) {
            reader.fail("color index out of range");
        }
        int& slot = table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                          static_cast<std::size_t>(j)];
        if (slot != -1) {
            reader.fail("pair colored twice");
        }
        slot = static_cast<int>(color);
        ++filled;
    }
    if (filled != EdgeColoring::pair_count(size)) {
        throw ParseError(reader.line() + 1, "missing colors: " +
                                                std::to_string(EdgeColoring::pair_count(size) - filled) +
                                                " pairs uncolored");
    }
    return EdgeColoring::from_function(size, static_cast<int>(colors), [&](int i, int j) {
        return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                     static_cast<std::size_t>(j)];
    });
}

inline void write_coloring(std::ostream& out, const EdgeColoring& c) {
    out << "turan-col v1\n";
    out << "s=" << c.vertex_count() << " colors=" << c.color_count() << '\n';
    for (int i = 0; i < c.vertex_count(); ++i) {
        for (int j = i + 1; j < c.vertex_count(); ++j) {
            out << "c " << i << ' ' << j << ' ' << c.color(i, j) << '\n';
        }
    }
}

}  // namespace turan
