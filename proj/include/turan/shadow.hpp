#pragma once

/// @file
/// Shadows of k-set families and the real-valued (Lovász) form of the
/// Kruskal-Katona bound: if |A| = C(x,k) then |shadow A| >= C(x,k-1).

#include "turan/exact.hpp"
#include "turan/hypergraph.hpp"
#include "turan/io.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace turan {

/// All (k-1)-sets contained in some member.
inline SetFamily shadow_of(const SetFamily& family) {
    const int k = family.member_size();
    if (k < 1) {
        throw std::invalid_argument("shadow_of: member size must be >= 1");
    }
    std::vector<Mask> out;
    out.reserve(family.size() * static_cast<std::size_t>(k));
    for (Mask member : family.members()) {
        for (Mask m = member; m != 0; m &= m - 1) {
            out.push_back(member & ~(m & -m));
        }
    }
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SetFamily(family.ground_size(), k - 1, std::move(out));
}

/// The x >= k-1 with C(x,k) = size, by bisection on [k-1, k-1+size].
inline double lovasz_x(const ExactInteger& size, int k) {
    if (k < 1) {
        throw std::invalid_argument("lovasz_x: k must be >= 1");
    }
    if (size < 0) {
        throw std::invalid_argument("lovasz_x: size must be nonnegative");
    }
    const double low_end = static_cast<double>(k - 1);
    if (size == 0) {
        return low_end;
    }
    const double target = size.convert_to<double>();
    double lo = low_end;
    double hi = low_end + target;
    for (int iteration = 0; iteration < 400 && hi - lo > 1e-12; ++iteration) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (binom_real(mid, k) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2.0;
}

struct LovaszReport {
    double x = 0.0;
    double bound = 0.0;
    std::size_t shadow_size = 0;
    bool holds = false;
};

/// Slack in favour of "holds" so rounding in x cannot raise a false alarm.
inline constexpr double kLovaszSlack = 1e-9;

inline bool lovasz_holds(double shadow_size, double bound) {
    return shadow_size + kLovaszSlack * std::max(1.0, bound) >= bound;
}

inline LovaszReport check_lovasz_bound(const SetFamily& family) {
    const int k = family.member_size();
    if (k < 1) {
        throw std::invalid_argument("check_lovasz_bound: member size must be >= 1");
    }
    LovaszReport report;
    report.x = lovasz_x(ExactInteger(family.size()), k);
    // The empty family has an empty shadow; C(k-1,k-1) = 1 would be a
    // meaningless bound there.
    report.bound = family.size() == 0 ? 0.0 : binom_real(report.x, k - 1);
    report.shadow_size = shadow_of(family).size();
    report.holds = lovasz_holds(static_cast<double>(report.shadow_size), report.bound);
    return report;
}

/// The first `count` k-subsets of {0..m-1} in colexicographic order.
inline SetFamily colex_initial_segment(int m, int k, std::size_t count) {
    std::vector<Mask> all;
    for_each_ksubset(m, k, [&](Mask s) { all.push_back(s); });
    // Colex compares the largest differing element: numeric order on masks.
    std::sort(all.begin(), all.end());
    if (count > all.size()) {
        throw std::invalid_argument("colex_initial_segment: count exceeds C(m,k)");
    }
    all.resize(count);
    return SetFamily(m, k, std::move(all));
}

// turan-fam v1
// m=<int> k=<int>
// s <v1> ... <vk>

inline SetFamily read_family(std::istream& in) {
    LineReader reader(in);
    reader.expect_header(reader.require("header"), "turan-fam v1");
    const auto dims = reader.require("'m=<int> k=<int>'");
    if (dims.size() != 2) {
        reader.fail("expected 'm=<int> k=<int>'");
    }
    const long long m = reader.keyed(dims[0], "m");
    const long long k = reader.keyed(dims[1], "k");
    if (m < 0 || m > kMaxVertices || k < 0 || k > m) {
        reader.fail("require 0 <= k <= m <= 64");
    }
    std::vector<Mask> members;
    std::unordered_set<Mask> seen;
    while (auto tokens = reader.next()) {
        if ((*tokens)[0] != "s") {
            reader.fail("expected a member line 's <v1> ... <vk>'");
        }
        const Mask member = reader.index_list(*tokens, 1, static_cast<int>(m));
        if (tokens->size() - 1 != static_cast<std::size_t>(k)) {
            reader.fail("member has wrong cardinality");
        }
        if (!seen.insert(member).second) {
            reader.fail("duplicate member");
        }
        members.push_back(member);
    }
    return SetFamily(static_cast<int>(m), static_cast<int>(k), std::move(members));
}

inline void write_family(std::ostream& out, const SetFamily& family) {
    out << "turan-fam v1\n";
    out << "m=" << family.ground_size() << " k=" << family.member_size() << '\n';
    for (Mask s : family.members()) {
        out << 's';
        write_index_list(out, s);
        out << '\n';
    }
}

}  // namespace turan
