#pragma once

/// @file
/// Binary Krawtchouk polynomials K_m^n(x), evaluated exactly by three
/// independent routes, and the search for the bipartition shift that
/// maximizes the parity construction.
///
/// K_m^n(x) is the coefficient of z^m in (1-z)^x (1+z)^(n-x).

#include "turan/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// A bipartition shift t stored as the integer 2t, so the half-integer
/// shifts needed for odd n are exact. Parts have sizes n/2 + t, n/2 - t.
struct ShiftValue {
    std::int64_t twoT = 0;

    friend bool operator==(ShiftValue, ShiftValue) = default;
    friend auto operator<=>(ShiftValue, ShiftValue) = default;

    /// Size of the first part, n/2 + t.
    std::int64_t first_part(std::int64_t n) const { return (n + twoT) / 2; }
    /// Size of the second part, n/2 - t.
    std::int64_t second_part(std::int64_t n) const { return (n - twoT) / 2; }
    double as_real() const { return static_cast<double>(twoT) / 2.0; }
};

/// Both parts are nonnegative integers.
inline bool is_feasible_shift(std::int64_t n, ShiftValue shift) {
    return n >= 0 && (n + shift.twoT) % 2 == 0 && shift.twoT <= n && -shift.twoT <= n;
}

inline void require_feasible_shift(std::int64_t n, ShiftValue shift) {
    if (!is_feasible_shift(n, shift)) {
        throw std::invalid_argument("infeasible shift 2t=" + std::to_string(shift.twoT) +
                                    " for n=" + std::to_string(n) +
                                    " (n/2 +- t must be nonnegative integers)");
    }
}

/// Explicit alternating sum  sum_i (-1)^i C(x,i) C(n-x, m-i).
inline ExactInteger kraw_eval(std::int64_t m, std::int64_t n, std::int64_t x) {
    if (n < 0 || m < 0 || m > n || x < 0 || x > n) {
        throw std::invalid_argument("kraw_eval: requires 0 <= m <= n and 0 <= x <= n");
    }
    ExactInteger sum = 0;
    for (std::int64_t i = 0; i <= std::min(m, x); ++i) {
        ExactInteger term = binom_exact(x, i) * binom_exact(n - x, m - i);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

/// Coefficients of (1-z)^x (1+z)^(n-x), obtained by repeated polynomial
/// multiplication. Entry m is K_m^n(x).
inline std::vector<ExactInteger> kraw_genfunc_row(std::int64_t n, std::int64_t x) {
    if (n < 0 || x < 0 || x > n) {
        throw std::invalid_argument("kraw_genfunc_row: requires 0 <= x <= n");
    }
    std::vector<ExactInteger> poly(static_cast<std::size_t>(n + 1), ExactInteger(0));
    poly[0] = 1;
    std::int64_t degree = 0;
    auto multiply = [&](int sign) {
        for (std::int64_t j = degree + 1; j >= 1; --j) {
            if (sign > 0) {
                poly[j] += poly[j - 1];
            } else {
                poly[j] -= poly[j - 1];
            }
        }
        ++degree;
    };
    for (std::int64_t i = 0; i < x; ++i) {
        multiply(-1);
    }
    for (std::int64_t i = 0; i < n - x; ++i) {
        multiply(+1);
    }
    return poly;
}

/// K_m^n(n/2 + t) from the factorization (1-z)^{2t} (1-z^2)^{n/2-t}:
///   sum_{i <= m/2} (-1)^{i+m} C(n/2 - t, i) C(2t, m - 2i).
/// Negative 2t is accepted; (1-z)^{2t} is then a power series and the
/// binomial with negative top is the generalized one.
inline ExactInteger kraw_shifted(std::int64_t m, std::int64_t n, ShiftValue shift) {
    if (n < 0 || m < 0 || m > n) {
        throw std::invalid_argument("kraw_shifted: requires 0 <= m <= n");
    }
    require_feasible_shift(n, shift);
    const std::int64_t pairs = shift.second_part(n);
    ExactInteger sum = 0;
    for (std::int64_t i = 0; 2 * i <= m; ++i) {
        ExactInteger term = binom_exact(pairs, i) * binom_signed(shift.twoT, m - 2 * i);
        if ((i + m) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

/// Closed interval of real x values.
struct RealInterval {
    double lower = 0.0;
    double upper = 0.0;

    bool contains(double x) const { return lower <= x && x <= upper; }
};

/// [n/2 - sqrt(mn), n/2 + sqrt(mn)]: the smallest root of K_m^n lies above
/// n/2 - sqrt(mn), and roots are symmetric about n/2, so for even m the
/// minimum over [0, n] is attained inside this window.
inline RealInterval levenshtein_window(std::int64_t m, std::int64_t n) {
    if (m < 1 || m > n) {
        throw std::invalid_argument("levenshtein_window: requires 1 <= m <= n");
    }
    const double half = static_cast<double>(n) / 2.0;
    const double radius = std::sqrt(static_cast<double>(m) * static_cast<double>(n));
    return {half - radius, half + radius};
}

/// Edge count of the parity construction with parts n/2 +- t:
/// (C(n,2k) - K_{2k}^n(n/2+t)) / 2.
inline ExactInteger parity_edges_by_krawtchouk(std::int64_t n, std::int64_t k, ShiftValue shift) {
    ExactInteger twice = binom_exact(n, 2 * k) - kraw_shifted(2 * k, n, shift);
    return twice / 2;
}

struct OptimalShiftReport {
    std::int64_t n = 0;
    std::int64_t k = 0;
    /// Every maximizing shift with 2t >= 0, ascending.
    std::vector<ShiftValue> maximizers;
    ExactInteger max_edges = 0;
    /// Set only by a full-range scan: whether the windowed scan agreed.
    bool full_scan = false;
    bool window_confirmed = true;
};

namespace detail {

inline void scan_shift(OptimalShiftReport& report, ShiftValue shift) {
    const ExactInteger edges = parity_edges_by_krawtchouk(report.n, report.k, shift);
    if (report.maximizers.empty() || edges > report.max_edges) {
        report.max_edges = edges;
        report.maximizers.assign(1, shift);
    } else if (edges == report.max_edges) {
        report.maximizers.push_back(shift);
    }
}

inline OptimalShiftReport scan_shifts(std::int64_t n, std::int64_t k, bool whole_range) {
    OptimalShiftReport report;
    report.n = n;
    report.k = k;
    const std::int64_t parity = n % 2;
    std::vector<std::int64_t> candidates;
    if (whole_range) {
        for (std::int64_t twoT = parity; twoT <= n; twoT += 2) {
            candidates.push_back(twoT);
        }
    } else {
        // 2t <= 2 sqrt(2kn), i.e. 4t^2 <= 8kn, plus the two extreme shifts.
        const std::int64_t limit = static_cast<std::int64_t>(isqrt_exact(ExactInteger(8 * k) * n));
        for (std::int64_t twoT = parity; twoT <= std::min(limit, n); twoT += 2) {
            candidates.push_back(twoT);
        }
        candidates.push_back(n);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::int64_t twoT : candidates) {
        scan_shift(report, ShiftValue{twoT});
    }
    return report;
}

}  // namespace detail

/// All shifts 2t >= 0 maximizing the parity construction's edge count. The
/// default scan covers the Levenshtein window plus t = n/2; `full_scan`
/// scans every feasible shift and records whether the window was enough.
inline OptimalShiftReport optimal_shift(std::int64_t n, std::int64_t k, bool full_scan = false) {
    if (k < 1 || n < 2 * k) {
        throw std::invalid_argument("optimal_shift: requires n >= 2k >= 2");
    }
    OptimalShiftReport windowed = detail::scan_shifts(n, k, false);
    if (!full_scan) {
        return windowed;
    }
    OptimalShiftReport full = detail::scan_shifts(n, k, true);
    full.full_scan = true;
    full.window_confirmed =
        full.max_edges == windowed.max_edges && full.maximizers == windowed.maximizers;
    return full;
}

}  // namespace turan
