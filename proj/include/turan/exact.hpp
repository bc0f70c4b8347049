#pragma once

/// @file
/// Exact integer and rational arithmetic plus the binomial primitives every
/// counting formula in the library is built from.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

/// Arbitrary-precision signed integer. Krawtchouk values and edge counts
/// leave the 64-bit range long before the interesting values of n.
using ExactInteger = boost::multiprecision::cpp_int;

/// Exact rational, used where a closed form divides (e.g. by 48 or 12).
using ExactRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const ExactInteger& value) { return value.str(); }

/// C(n, k) for 0 <= k; zero when k > n.
inline ExactInteger binom_exact(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("binom_exact: arguments must be nonnegative");
    }
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    ExactInteger result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result is C(n-k+i-1, i-1) here, so the division is exact.
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Generalized binomial with an arbitrary integer upper argument:
/// top (top-1) ... (top-k+1) / k!. For top < 0 this is (-1)^k C(k-top-1, k).
inline ExactInteger binom_signed(std::int64_t top, std::int64_t k) {
    if (k < 0) {
        return 0;
    }
    if (top >= 0) {
        return binom_exact(top, k);
    }
    ExactInteger magnitude = binom_exact(k - top - 1, k);
    return (k % 2 == 0) ? magnitude : ExactInteger(-magnitude);
}

/// x (x-1) ... (x-k+1) / k! for real x. Exact at integer x while the values
/// stay below 2^53, since every partial product is itself a binomial.
inline double binom_real(double x, int k) {
    if (k < 0) {
        throw std::invalid_argument("binom_real: k must be nonnegative");
    }
    double result = 1.0;
    for (int i = 0; i < k; ++i) {
        result = result * (x - i) / (i + 1);
    }
    return result;
}

/// floor(sqrt(value)) for a nonnegative exact integer.
inline ExactInteger isqrt_exact(const ExactInteger& value) {
    if (value < 0) {
        throw std::invalid_argument("isqrt_exact: negative argument");
    }
    return boost::multiprecision::sqrt(value);
}

}  // namespace turan
