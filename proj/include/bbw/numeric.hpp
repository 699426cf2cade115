#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bbw {

// All multiplicities, dimensions and Euler characteristics are exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Checked narrowing for JSON emission.
inline std::int64_t to_int64(const Int& v) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
        throw std::overflow_error("integer too large for a JSON number: " + v.str());
    return static_cast<std::int64_t>(v);
}

}  // namespace bbw
