#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace monopole {

// Exact integer used for divisor coefficients, firing scripts and Smith
// normal form entries. Coefficients on long paths grow quadratically, so
// fixed-width arithmetic is not an option at the API level.
using Int = boost::multiprecision::cpp_int;

inline bool fits_i64(const Int& v) {
    return v >= std::numeric_limits<long long>::min() &&
           v <= std::numeric_limits<long long>::max();
}

inline long long to_i64(const Int& v) {
    if (!fits_i64(v)) {
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    }
    return v.convert_to<long long>();
}

}  // namespace monopole
