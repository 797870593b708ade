#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace tqf {

// All counts and point totals are exact integers; predictions reach degrees
// where q^n overflows any fixed-width type.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace tqf
