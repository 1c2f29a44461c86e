#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "spinor/errors.hpp"

namespace spinor {

using BigInt = boost::multiprecision::cpp_int;

/// Exact power of p dividing v.  v must be nonzero.
inline std::int64_t p_valuation(BigInt v, std::int64_t p) {
    if (v == 0) {
        throw Error("p_valuation: zero has no finite valuation");
    }
    std::int64_t count = 0;
    while (v % p == 0) {
        v /= p;
        ++count;
    }
    return count;
}

inline BigInt big_pow(const BigInt& base, std::int64_t exponent) {
    if (exponent < 0) {
        throw Error("big_pow: negative exponent");
    }
    BigInt result = 1;
    BigInt acc = base;
    std::int64_t e = exponent;
    while (e > 0) {
        if (e & 1) result *= acc;
        acc *= acc;
        e >>= 1;
    }
    return result;
}

inline bool is_small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

} // namespace spinor
