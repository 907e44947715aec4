#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace almostprime {

// Whether base^k <= limit, evaluated without overflowing.
constexpr bool pow_within(uint64_t base, unsigned k, uint64_t limit) {
    uint64_t acc = 1;
    for (unsigned j = 0; j < k; ++j) {
        if (base != 0 && acc > limit / base) return false;
        acc *= base;
    }
    return acc <= limit;
}

// Largest r with r^k <= x. A floating-point estimate only seeds the search;
// the result comes from exact integer comparisons.
inline uint64_t integer_kth_root(uint64_t x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
    if (k == 1 || x < 2) return x;
    if (k >= 64) return 1;  // x < 2^64 <= 2^k, so the root is 1
    uint64_t r = static_cast<uint64_t>(std::pow(static_cast<double>(x), 1.0 / k));
    if (r == 0) r = 1;
    while (!pow_within(r, k, x)) --r;
    while (pow_within(r + 1, k, x)) ++r;
    return r;
}

inline uint64_t integer_sqrt(uint64_t x) { return integer_kth_root(x, 2); }

}  // namespace almostprime
