#pragma once

// Test-only brute oracles, independent of the library code paths.

#include <cstdint>
#include <vector>

namespace testutil {

inline bool is_prime_trial(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline uint64_t pi_trial(uint64_t n) {
    uint64_t count = 0;
    for (uint64_t m = 2; m <= n; ++m) count += is_prime_trial(m);
    return count;
}

struct Factored {
    unsigned big_omega = 0;
    bool squarefree = true;
};

inline Factored omega_trial(uint64_t n) {
    Factored f;
    for (uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.big_omega += e;
        if (e > 1) f.squarefree = false;
    }
    if (n > 1) f.big_omega += 1;
    return f;
}

// one-shot flag sieve, a different code path from the segmented library sieve
inline std::vector<char> prime_flags(uint64_t limit) {
    std::vector<char> flag(limit + 1, 1);
    flag[0] = 0;
    if (limit >= 1) flag[1] = 0;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (flag[i])
            for (uint64_t j = i * i; j <= limit; j += i) flag[j] = 0;
    return flag;
}

}  // namespace testutil
