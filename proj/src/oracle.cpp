#include "almostprime/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "almostprime/errors.hpp"

namespace almostprime {

FactorSieve::FactorSieve(uint64_t limit, uint64_t budget) : limit_(limit) {
    if (limit < 2)
        throw std::invalid_argument("build_factor_sieve: limit must be >= 2");
    if (limit > budget || limit > std::numeric_limits<uint32_t>::max())
        throw ResourceLimitError("build_factor_sieve: limit " + std::to_string(limit) +
                                 " exceeds memory budget " + std::to_string(budget));

    spf_.assign(limit + 1, 0);
    for (uint64_t i = 2; i <= limit_; ++i) {
        if (spf_[i] != 0) continue;  // composite, already assigned
        primes_.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i; j <= limit_; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
    }
}

void FactorSieve::check_value(uint64_t m) const {
    if (m < 2)
        throw std::invalid_argument("FactorSieve: values below 2 have no prime factors");
    if (m > limit_)
        throw std::out_of_range("FactorSieve: " + std::to_string(m) +
                                " exceeds sieve limit " + std::to_string(limit_));
}

uint64_t FactorSieve::spf(uint64_t m) const {
    check_value(m);
    return spf_[m];
}

FactorSieve::Factorization FactorSieve::omega(uint64_t m) const {
    check_value(m);
    Factorization f;
    while (m > 1) {
        const uint32_t p = spf_[m];
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.big_omega += e;
        if (e > 1) f.squarefree = false;
    }
    return f;
}

uint64_t FactorSieve::spf_index(uint64_t m) const {
    check_value(m);
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), spf_[m]);
    return static_cast<uint64_t>(it - primes_.begin()) + 1;
}

uint64_t FactorSieve::brute_count(uint64_t x, unsigned k, bool squarefree,
                                  uint64_t min_index) const {
    if (k == 0) throw std::invalid_argument("brute_count: k must be >= 1");
    if (min_index == 0) throw std::invalid_argument("brute_count: min_index is 1-based");
    if (x > limit_)
        throw std::out_of_range("brute_count: " + std::to_string(x) +
                                " exceeds sieve limit " + std::to_string(limit_));
    if (min_index > primes_.size()) return 0;
    const uint32_t threshold = primes_[min_index - 1];

    uint64_t count = 0;
    for (uint64_t m = 2; m <= x; ++m) {
        if (spf_[m] < threshold) continue;
        const Factorization f = omega(m);
        if (f.big_omega == k && (f.squarefree || !squarefree)) ++count;
    }
    return count;
}

}  // namespace almostprime
