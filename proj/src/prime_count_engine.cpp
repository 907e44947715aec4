#include "almostprime/prime_count_engine.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "almostprime/errors.hpp"
#include "almostprime/integer_math.hpp"

namespace almostprime {

namespace {

uint64_t checked_sieve_limit(uint64_t ceiling) {
    if (ceiling < 2)
        throw std::invalid_argument("PrimeCountEngine: ceiling must be >= 2");
    if (ceiling > PrimeCountEngine::kMaxCeiling)
        throw ResourceLimitError("PrimeCountEngine: ceiling " + std::to_string(ceiling) +
                                 " exceeds supported maximum " +
                                 std::to_string(PrimeCountEngine::kMaxCeiling));
    return std::max(integer_sqrt(ceiling), PrimeCountEngine::kMinSieveLimit);
}

}  // namespace

PrimeCountEngine::PrimeCountEngine(uint64_t ceiling)
    : ceiling_(ceiling), table_(checked_sieve_limit(ceiling)) {
    pi_prefix_.assign(table_.limit() + 1, 0);
    for (uint64_t p : table_.primes()) pi_prefix_[p] = 1;
    for (size_t i = 1; i < pi_prefix_.size(); ++i) pi_prefix_[i] += pi_prefix_[i - 1];
}

uint64_t PrimeCountEngine::prime_count(uint64_t y) const {
    if (y > ceiling_)
        throw std::out_of_range("prime_count: " + std::to_string(y) +
                                " exceeds engine ceiling " + std::to_string(ceiling_));
    evaluations_.fetch_add(1, std::memory_order_relaxed);
    if (y <= table_.limit()) return pi_prefix_[y];
    {
        std::shared_lock lock(mutex_);
        const auto it = cache_.find(y);
        if (it != cache_.end()) {
            cache_hits_.fetch_add(1, std::memory_order_relaxed);
            return it->second;
        }
    }
    return quotient_sieve(y);
}

// Prime counting over the value groups floor(n/d) (Lucy_Hedgehog's method).
// S(v) starts as the count of integers in [2, v]; each prime p removes the
// numbers whose smallest prime factor is p, tracked only at the O(sqrt n)
// distinct quotient values. After all p <= sqrt(n), S(v) = pi(v).
uint64_t PrimeCountEngine::quotient_sieve(uint64_t n) const {
    const uint64_t s = integer_sqrt(n);
    std::vector<uint64_t> small(s + 1);  // S(v) for v = 0..s
    std::vector<uint64_t> large(s + 1);  // S(n/d) for d = 1..s
    for (uint64_t v = 1; v <= s; ++v) small[v] = v - 1;
    for (uint64_t d = 1; d <= s; ++d) large[d] = n / d - 1;

    for (uint64_t p : table_.primes()) {
        if (p > s) break;
        const uint64_t p2 = p * p;
        const uint64_t removed_below = small[p - 1];  // pi(p - 1)
        const uint64_t dmax = std::min(s, n / p2);
        for (uint64_t d = 1; d <= dmax; ++d) {
            const uint64_t dp = d * p;
            large[d] -= (dp <= s ? large[dp] : small[n / dp]) - removed_below;
        }
        for (uint64_t v = s; v >= p2; --v)
            small[v] -= small[v / p] - removed_below;
    }

    {
        std::unique_lock lock(mutex_);
        if (cache_.size() + s > kMaxCacheEntries) cache_.clear();
        cache_.reserve(cache_.size() + s);
        for (uint64_t d = 1; d <= s; ++d) {
            const uint64_t q = n / d;
            if (q <= table_.limit()) break;  // served by the prefix table
            cache_.emplace(q, large[d]);
        }
    }
    return large[1];
}

PiStats PrimeCountEngine::stats() const noexcept {
    return {evaluations_.load(std::memory_order_relaxed),
            cache_hits_.load(std::memory_order_relaxed)};
}

void PrimeCountEngine::reset_stats() noexcept {
    evaluations_.store(0, std::memory_order_relaxed);
    cache_hits_.store(0, std::memory_order_relaxed);
}

}  // namespace almostprime
