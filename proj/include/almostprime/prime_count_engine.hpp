#pragma once

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "almostprime/prime_table.hpp"

namespace almostprime {

struct PiStats {
    uint64_t evaluations = 0;
    uint64_t cache_hits = 0;
};

// Exact pi(y) for y up to a configured ceiling.
//
// Two tiers: y up to the sieve limit (~sqrt(ceiling)) is answered from a
// prefix table over the sieved primes. Larger y runs a divisor-grouping
// sieve over the value groups floor(y/n), which costs O(y^(3/4)) and yields
// pi at every quotient of y in a single pass; all of those are cached.
// The nested counting sums only ever ask for pi(floor(x/m)) once the top
// bound x has been queried, so the whole recursion is served by one pass.
//
// Safe for concurrent queries: the tables are immutable, cache insertions
// are idempotent, and statistics are atomic.
class PrimeCountEngine {
public:
    static constexpr uint64_t kDefaultCeiling = 1'000'000'000'000ull;  // 1e12
    static constexpr uint64_t kMaxCeiling = 1'000'000'000'000'000ull;  // 1e15
    static constexpr uint64_t kMinSieveLimit = 1024;
    static constexpr uint64_t kMaxCacheEntries = 1u << 22;

    explicit PrimeCountEngine(uint64_t ceiling = kDefaultCeiling);

    uint64_t ceiling() const noexcept { return ceiling_; }
    uint64_t sieve_limit() const noexcept { return table_.limit(); }
    const PrimeTable& table() const noexcept { return table_; }

    uint64_t prime_count(uint64_t y) const;  // pi(y), y <= ceiling
    uint64_t nth_prime(uint64_t i) const { return table_.nth(i); }

    PiStats stats() const noexcept;
    void reset_stats() noexcept;

private:
    uint64_t quotient_sieve(uint64_t n) const;

    uint64_t ceiling_;
    PrimeTable table_;
    std::vector<uint32_t> pi_prefix_;  // pi(y) for y <= sieve limit

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<uint64_t, uint64_t> cache_;
    mutable std::atomic<uint64_t> evaluations_{0};
    mutable std::atomic<uint64_t> cache_hits_{0};
};

}  // namespace almostprime
