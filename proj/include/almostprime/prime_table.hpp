#pragma once

#include <cstdint>
#include <vector>

namespace almostprime {

// Ascending primes up to a limit, with 1-based indexing (nth(1) == 2).
// Immutable after construction and safe to share across threads.
class PrimeTable {
public:
    // Guard against accidental multi-gigabyte sieves.
    static constexpr uint64_t kMaxLimit = uint64_t{1} << 31;

    explicit PrimeTable(uint64_t limit);

    uint64_t limit() const noexcept { return limit_; }
    uint64_t size() const noexcept { return primes_.size(); }

    uint64_t nth(uint64_t i) const;        // p_i, 1-based
    uint64_t count_leq(uint64_t y) const;  // pi(y) for y <= limit
    uint64_t index_of(uint64_t p) const;   // inverse of nth for stored primes

    const std::vector<uint64_t>& primes() const noexcept { return primes_; }

private:
    uint64_t limit_;
    std::vector<uint64_t> primes_;
};

inline PrimeTable sieve_primes(uint64_t limit) { return PrimeTable(limit); }

}  // namespace almostprime
