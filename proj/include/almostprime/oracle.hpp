#pragma once

#include <cstdint>
#include <vector>

namespace almostprime {

// Brute-force ground truth, deliberately separate from the formula
// evaluator: a smallest-prime-factor sieve classifies every integer up to
// the limit, and counting is plain enumeration. Not a performance path.
class FactorSieve {
public:
    static constexpr uint64_t kDefaultBudget = 100'000'000;  // largest limit

    explicit FactorSieve(uint64_t limit, uint64_t budget = kDefaultBudget);

    uint64_t limit() const noexcept { return limit_; }

    // smallest prime factor of m, 2 <= m <= limit
    uint64_t spf(uint64_t m) const;

    struct Factorization {
        unsigned big_omega = 0;  // prime factors counted with multiplicity
        bool squarefree = true;
    };
    Factorization omega(uint64_t m) const;

    // 1-based position of spf(m) in the ascending prime sequence
    uint64_t spf_index(uint64_t m) const;

    // #{2 <= m <= x : big_omega(m) == k, square-free if required,
    //                 spf index >= min_index}
    uint64_t brute_count(uint64_t x, unsigned k, bool squarefree,
                         uint64_t min_index = 1) const;

    uint64_t prime_count() const noexcept { return primes_.size(); }

private:
    void check_value(uint64_t m) const;

    uint64_t limit_;
    std::vector<uint32_t> spf_;
    std::vector<uint32_t> primes_;  // own list, independent of prime_backend
};

inline FactorSieve build_factor_sieve(uint64_t limit) { return FactorSieve(limit); }

}  // namespace almostprime
