#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "almostprime/prime_count_engine.hpp"

namespace almostprime {

// One counting problem: integers m <= x with exactly k prime factors
// (with multiplicity), optionally square-free, whose smallest prime
// factor has 1-based index >= min_index.
struct CountQuery {
    unsigned k = 1;
    uint64_t x = 0;
    bool squarefree = false;
    uint64_t min_index = 1;
};

struct CountReport {
    CountQuery query;
    uint64_t count = 0;
    uint64_t pi_evaluations = 0;
    uint64_t cache_hits = 0;
    std::chrono::nanoseconds elapsed{0};
};

// Evaluates the nested-sum counting formulas as a recursion over the
// smallest prime factor: a qualifying m decomposes as p_i * q where q has
// one factor fewer and lies in [p_i, x/p_i] (strictly above p_i in the
// square-free case). Each summand therefore reduces the bound to
// floor(x/p_i) and raises the minimum index; the base case counts primes.
// Every bound stays <= x, so nothing can overflow.
class AlmostPrimeCounter {
public:
    explicit AlmostPrimeCounter(const PrimeCountEngine& engine) : engine_(engine) {}

    uint64_t count_with_min_index(uint64_t x, unsigned k, uint64_t min_index,
                                  bool squarefree) const;
    uint64_t count_k_almost(uint64_t x, unsigned k) const;
    uint64_t count_squarefree_k_almost(uint64_t x, unsigned k) const;

    // Literal single-sum evaluation for k == 2, kept as an independent
    // cross-check of the recursion.
    uint64_t count_semiprime_direct(uint64_t x, bool squarefree) const;

    // Full evaluation with timing and backend statistics. threads > 1
    // partitions the outer summation; the total is bit-identical to the
    // sequential result.
    CountReport run(const CountQuery& query, unsigned threads = 1) const;

    std::vector<CountReport> count_table(unsigned k, const std::vector<uint64_t>& points,
                                         bool squarefree) const;

    const PrimeCountEngine& engine() const noexcept { return engine_; }

private:
    uint64_t dispatch(const CountQuery& query, unsigned threads) const;
    uint64_t recurse(uint64_t x, unsigned k, uint64_t min_index, bool squarefree) const;
    void validate(const CountQuery& query) const;

    const PrimeCountEngine& engine_;
};

}  // namespace almostprime
