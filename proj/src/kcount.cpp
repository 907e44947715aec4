#include "almostprime/kcount.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>

#include "almostprime/integer_math.hpp"

namespace almostprime {

void AlmostPrimeCounter::validate(const CountQuery& q) const {
    if (q.k == 0) throw std::invalid_argument("count: k must be >= 1");
    if (q.min_index == 0) throw std::invalid_argument("count: min_index is 1-based");
    if (q.x > engine_.ceiling())
        throw std::out_of_range("count: x=" + std::to_string(q.x) +
                                " exceeds engine ceiling " +
                                std::to_string(engine_.ceiling()));
}

uint64_t AlmostPrimeCounter::recurse(uint64_t x, unsigned k, uint64_t min_index,
                                     bool squarefree) const {
    if (k == 1) {
        // primes p_i <= x with i >= min_index; square-freeness is automatic
        const uint64_t pc = engine_.prime_count(x);
        return pc >= min_index ? pc - min_index + 1 : 0;
    }
    // the smallest factor p_i can be at most x^(1/k), and floor(x/p_i)
    // composes with later divisions: floor(floor(x/a)/b) = floor(x/(ab))
    const uint64_t bound = engine_.prime_count(integer_kth_root(x, k));
    uint64_t total = 0;
    for (uint64_t i = min_index; i <= bound; ++i)
        total += recurse(x / engine_.nth_prime(i), k - 1,
                         squarefree ? i + 1 : i, squarefree);
    return total;
}

uint64_t AlmostPrimeCounter::dispatch(const CountQuery& q, unsigned threads) const {
    validate(q);
    if (q.x > engine_.sieve_limit())
        engine_.prime_count(q.x);  // one quotient pass serves every pi(x/m) below

    if (q.k == 1 || threads <= 1)
        return recurse(q.x, q.k, q.min_index, q.squarefree);

    const uint64_t bound = engine_.prime_count(integer_kth_root(q.x, q.k));
    if (bound < q.min_index) return 0;
    const uint64_t terms = bound - q.min_index + 1;
    const uint64_t workers = std::min<uint64_t>(threads, terms);
    if (workers <= 1) return recurse(q.x, q.k, q.min_index, q.squarefree);

    // contiguous chunks of the outer index range; exact integer partial
    // sums make the total independent of evaluation order
    std::vector<std::future<uint64_t>> parts;
    parts.reserve(workers);
    for (uint64_t w = 0; w < workers; ++w) {
        const uint64_t lo = q.min_index + terms * w / workers;
        const uint64_t hi = q.min_index + terms * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, [this, &q, lo, hi] {
            uint64_t sum = 0;
            for (uint64_t i = lo; i < hi; ++i)
                sum += recurse(q.x / engine_.nth_prime(i), q.k - 1,
                               q.squarefree ? i + 1 : i, q.squarefree);
            return sum;
        }));
    }
    uint64_t total = 0;
    for (auto& part : parts) total += part.get();
    return total;
}

uint64_t AlmostPrimeCounter::count_with_min_index(uint64_t x, unsigned k,
                                                  uint64_t min_index,
                                                  bool squarefree) const {
    return dispatch({k, x, squarefree, min_index}, 1);
}

uint64_t AlmostPrimeCounter::count_k_almost(uint64_t x, unsigned k) const {
    return count_with_min_index(x, k, 1, false);
}

uint64_t AlmostPrimeCounter::count_squarefree_k_almost(uint64_t x, unsigned k) const {
    return count_with_min_index(x, k, 1, true);
}

uint64_t AlmostPrimeCounter::count_semiprime_direct(uint64_t x, bool squarefree) const {
    if (x > engine_.ceiling())
        throw std::out_of_range("count: x=" + std::to_string(x) +
                                " exceeds engine ceiling " +
                                std::to_string(engine_.ceiling()));
    if (x > engine_.sieve_limit()) engine_.prime_count(x);

    const uint64_t bound = engine_.prime_count(integer_sqrt(x));
    uint64_t total = 0;
    for (uint64_t i = 1; i <= bound; ++i) {
        // pi(x/p_i) >= i because p_i <= sqrt(x), so each term is nonnegative
        total += engine_.prime_count(x / engine_.nth_prime(i)) - i + (squarefree ? 0 : 1);
    }
    return total;
}

CountReport AlmostPrimeCounter::run(const CountQuery& query, unsigned threads) const {
    CountReport report;
    report.query = query;
    const PiStats before = engine_.stats();
    const auto start = std::chrono::steady_clock::now();
    report.count = dispatch(query, threads);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    const PiStats after = engine_.stats();
    report.pi_evaluations = after.evaluations - before.evaluations;
    report.cache_hits = after.cache_hits - before.cache_hits;
    return report;
}

std::vector<CountReport> AlmostPrimeCounter::count_table(
    unsigned k, const std::vector<uint64_t>& points, bool squarefree) const {
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i] < points[i - 1])
            throw std::invalid_argument("count_table: points must be ascending");
    std::vector<CountReport> reports;
    reports.reserve(points.size());
    for (uint64_t x : points) reports.push_back(run({k, x, squarefree, 1}));
    return reports;
}

}  // namespace almostprime
