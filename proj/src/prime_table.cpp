#include "almostprime/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "almostprime/errors.hpp"
#include "almostprime/integer_math.hpp"

namespace almostprime {

namespace {
constexpr uint64_t kSegmentSize = uint64_t{1} << 18;
}

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
    if (limit > kMaxLimit)
        throw ResourceLimitError("sieve_primes: limit " + std::to_string(limit) +
                                 " exceeds the sieve budget " + std::to_string(kMaxLimit));

    // small primes up to sqrt(limit) seed the segmented pass
    const uint64_t root = integer_sqrt(limit);
    std::vector<char> is_prime(root + 1, 1);
    std::vector<uint64_t> base;
    for (uint64_t i = 2; i <= root; ++i) {
        if (!is_prime[i]) continue;
        base.push_back(i);
        for (uint64_t j = i * i; j <= root; j += i) is_prime[j] = 0;
    }

    // pi(x) < 1.26 x / ln x for x >= 17
    primes_.reserve(static_cast<size_t>(1.26 * static_cast<double>(limit) /
                                        std::log(static_cast<double>(limit))) + 16);

    std::vector<char> segment(kSegmentSize);
    for (uint64_t lo = 2; lo <= limit; lo += kSegmentSize) {
        const uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
        std::fill(segment.begin(), segment.end(), 1);
        for (uint64_t p : base) {
            if (p * p > hi) break;
            const uint64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
            for (uint64_t j = first; j <= hi; j += p) segment[j - lo] = 0;
        }
        for (uint64_t n = lo; n <= hi; ++n)
            if (segment[n - lo]) primes_.push_back(n);
    }
}

uint64_t PrimeTable::nth(uint64_t i) const {
    if (i == 0) throw std::invalid_argument("nth_prime: indexing is 1-based (p_1 = 2)");
    if (i > primes_.size())
        throw std::out_of_range("nth_prime: index " + std::to_string(i) +
                                " exceeds table of " + std::to_string(primes_.size()) +
                                " primes");
    return primes_[i - 1];
}

uint64_t PrimeTable::count_leq(uint64_t y) const {
    if (y > limit_)
        throw std::out_of_range("count_leq: " + std::to_string(y) +
                                " exceeds sieve limit " + std::to_string(limit_));
    return static_cast<uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), y) - primes_.begin());
}

uint64_t PrimeTable::index_of(uint64_t p) const {
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
        throw std::invalid_argument("index_of: " + std::to_string(p) +
                                    " is not a prime in the table");
    return static_cast<uint64_t>(it - primes_.begin()) + 1;
}

}  // namespace almostprime
