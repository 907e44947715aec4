#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "almostprime/integer_math.hpp"

using almostprime::integer_kth_root;
using almostprime::integer_sqrt;
using almostprime::pow_within;

namespace {

// independent bracket check through 128-bit arithmetic
bool pow_leq_u128(uint64_t b, unsigned k, uint64_t x) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= b;
        if (acc > x) return false;
    }
    return acc <= x;
}

}  // namespace

TEST_CASE("pow_within handles overflow boundaries") {
    CHECK(pow_within(2, 63, UINT64_MAX));
    CHECK_FALSE(pow_within(2, 64, UINT64_MAX));
    CHECK(pow_within(10, 19, UINT64_MAX));
    CHECK_FALSE(pow_within(10, 20, UINT64_MAX));
    CHECK(pow_within(1, 1000, 1));
    CHECK(pow_within(0, 5, 0));
}

TEST_CASE("kth root rejects k = 0") {
    CHECK_THROWS_AS(integer_kth_root(10, 0), std::invalid_argument);
}

TEST_CASE("kth root pinned values") {
    CHECK(integer_kth_root(27, 3) == 3);
    CHECK(integer_kth_root(26, 3) == 2);
    CHECK(integer_kth_root(1'000'000'000'000'000'000ull, 2) == 1'000'000'000ull);
    CHECK(integer_kth_root(0, 5) == 0);
    CHECK(integer_kth_root(1, 7) == 1);
    CHECK(integer_kth_root(12345, 1) == 12345);
    CHECK(integer_kth_root(2, 64) == 1);
    CHECK(integer_kth_root(UINT64_MAX, 2) == 4294967295ull);
    CHECK(integer_kth_root(UINT64_MAX, 63) == 2);
    CHECK(integer_sqrt(999'999) == 999);
    CHECK(integer_sqrt(1'000'000) == 1000);
}

TEST_CASE("kth root bracket invariant, exhaustive to 1e5") {
    uint64_t violations = 0;
    for (unsigned k = 1; k <= 6 && violations == 0; ++k)
        for (uint64_t x = 0; x <= 100'000; ++x) {
            const uint64_t r = integer_kth_root(x, k);
            if (!pow_leq_u128(r, k, x) || pow_leq_u128(r + 1, k, x)) {
                ++violations;
                MESSAGE("bracket broken at x=", x, " k=", k, " r=", r);
                break;
            }
        }
    CHECK(violations == 0);
}

TEST_CASE("kth root boundary exactness at prime powers") {
    const uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 257, 65521, 2147483647ull};
    for (uint64_t p : primes)
        for (unsigned k = 2; k <= 6; ++k) {
            if (!pow_within(p, k, UINT64_MAX)) continue;
            uint64_t pk = 1;
            for (unsigned j = 0; j < k; ++j) pk *= p;
            CHECK(integer_kth_root(pk, k) == p);
            CHECK(integer_kth_root(pk - 1, k) == p - 1);
        }
}

TEST_CASE("kth root random invariant") {
    std::mt19937_64 rng(1729);
    uint64_t violations = 0;
    for (int t = 0; t < 20000 && violations == 0; ++t) {
        const uint64_t x = rng();
        const unsigned k = 1 + static_cast<unsigned>(rng() % 12);
        const uint64_t r = integer_kth_root(x, k);
        if (!pow_leq_u128(r, k, x) || pow_leq_u128(r + 1, k, x)) {
            ++violations;
            MESSAGE("bracket broken at x=", x, " k=", k, " r=", r);
        }
    }
    CHECK(violations == 0);
}
