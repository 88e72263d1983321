#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "artinlab/modular.hpp"

namespace artinlab {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

u64 isqrt_u64(u64 n);
bool is_perfect_square(i64 n);

/// Streams primes in [2, limit] in increasing order from a segmented
/// sieve of Eratosthenes, one bit per odd integer.
class PrimeStream {
public:
    static constexpr std::size_t kDefaultSegmentBytes = 1u << 20;

    explicit PrimeStream(u64 limit, std::size_t segment_bytes = kDefaultSegmentBytes);

    /// Next prime, or 0 once the stream is exhausted.
    u64 next();

    u64 limit() const { return limit_; }

private:
    void fill_buffer();

    u64 limit_;
    u64 segment_span_;   // count of odd integers per segment
    u64 low_;            // first odd value of the next segment
    std::vector<u64> base_;  // odd primes <= sqrt(limit)
    std::vector<u64> words_;
    std::vector<u64> buffer_;
    std::size_t buffer_pos_ = 0;
    bool emitted_two_ = false;
};

/// Applies fn to every prime <= limit in increasing order.
void for_each_prime(u64 limit, const std::function<void(u64)>& fn);

/// Immutable sorted table of all primes <= limit.
class PrimeTable {
public:
    explicit PrimeTable(u64 limit, std::size_t segment_bytes = PrimeStream::kDefaultSegmentBytes);

    u64 limit() const { return limit_; }
    const std::vector<u64>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    /// k-th prime, 1-based (nth_prime(1) == 2).
    u64 nth_prime(std::size_t k) const;

    bool contains(u64 n) const;

    /// Count of primes <= x (requires x <= limit).
    u64 count_below(u64 x) const;

private:
    u64 limit_;
    std::vector<u64> primes_;
};

}  // namespace artinlab
