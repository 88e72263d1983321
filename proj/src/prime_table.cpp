#include "artinlab/prime_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace artinlab {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Witness set exact for n < 3.3e24, so for all u64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = mod_pow(static_cast<i64>(a % n), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    u64 r = isqrt_u64(static_cast<u64>(n));
    return static_cast<i64>(r * r) == n;
}

PrimeStream::PrimeStream(u64 limit, std::size_t segment_bytes) : limit_(limit) {
    if (segment_bytes < 64) segment_bytes = 64;
    segment_span_ = static_cast<u64>(segment_bytes) * 8;
    low_ = 3;
    if (limit_ >= 3) {
        u64 sq = isqrt_u64(limit_);
        std::vector<bool> comp(sq + 1, false);
        for (u64 i = 3; i <= sq; i += 2) {
            if (!comp[i]) {
                base_.push_back(i);
                for (u64 j = i * i; j <= sq; j += 2 * i) comp[j] = true;
            }
        }
        words_.resize((segment_span_ + 63) / 64);
    }
}

void PrimeStream::fill_buffer() {
    buffer_.clear();
    buffer_pos_ = 0;
    if (!emitted_two_) {
        emitted_two_ = true;
        if (limit_ >= 2) buffer_.push_back(2);
        if (!buffer_.empty() && limit_ < 3) return;
    }
    while (buffer_.empty() && low_ <= limit_) {
        // segment covers odd values low_, low_+2, ..., low_ + 2*(segment_span_-1)
        u64 high = low_ + 2 * (segment_span_ - 1);
        if (high > limit_ || high < low_) high = limit_;
        std::fill(words_.begin(), words_.end(), ~0ull);
        for (u64 p : base_) {
            if (p * p > high) break;
            u64 start = p * p;
            if (start < low_) {
                u64 k = (low_ - start + 2 * p - 1) / (2 * p);
                start += 2 * p * k;
            }
            for (u64 v = start; v <= high; v += 2 * p) {
                u64 idx = (v - low_) >> 1;
                words_[idx >> 6] &= ~(1ull << (idx & 63));
            }
        }
        u64 nbits = (high - low_) / 2 + 1;
        for (u64 w = 0; w < (nbits + 63) / 64; ++w) {
            u64 bits = words_[w];
            if (w == (nbits - 1) / 64) {
                u64 used = nbits - w * 64;
                if (used < 64) bits &= (1ull << used) - 1;
            }
            while (bits) {
                u64 b = static_cast<u64>(std::countr_zero(bits));
                buffer_.push_back(low_ + 2 * (w * 64 + b));
                bits &= bits - 1;
            }
        }
        low_ = high + 2;
        if (high == limit_) low_ = limit_ + 1 + (limit_ & 1);  // force termination
    }
}

u64 PrimeStream::next() {
    if (buffer_pos_ >= buffer_.size()) {
        if (emitted_two_ && low_ > limit_) return 0;
        fill_buffer();
        if (buffer_.empty()) return 0;
    }
    return buffer_[buffer_pos_++];
}

void for_each_prime(u64 limit, const std::function<void(u64)>& fn) {
    PrimeStream stream(limit);
    while (u64 p = stream.next()) fn(p);
}

PrimeTable::PrimeTable(u64 limit, std::size_t segment_bytes) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
    double est = limit < 20 ? 10.0 : 1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
    primes_.reserve(static_cast<std::size_t>(est));
    PrimeStream stream(limit, segment_bytes);
    while (u64 p = stream.next()) primes_.push_back(p);
}

u64 PrimeTable::nth_prime(std::size_t k) const {
    if (k == 0 || k > primes_.size()) throw std::invalid_argument("PrimeTable: nth_prime index out of range");
    return primes_[k - 1];
}

bool PrimeTable::contains(u64 n) const {
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

u64 PrimeTable::count_below(u64 x) const {
    if (x > limit_) throw std::invalid_argument("PrimeTable: count_below beyond table limit");
    return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

}  // namespace artinlab
