#pragma once

#include <cstdint>
#include <stdexcept>

namespace artinlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// base^exponent mod modulus by square-and-multiply; modulus >= 2.
/// Negative bases are reduced into [0, modulus) first.
u64 mod_pow(i64 base, u64 exponent, u64 modulus);

/// Full Kronecker symbol (a/n), defined for all integers including
/// n <= 0 and even n. Values in {-1, 0, 1}.
int kronecker(i64 a, i64 n);

inline u64 reduce_mod(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

}  // namespace artinlab
