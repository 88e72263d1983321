#pragma once

#include <utility>
#include <vector>

#include "artinlab/modular.hpp"

namespace artinlab {

/// Exact factorization of a nonzero 64-bit integer:
/// sign * prod p^e == n, primes strictly increasing, e >= 1.
struct FactoredInteger {
    i64 n = 1;
    int sign = 1;
    std::vector<std::pair<u64, unsigned>> factors;

    u64 abs_value() const { return n < 0 ? 0 - static_cast<u64>(n) : static_cast<u64>(n); }
};

/// Trial division by primes <= 1e6 from a shared table, then
/// Pollard rho (Brent variant) with a deterministic parameter
/// schedule. Exact and reproducible for every nonzero 64-bit n.
FactoredInteger factorize(i64 n);

u64 euler_phi(const FactoredInteger& f);  // requires f.n >= 1
u64 euler_phi(u64 n);
int mobius(const FactoredInteger& f);  // requires f.n >= 1
int mobius(u64 n);

bool is_squarefree(u64 n);

/// All divisors of |f.n|, unsorted.
std::vector<u64> divisors(const FactoredInteger& f);

/// All (d, phi(d)) pairs for divisors d of |f.n|, unsorted.
std::vector<std::pair<u64, u64>> divisors_with_phi(const FactoredInteger& f);

/// Least t >= 1 with g^t == 1 mod p, given the factorization of p-1.
/// Requires p prime and p not dividing g.
u64 multiplicative_order(i64 g, u64 p, const FactoredInteger& p_minus_one);
u64 multiplicative_order(i64 g, u64 p);

}  // namespace artinlab
