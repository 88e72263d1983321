#pragma once

#include <vector>

#include "artinlab/decompose.hpp"
#include "artinlab/density.hpp"
#include "artinlab/prime_table.hpp"

namespace artinlab {

/// prod_{q | h} (1 - 1/(q-1)) * prod_{q !| h} (1 - 1/(q(q-1))) over primes q.
/// Truncated at prime_limit; primes dividing h beyond the limit enter
/// exactly; the tail of the second product is covered by error_bound.
/// Requires h odd, prime_limit >= 100.
DensityValue artin_A0(u64 h, u64 prime_limit);

/// Exact rational correction factor: 1 unless g1 == 1 (mod 4), in which
/// case 1 - mu(|g1|) * prod_{q|h, q|g1} 1/(q-2) * prod_{q!|h, q|g1} 1/(q^2-q-1).
/// Always in [2/3, 2]. Requires a non-square decomposition.
DensityValue artin_A1(const PowerDecomposition& dec);

/// A(g) = A0(g) * A1(g). Requires |g| > 1 and g not a perfect square.
DensityValue artin_A(i64 g, u64 prime_limit);

/// 2 when 2*g1 divides d and g1 == 1 (mod 4), else 1. Requires d squarefree.
int epsilon_d(u64 d, const PowerDecomposition& dec);

/// Degree of the d-th cyclotomic-Kummer extension attached to g:
/// d*phi(d) / (epsilon(d) * gcd(d, h)). Requires d squarefree.
u64 kummer_degree(u64 d, const PowerDecomposition& dec);

/// sum_{d <= d_limit squarefree} mu(d) / kummer_degree(d), with a
/// heuristic tail estimate sum_{d > d_limit} h/(d*phi(d)) as error_bound.
DensityValue hooley_sum_truncated(const PowerDecomposition& dec, u64 d_limit);

struct DeltaRow {
    u64 p;
    mpq_class delta;          // weight(p)/p * prod_{r<p}(1 - weight(r)/r)
    mpq_class delta_sum;      // running sum of delta
    mpq_class p_delta_sum;    // running sum of p * delta
};

/// Exact rational least-root density table. At every prefix,
/// delta_sum + prod_{r <= p}(1 - weight(r)/r) == 1 identically.
struct DeltaTable {
    u64 max_prime = 0;
    std::vector<DeltaRow> rows;
    mpq_class residual_product;  // over all primes <= max_prime
};

/// weight(p) = phi(p-1): density of integers whose least primitive-root
/// prime equals p.
DeltaTable delta_table(u64 max_prime);

/// weight(p) = F(p): almost-primitive-root analogue.
DeltaTable delta_star_table(u64 max_prime);

/// Count of residues mod p generating a subgroup of index <= 2:
/// F(p) = [p > 2] * phi((p-1)/2) + phi(p-1).
u64 F_almost(u64 p);

/// Partial sum of p * delta_p up to max_prime. The tail beyond the
/// cutoff has no proved effective bound; error_bound is the documented
/// heuristic majorant max_prime^2 * residual_product.
DensityValue mean_pg_predicted(u64 max_prime);

/// prod_p (1 - (p^m - (p-1)^m)/(p^(m+1) - p^m)), truncated at prime_limit.
/// Satisfies 0 < sigma_m < 2^-m.
DensityValue sigma_m(u64 m, u64 prime_limit);

/// varrho_0 = sum_{m <= m_max} sigma_m / m, with per-term truncation
/// errors plus the geometric tail sum_{m > m_max} 2^-m/m folded into
/// error_bound.
DensityValue varrho_exponent(u64 m_max, u64 prime_limit);

/// varrho = exp(varrho_0) > 1.
DensityValue varrho(u64 m_max, u64 prime_limit);

struct VaughanProduct {
    mpq_class product;  // prod_{r <= r_k} (1 - phi(r-1)/r), exact
    double L_k;         // -log of the product
};

/// Requires the k-th prime to lie within the table.
VaughanProduct vaughan_product(u64 k, const PrimeTable& table);

/// prod over odd primes q <= log x of (1 - 1/(q-1)); empty product is 1.
/// Requires x >= e^e.
DensityValue tilde_A0(double x);

/// 1 - [g1 == 1 mod 4 and g1 | W] * prod_{q | g1} (-1)/(q-2), where W is
/// the product of odd primes <= log x. Exact rational.
DensityValue tilde_A1(const PowerDecomposition& dec, double x);

/// Twin prime constant prod_{q > 2} (1 - 1/(q-1)^2), truncated.
DensityValue twin_prime_C2(u64 prime_limit);

}  // namespace artinlab
