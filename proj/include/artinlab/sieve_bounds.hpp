#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artinlab/decompose.hpp"
#include "artinlab/prime_table.hpp"

namespace artinlab {

/// Montgomery's arithmetic large sieve: nu(p) residue classes mod p are
/// distinguished for primes p <= Q; integers in [M+1, M+N] avoiding all
/// of them number at most (N + Q^2) / J.
struct LargeSieveProblem {
    i64 M = 0;
    u64 N = 0;
    double Q = 0.0;
    std::vector<std::pair<u64, u64>> nu;  // (p, nu(p)); omitted primes have nu == 0
};

/// J = sum_{n <= Q squarefree} prod_{p | n} nu(p)/(p - nu(p)); the n = 1
/// term makes J >= 1. Throws if some nu(p) >= p.
double large_sieve_J(const LargeSieveProblem& problem);

/// (N + Q^2) / J, inflated by 1 + 1e-9 so domination checks cannot fail
/// on rounding.
double large_sieve_bound(const LargeSieveProblem& problem);

/// Gallagher's larger sieve: all but nu_bar(d) classes mod d removed for
/// each prime power d in D.
struct LargerSieveProblem {
    u64 N = 0;
    std::vector<std::pair<u64, u64>> nu_bar;  // (d, nu_bar(d) >= 1), d a prime power
};

/// (sum Lambda(d) - log N) / (sum Lambda(d)/nu_bar(d) - log N) when the
/// denominator is positive; nullopt otherwise.
std::optional<double> larger_sieve_bound(const LargerSieveProblem& problem);

/// D = { primes p : 3 < p <= y, least prime factor of (p-1)/2 > y^theta }.
std::vector<u64> build_D_theta(double y, double theta, const PrimeTable& table);

/// nu_bar(p) = 1 + sum over divisors f <= z of p-1 of phi(f). Counts the
/// kept classes: 0 mod p plus elements of multiplicative order <= z.
u64 nu_bar_omega(u64 p, double z);

/// Logarithmic integral int_2^x dt/log t by adaptive Simpson quadrature.
double li(double x, double abs_tol = 1e-6);

struct SetSCount {
    u64 count = 0;       // primes p <= x with (g/p) = -1 and gcd(p-1, W) = 1
    double predicted = 0.0;  // (tilde_A0 * tilde_A1 / 2) * Li(x)
    double li_x = 0.0;
};

/// Requires x >= 10 and |g| > 1. W is the product of odd primes <= log x.
SetSCount count_S(u64 x, i64 g);

}  // namespace artinlab
