#pragma once

#include <utility>
#include <vector>

#include "artinlab/factor.hpp"

namespace artinlab {

enum class SearchOutcome { Found, ProvenInfinite, BoundExhausted };

struct RootSearchResult {
    SearchOutcome kind = SearchOutcome::BoundExhausted;
    u64 prime = 0;         // set when kind == Found
    u64 search_bound = 0;  // set when kind == BoundExhausted

    static RootSearchResult found(u64 p) { return {SearchOutcome::Found, p, 0}; }
    static RootSearchResult proven_infinite() { return {SearchOutcome::ProvenInfinite, 0, 0}; }
    static RootSearchResult exhausted(u64 bound) { return {SearchOutcome::BoundExhausted, 0, bound}; }

    bool operator==(const RootSearchResult&) const = default;
};

enum class RootMode { Primitive, Almost };

struct LTestOutcome {
    u64 p = 0;
    u64 ell = 0;
    bool passed = true;  // false iff p == 1 (mod ell) and g^((p-1)/ell) == 1 (mod p)
};

/// Requires p prime and p not dividing g.
LTestOutcome ell_test(i64 g, u64 p, u64 ell);

/// True iff p does not divide g and g generates (Z/pZ)^x.
bool is_primitive_root(i64 g, u64 p);

/// True iff p does not divide g and g generates a subgroup of index <= 2.
bool is_almost_primitive_root(i64 g, u64 p);

/// Pi(x; g): primes p <= x with g a primitive root mod p.
u64 count_Pi(u64 x, i64 g);

/// Pi_0(x; g): primes p <= x, p not dividing g, passing every ell-test
/// for primes ell <= log x. Always >= Pi(x; g).
u64 count_Pi0(u64 x, i64 g);

/// N_d(x; g): primes p <= x, p not dividing g, with p == 1 (mod d) and
/// g^((p-1)/d) == 1 (mod p). Requires d squarefree.
u64 count_Nd(u64 x, i64 g, u64 d);

constexpr u64 kDefaultSearchBound = 1'000'000;

/// Least prime with g a primitive root. ProvenInfinite exactly for the
/// even perfect squares (quadratic residues mod every odd prime, and
/// divisible by 2); BoundExhausted otherwise when nothing <= bound works.
RootSearchResult least_artin_prime(i64 g, u64 search_bound = kDefaultSearchBound);

/// Least prime with g an almost-primitive root. Requires g != 0.
/// Never returns ProvenInfinite.
RootSearchResult least_almost_artin_prime(i64 g, u64 search_bound = kDefaultSearchBound);

/// Batch search over [g_min, g_max]: iterates primes in increasing
/// order, marking unresolved g whose residue lies in the precomputed
/// (almost-)primitive-root residue set mod p. Results are identical to
/// per-g scalar calls and independent of the thread count; output is
/// ordered by g ascending. In Almost mode g == 0 is omitted from the
/// output (the scalar operation rejects it).
std::vector<std::pair<i64, RootSearchResult>> batch_least_artin(
    i64 g_min, i64 g_max, u64 search_bound, RootMode mode, unsigned threads = 0);

/// Residues r mod p whose class consists of (almost-)primitive roots;
/// mask[r] == 1 for qualifying residues. Exposed for experiment code.
std::vector<unsigned char> root_residue_mask(u64 p, RootMode mode);

}  // namespace artinlab
