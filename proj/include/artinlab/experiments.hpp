#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artinlab/root_engine.hpp"

namespace artinlab {

/// One row of an experiment output. empirical_exact holds "num/den"
/// when the empirical side is an exact rational; rel_error is defined
/// only when predicted != 0.
struct ExperimentRecord {
    std::string experiment_id;
    std::vector<std::pair<std::string, std::string>> params;
    double empirical = 0.0;
    std::string empirical_exact;
    double predicted = 0.0;
    double abs_error = 0.0;
    std::optional<double> rel_error;
    std::int64_t runtime_ms = 0;
};

/// Raised when --strict-exhaustion is active and a search ran out of
/// primes below its bound.
struct ExhaustionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentOptions {
    unsigned threads = 0;          // 0: hardware concurrency
    bool strict_exhaustion = false;
};

/// Mean of p_g over g in G with |g| <= x, against the predicted series
/// sum p*delta_p truncated at delta_max_prime. Bound-exhausted g are
/// excluded from the mean and surfaced in params["exhausted_count"].
ExperimentRecord exp_mean_pg(u64 x, u64 search_bound = 100000, u64 delta_max_prime = 10000,
                             const ExperimentOptions& options = {});

/// Mean of min{p_g, x^eta} over g in G, |g| <= x; the cap makes the
/// statistic total, so exhausted searches contribute the cap itself.
/// Requires 0 < eta < 1/2.
ExperimentRecord exp_tamed_mean(u64 x, double eta, u64 delta_max_prime = 10000,
                                const ExperimentOptions& options = {});

/// Per-prime frequency of p_g == p among all integers |g| <= x versus
/// delta_p, for primes p <= max_p.
std::vector<ExperimentRecord> exp_pg_distribution(u64 x, u64 max_p,
                                                  const ExperimentOptions& options = {});

/// Exceptional counts against the unconditional sieve bounds:
///  - #{|g| <= x : p_g > Y} versus the arithmetic large sieve with
///    nu(p) = phi(p-1) for p <= Y, Q = sqrt(N), N = 2*floor(x)+1;
///  - #{|g| <= x : p*_g > y} with y = ((log x)(log log x)^2)^(1/theta)
///    versus Gallagher's larger sieve over D_theta;
///  - the informational count #{|g| <= x : p*_g > log^4 x}.
/// g == 0 is never an (almost-)primitive root and counts as exceptional.
std::vector<ExperimentRecord> exp_exceptional_count(u64 x, double Y, double theta = 0.24,
                                                    const ExperimentOptions& options = {});

/// Ratio Pi(x; g) / (A(g) * pi(x)) with the asymptotic error scale
/// (log log x + log log 2|g|)/log x for context. Entries outside G are
/// skipped with a diagnostic appended to warnings.
std::vector<ExperimentRecord> exp_uniformity_sweep(const std::vector<i64>& g_list,
                                                   const std::vector<u64>& x_list,
                                                   u64 prime_limit = 1'000'000,
                                                   std::vector<std::string>* warnings = nullptr);

/// Convergence trace of L_k/k toward varrho_0.
std::vector<ExperimentRecord> exp_vaughan_convergence(const std::vector<u64>& k_list,
                                                      u64 m_max = 32,
                                                      u64 sigma_prime_limit = 1'000'000);

}  // namespace artinlab
