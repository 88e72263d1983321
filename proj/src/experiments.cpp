#include "artinlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "artinlab/artin_constants.hpp"
#include "artinlab/density.hpp"
#include "artinlab/sieve_bounds.hpp"

namespace artinlab {

namespace {

constexpr i64 kChunk = 1 << 19;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string to_str(u64 v) { return std::to_string(v); }
std::string to_str(i64 v) { return std::to_string(v); }
std::string to_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool in_G(i64 g) {
    return (g < -1 || g > 1) && !is_perfect_square(g);
}

void finish_errors(ExperimentRecord& rec) {
    rec.abs_error = std::fabs(rec.empirical - rec.predicted);
    if (rec.predicted != 0.0 && std::isfinite(rec.predicted))
        rec.rel_error = rec.abs_error / std::fabs(rec.predicted);
}

// Applies fn(g, result) over all batch rows for [-x, x] in fixed chunks;
// chunking keeps memory flat and leaves per-g results identical.
template <class Fn>
void scan_range(u64 x, u64 search_bound, RootMode mode, unsigned threads, Fn&& fn) {
    i64 lo = -static_cast<i64>(x);
    i64 hi = static_cast<i64>(x);
    for (i64 base = lo; base <= hi;) {
        i64 top = std::min(hi, base + kChunk - 1);
        for (auto& [g, res] : batch_least_artin(base, top, search_bound, mode, threads)) fn(g, res);
        base = top + 1;
    }
}

}  // namespace

ExperimentRecord exp_mean_pg(u64 x, u64 search_bound, u64 delta_max_prime,
                             const ExperimentOptions& options) {
    if (x < 100) throw std::invalid_argument("exp_mean_pg: x must be >= 100");
    Stopwatch timer;
    u64 sum = 0, g_count = 0, exhausted = 0, max_pg = 0;
    scan_range(x, search_bound, RootMode::Primitive, options.threads, [&](i64 g, const RootSearchResult& res) {
        if (!in_G(g)) return;
        if (res.kind == SearchOutcome::Found) {
            sum += res.prime;
            max_pg = std::max(max_pg, res.prime);
            ++g_count;
        } else {
            ++exhausted;  // ProvenInfinite cannot occur inside G
        }
    });
    if (options.strict_exhaustion && exhausted > 0)
        throw ExhaustionError("exp_mean_pg: " + to_str(exhausted) + " searches exhausted bound " +
                              to_str(search_bound));
    mpq_class exact(sum, 2 * x);
    exact.canonicalize();
    ExperimentRecord rec;
    rec.experiment_id = "mean-pg";
    rec.params = {{"x", to_str(x)},
                  {"search_bound", to_str(search_bound)},
                  {"delta_max_prime", to_str(delta_max_prime)},
                  {"g_count", to_str(g_count)},
                  {"exhausted_count", to_str(exhausted)},
                  {"max_pg", to_str(max_pg)}};
    rec.empirical = to_double(exact);
    rec.empirical_exact = rational_str(exact);
    rec.predicted = mean_pg_predicted(delta_max_prime).approx;
    finish_errors(rec);
    rec.runtime_ms = timer.ms();
    return rec;
}

ExperimentRecord exp_tamed_mean(u64 x, double eta, u64 delta_max_prime,
                                const ExperimentOptions& options) {
    if (x < 100) throw std::invalid_argument("exp_tamed_mean: x must be >= 100");
    if (!(eta > 0.0 && eta < 0.5)) throw std::invalid_argument("exp_tamed_mean: eta must lie in (0, 1/2)");
    Stopwatch timer;
    double cap = std::pow(static_cast<double>(x), eta);
    u64 bound = std::max<u64>(2, static_cast<u64>(std::ceil(cap)));
    u64 int_sum = 0, capped = 0, g_count = 0;
    scan_range(x, bound, RootMode::Primitive, options.threads, [&](i64 g, const RootSearchResult& res) {
        if (!in_G(g)) return;
        ++g_count;
        if (res.kind == SearchOutcome::Found && static_cast<double>(res.prime) <= cap)
            int_sum += res.prime;
        else
            ++capped;  // found above the cap, or exhausted at bound >= cap
    });
    ExperimentRecord rec;
    rec.experiment_id = "tamed-mean";
    rec.params = {{"x", to_str(x)},
                  {"eta", to_str(eta)},
                  {"cap", to_str(cap)},
                  {"delta_max_prime", to_str(delta_max_prime)},
                  {"g_count", to_str(g_count)},
                  {"capped_count", to_str(capped)}};
    rec.empirical = (static_cast<double>(int_sum) + static_cast<double>(capped) * cap) /
                    (2.0 * static_cast<double>(x));
    rec.predicted = mean_pg_predicted(delta_max_prime).approx;
    finish_errors(rec);
    rec.runtime_ms = timer.ms();
    return rec;
}

std::vector<ExperimentRecord> exp_pg_distribution(u64 x, u64 max_p, const ExperimentOptions& options) {
    if (x < 1000) throw std::invalid_argument("exp_pg_distribution: x must be >= 1000");
    if (max_p < 2) throw std::invalid_argument("exp_pg_distribution: max_p must be >= 2");
    Stopwatch timer;
    std::map<u64, u64> counts;
    scan_range(x, max_p, RootMode::Primitive, options.threads, [&](i64, const RootSearchResult& res) {
        if (res.kind == SearchOutcome::Found) ++counts[res.prime];
    });
    DeltaTable table = delta_table(max_p);
    std::vector<ExperimentRecord> rows;
    rows.reserve(table.rows.size());
    for (const DeltaRow& dr : table.rows) {
        u64 count = counts.count(dr.p) ? counts.at(dr.p) : 0;
        mpq_class exact(count, 2 * x);
        exact.canonicalize();
        ExperimentRecord rec;
        rec.experiment_id = "pg-dist";
        rec.params = {{"x", to_str(x)}, {"p", to_str(dr.p)}, {"count", to_str(count)}};
        rec.empirical = to_double(exact);
        rec.empirical_exact = rational_str(exact);
        rec.predicted = to_double(dr.delta);
        finish_errors(rec);
        rows.push_back(std::move(rec));
    }
    for (auto& rec : rows) rec.runtime_ms = timer.ms();
    return rows;
}

std::vector<ExperimentRecord> exp_exceptional_count(u64 x, double Y, double theta,
                                                    const ExperimentOptions& options) {
    if (x < 1000) throw std::invalid_argument("exp_exceptional_count: x must be >= 1000");
    if (!(Y >= 2.0)) throw std::invalid_argument("exp_exceptional_count: Y must be >= 2");
    std::vector<ExperimentRecord> records;
    const u64 N = 2 * x + 1;

    {
        Stopwatch timer;
        u64 found = 0;
        u64 bound = std::max<u64>(2, static_cast<u64>(std::floor(Y)));
        scan_range(x, bound, RootMode::Primitive, options.threads, [&](i64, const RootSearchResult& res) {
            if (res.kind == SearchOutcome::Found) ++found;
        });
        u64 exceed = N - found;
        LargeSieveProblem problem;
        problem.M = -static_cast<i64>(x) - 1;
        problem.N = N;
        problem.Q = std::sqrt(static_cast<double>(N));
        for_each_prime(bound, [&](u64 p) { problem.nu.emplace_back(p, euler_phi(p - 1)); });
        double bound_value = large_sieve_bound(problem);
        ExperimentRecord rec;
        rec.experiment_id = "pg-exceptional";
        rec.empirical = static_cast<double>(exceed);
        rec.empirical_exact = to_str(exceed);
        rec.predicted = bound_value;
        finish_errors(rec);
        rec.params = {{"x", to_str(x)},
                      {"Y", to_str(Y)},
                      {"N", to_str(N)},
                      {"Q", to_str(problem.Q)},
                      {"dominated", rec.empirical <= rec.predicted ? "true" : "false"}};
        rec.runtime_ms = timer.ms();
        records.push_back(std::move(rec));
    }

    {
        Stopwatch timer;
        double logx = std::log(static_cast<double>(x));
        double y = std::pow(logx * std::pow(std::log(logx), 2.0), 1.0 / theta);
        double z = std::pow(y, 1.0 - theta);
        double log4x = std::pow(logx, 4.0);
        u64 bound = std::max<u64>(2, static_cast<u64>(std::floor(std::max(y, log4x))));
        u64 exceed_y = 1, exceed_log4 = 1;  // g == 0: never an almost-primitive root
        scan_range(x, bound, RootMode::Almost, options.threads, [&](i64, const RootSearchResult& res) {
            bool above_y = true, above_log4 = true;
            if (res.kind == SearchOutcome::Found) {
                above_y = static_cast<double>(res.prime) > y;
                above_log4 = static_cast<double>(res.prime) > log4x;
            }
            if (above_y) ++exceed_y;
            if (above_log4) ++exceed_log4;
        });

        PrimeTable table(static_cast<u64>(std::ceil(y)) + 1);
        std::vector<u64> D = build_D_theta(y, theta, table);
        LargerSieveProblem problem;
        problem.N = N;
        problem.nu_bar.reserve(D.size());
        for (u64 p : D) problem.nu_bar.emplace_back(p, nu_bar_omega(p, z));
        std::optional<double> bound_value = larger_sieve_bound(problem);

        ExperimentRecord rec;
        rec.experiment_id = "pgstar-exceptional";
        rec.empirical = static_cast<double>(exceed_y);
        rec.empirical_exact = to_str(exceed_y);
        rec.predicted = bound_value.value_or(std::numeric_limits<double>::quiet_NaN());
        finish_errors(rec);
        rec.params = {{"x", to_str(x)},
                      {"theta", to_str(theta)},
                      {"y", to_str(y)},
                      {"z", to_str(z)},
                      {"D_size", to_str(static_cast<u64>(D.size()))},
                      {"dominated", !bound_value        ? "unavailable"
                                    : rec.empirical <= *bound_value ? "true"
                                                                    : "false"}};
        rec.runtime_ms = timer.ms();
        records.push_back(std::move(rec));

        ExperimentRecord info;
        info.experiment_id = "pgstar-log4x";
        info.empirical = static_cast<double>(exceed_log4);
        info.empirical_exact = to_str(exceed_log4);
        info.predicted = std::numeric_limits<double>::quiet_NaN();  // no effective constant
        info.abs_error = std::numeric_limits<double>::quiet_NaN();
        info.params = {{"x", to_str(x)},
                       {"threshold", to_str(log4x)},
                       {"note", "informational; includes g=0"}};
        info.runtime_ms = timer.ms();
        records.push_back(std::move(info));
    }
    return records;
}

std::vector<ExperimentRecord> exp_uniformity_sweep(const std::vector<i64>& g_list,
                                                   const std::vector<u64>& x_list, u64 prime_limit,
                                                   std::vector<std::string>* warnings) {
    for (u64 x : x_list)
        if (x < 100) throw std::invalid_argument("exp_uniformity_sweep: each x must be >= 100");
    Stopwatch timer;
    std::vector<u64> xs(x_list);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<i64> gs;
    for (i64 g : g_list) {
        if (!in_G(g)) {
            if (warnings)
                warnings->push_back("g=" + to_str(g) + " outside domain (A(g) undefined); skipped");
            continue;
        }
        if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
    }
    std::map<u64, double> A_by_h;  // A0 depends only on h
    std::map<i64, double> A_of_g;
    for (i64 g : gs) {
        PowerDecomposition dec = decompose(g);
        if (!A_by_h.count(dec.h)) A_by_h[dec.h] = artin_A0(dec.h, prime_limit).approx;
        A_of_g[g] = A_by_h[dec.h] * artin_A1(dec).approx;
    }

    u64 x_max = xs.empty() ? 0 : xs.back();
    std::map<i64, std::vector<u64>> pi_xg;  // per g, counts at each checkpoint
    std::vector<u64> pi_x(xs.size(), 0);
    std::vector<u64> run_count(gs.size(), 0);
    u64 primes_seen = 0;
    std::size_t next_cp = 0;
    if (!gs.empty() && x_max >= 2) {
        for (i64 g : gs) pi_xg[g] = {};
        PrimeStream stream(x_max);
        while (u64 p = stream.next()) {
            while (next_cp < xs.size() && p > xs[next_cp]) {
                for (std::size_t i = 0; i < gs.size(); ++i) pi_xg[gs[i]].push_back(run_count[i]);
                pi_x[next_cp] = primes_seen;
                ++next_cp;
            }
            FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
            for (std::size_t i = 0; i < gs.size(); ++i) {
                u64 r = reduce_mod(gs[i], p);
                if (r != 0 && multiplicative_order(static_cast<i64>(r), p, pm1) == p - 1)
                    ++run_count[i];
            }
            ++primes_seen;
        }
        while (next_cp < xs.size()) {
            for (std::size_t i = 0; i < gs.size(); ++i) pi_xg[gs[i]].push_back(run_count[i]);
            pi_x[next_cp] = primes_seen;
            ++next_cp;
        }
    }

    std::vector<ExperimentRecord> rows;
    for (i64 g : gs) {
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            u64 x = xs[xi];
            double A = A_of_g[g];
            double denom = A * static_cast<double>(pi_x[xi]);
            double ratio = denom > 0 ? static_cast<double>(pi_xg[g][xi]) / denom : 0.0;
            double logx = std::log(static_cast<double>(x));
            double scale =
                (std::log(logx) + std::log(std::log(2.0 * std::fabs(static_cast<double>(g))))) / logx;
            ExperimentRecord rec;
            rec.experiment_id = "uniformity-sweep";
            rec.params = {{"g", to_str(g)},
                          {"x", to_str(x)},
                          {"pi_xg", to_str(pi_xg[g][xi])},
                          {"A_g", to_str(A)},
                          {"pi_x", to_str(pi_x[xi])},
                          {"error_scale", to_str(scale)}};
            rec.empirical = ratio;
            rec.predicted = 1.0;
            finish_errors(rec);
            rec.runtime_ms = timer.ms();
            rows.push_back(std::move(rec));
        }
    }
    return rows;
}

std::vector<ExperimentRecord> exp_vaughan_convergence(const std::vector<u64>& k_list, u64 m_max,
                                                      u64 sigma_prime_limit) {
    if (k_list.empty()) throw std::invalid_argument("exp_vaughan_convergence: empty k list");
    Stopwatch timer;
    std::vector<u64> ks(k_list);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.front() == 0) throw std::invalid_argument("exp_vaughan_convergence: k must be >= 1");
    u64 k_max = ks.back();
    double kd = static_cast<double>(std::max<u64>(k_max, 6));
    u64 limit = static_cast<u64>(kd * (std::log(kd) + std::log(std::log(kd))) * 1.2) + 100;
    PrimeTable table(limit);
    while (table.size() < k_max) table = PrimeTable(table.limit() * 2);

    double rho0 = varrho_exponent(m_max, sigma_prime_limit).approx;
    std::vector<ExperimentRecord> rows;
    mpq_class product(1);
    std::size_t next = 0;
    for (u64 k = 1; k <= k_max && next < ks.size(); ++k) {
        u64 r = table.nth_prime(k);
        mpq_class w(euler_phi(r - 1), r);
        w.canonicalize();
        product *= (1 - w);
        if (k == ks[next]) {
            double Lk = -log_mpq(product);
            ExperimentRecord rec;
            rec.experiment_id = "vaughan-convergence";
            rec.params = {{"k", to_str(k)},
                          {"r_k", to_str(r)},
                          {"L_k", to_str(Lk)},
                          {"ratio", to_str(Lk / static_cast<double>(k) / rho0)}};
            rec.empirical = Lk / static_cast<double>(k);
            rec.predicted = rho0;
            finish_errors(rec);
            rows.push_back(std::move(rec));
            ++next;
        }
    }
    for (auto& rec : rows) rec.runtime_ms = timer.ms();
    return rows;
}

}  // namespace artinlab
