// Command-line front end: constants, least-root searches, counting
// functions, sieve bounds, and the experiment harness, with CSV/JSON
// output envelopes.

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artinlab/artin_constants.hpp"
#include "artinlab/envelope.hpp"
#include "artinlab/experiments.hpp"
#include "artinlab/root_engine.hpp"
#include "artinlab/sieve_bounds.hpp"
#include "artinlab/version.hpp"

namespace {

using namespace artinlab;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string kind_str(SearchOutcome kind) {
    switch (kind) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::ProvenInfinite: return "proven-infinite";
        case SearchOutcome::BoundExhausted: return "bound-exhausted";
    }
    return "?";
}

Cell exact_cell(const DensityValue& dv) {
    return dv.exact ? Cell::of(rational_str(*dv.exact)) : Cell::null();
}

void add_search_row(OutputEnvelope& env, i64 g, const RootSearchResult& res, u64 bound) {
    env.rows.push_back({Cell::of(g), Cell::of(kind_str(res.kind)),
                        res.kind == SearchOutcome::Found ? Cell::of(res.prime) : Cell::null(),
                        Cell::of(bound)});
}

std::string record_param(const ExperimentRecord& rec, const std::string& key) {
    for (const auto& [k, v] : rec.params)
        if (k == key) return v;
    return {};
}

void record_to_row(OutputEnvelope& env, const ExperimentRecord& rec,
                   const std::vector<std::string>& param_cols) {
    std::vector<Cell> row{Cell::of(rec.experiment_id)};
    for (const std::string& name : param_cols) {
        bool found = false;
        for (const auto& [k, v] : rec.params) {
            if (k == name) {
                row.push_back(Cell::of(v));
                found = true;
                break;
            }
        }
        if (!found) row.push_back(Cell::null());
    }
    row.push_back(Cell::of(rec.empirical));
    row.push_back(rec.empirical_exact.empty() ? Cell::null() : Cell::of(rec.empirical_exact));
    row.push_back(Cell::of(rec.predicted));
    row.push_back(Cell::of(rec.abs_error));
    row.push_back(rec.rel_error ? Cell::of(*rec.rel_error) : Cell::null());
    env.rows.push_back(std::move(row));
}

void set_experiment_columns(OutputEnvelope& env, const std::vector<std::string>& param_cols) {
    env.columns = {"experiment"};
    env.columns.insert(env.columns.end(), param_cols.begin(), param_cols.end());
    for (const char* c : {"empirical", "empirical_exact", "predicted", "abs_error", "rel_error"})
        env.columns.push_back(c);
}

struct GlobalOptions {
    std::string format = "json";
    std::string output;
    unsigned threads = 0;
    long long seed = 0;  // reserved; deterministic commands ignore it
    bool strict_exhaustion = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"artinlab - Artin densities, least primitive-root primes, and sieve bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    GlobalOptions opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("ARTINLAB_FORMAT");
    app.add_option("--output", opt.output, "write atomically to this path instead of stdout")
        ->envname("ARTINLAB_OUTPUT");
    app.add_option("--threads", opt.threads, "worker threads (0 = auto); changes runtime only")
        ->envname("ARTINLAB_THREADS");
    app.add_option("--seed", opt.seed, "reserved for future sampling commands; accepted and ignored")
        ->envname("ARTINLAB_SEED");
    app.add_flag("--strict-exhaustion", opt.strict_exhaustion,
                 "treat bound-exhausted searches as errors (exit 3)")
        ->envname("ARTINLAB_STRICT_EXHAUSTION");

    OutputEnvelope env;
    bool exhausted_seen = false;

    // ---- constant ----------------------------------------------------
    auto* c = app.add_subcommand("constant", "evaluate density constants");
    c->fallthrough();
    struct {
        i64 g = 0;
        bool has_g = false, c2 = false, varrho_flag = false, ta0 = false, ta1 = false;
        u64 sigma = 0;
        double x = 0.0;
        u64 prime_limit = 10'000'000;
        u64 m_max = 30;
    } co;
    auto* cg = c->add_option("--g", co.g, "evaluate A0(g), A1(g), A(g)");
    c->add_flag("--c2", co.c2, "twin prime constant");
    auto* csig = c->add_option("--sigma", co.sigma, "moment product sigma_m for this m");
    c->add_flag("--varrho", co.varrho_flag, "decay constant varrho = exp(sum sigma_m/m)");
    c->add_flag("--tilde-a0", co.ta0, "tilde A0 at --x");
    c->add_flag("--tilde-a1", co.ta1, "tilde A1(g) at --x (needs --g; suppresses the A rows)");
    auto* cx = c->add_option("--x", co.x, "range parameter for the tilde constants");
    c->add_option("--prime-limit", co.prime_limit, "truncation point for infinite products");
    c->add_option("--m-max", co.m_max, "moments summed for varrho");
    c->callback([&] {
        co.has_g = cg->count() > 0;
        env.command = "constant";
        env.columns = {"name", "approx", "error_bound", "exact"};
        env.prime_table_limit = co.prime_limit;
        env.params = {{"prime_limit", std::to_string(co.prime_limit)}};
        bool any = false;
        auto push = [&](const std::string& name, const DensityValue& dv) {
            env.rows.push_back({Cell::of(name), Cell::of(dv.approx), Cell::of(dv.error_bound),
                                exact_cell(dv)});
            any = true;
        };
        if (co.has_g) env.params.emplace_back("g", std::to_string(co.g));
        if (co.has_g && !co.ta1) {
            PowerDecomposition dec = decompose(co.g);
            push("A0", artin_A0(dec.h, co.prime_limit));
            push("A1", artin_A1(dec));
            push("A", artin_A(co.g, co.prime_limit));
        }
        if (co.c2) push("C2", twin_prime_C2(co.prime_limit));
        if (csig->count() > 0) push("sigma_" + std::to_string(co.sigma), sigma_m(co.sigma, co.prime_limit));
        if (co.varrho_flag) {
            push("varrho0", varrho_exponent(co.m_max, co.prime_limit));
            push("varrho", varrho(co.m_max, co.prime_limit));
        }
        if (co.ta0 || co.ta1) {
            if (cx->count() == 0) throw CLI::ValidationError("constant", "--tilde-a0/--tilde-a1 need --x");
            env.params.emplace_back("x", fmt_double(co.x));
            if (co.ta0) push("tilde_A0", tilde_A0(co.x));
            if (co.ta1) {
                if (!co.has_g) throw CLI::ValidationError("constant", "--tilde-a1 needs --g");
                push("tilde_A1", tilde_A1(decompose(co.g), co.x));
            }
        }
        if (!any) throw CLI::ValidationError("constant", "select at least one constant");
    });

    // ---- pg / pg-range ------------------------------------------------
    auto* pg = app.add_subcommand("pg", "least prime with g a (almost-)primitive root");
    pg->fallthrough();
    struct {
        i64 g = 0;
        bool almost = false;
        u64 bound = kDefaultSearchBound;
    } po;
    pg->add_option("--g", po.g, "integer g")->required();
    pg->add_flag("--almost", po.almost, "index <= 2 instead of primitive");
    pg->add_option("--search-bound", po.bound, "largest prime tried");
    pg->callback([&] {
        env.command = "pg";
        env.columns = {"g", "kind", "p", "search_bound"};
        env.params = {{"g", std::to_string(po.g)},
                      {"almost", po.almost ? "true" : "false"},
                      {"search_bound", std::to_string(po.bound)}};
        env.prime_table_limit = po.bound;
        RootSearchResult res =
            po.almost ? least_almost_artin_prime(po.g, po.bound) : least_artin_prime(po.g, po.bound);
        if (res.kind == SearchOutcome::BoundExhausted) exhausted_seen = true;
        add_search_row(env, po.g, res, po.bound);
    });

    auto* pr = app.add_subcommand("pg-range", "batch least-root search over a g interval");
    pr->fallthrough();
    struct {
        i64 g_min = 0, g_max = 0;
        bool almost = false;
        u64 bound = kDefaultSearchBound;
    } ro;
    pr->add_option("--g-min", ro.g_min)->required();
    pr->add_option("--g-max", ro.g_max)->required();
    pr->add_flag("--almost", ro.almost);
    pr->add_option("--search-bound", ro.bound);
    pr->callback([&] {
        env.command = "pg-range";
        env.columns = {"g", "kind", "p", "search_bound"};
        env.params = {{"g_min", std::to_string(ro.g_min)},
                      {"g_max", std::to_string(ro.g_max)},
                      {"almost", ro.almost ? "true" : "false"},
                      {"search_bound", std::to_string(ro.bound)}};
        env.prime_table_limit = ro.bound;
        auto rows = batch_least_artin(ro.g_min, ro.g_max, ro.bound,
                                      ro.almost ? RootMode::Almost : RootMode::Primitive, opt.threads);
        for (auto& [g, res] : rows) {
            if (res.kind == SearchOutcome::BoundExhausted) exhausted_seen = true;
            add_search_row(env, g, res, ro.bound);
        }
        if (ro.almost && ro.g_min <= 0 && 0 <= ro.g_max)
            env.warnings.push_back("g=0 omitted: almost-primitive search undefined at 0");
    });

    // ---- count-pi -----------------------------------------------------
    auto* cp = app.add_subcommand("count-pi", "Pi(x; g), Pi_0(x; g), or N_d(x; g)");
    cp->fallthrough();
    struct {
        u64 x = 0;
        i64 g = 0;
        bool pi0 = false;
        u64 d = 0;
    } cpo;
    cp->add_option("--x", cpo.x)->required();
    cp->add_option("--g", cpo.g)->required();
    cp->add_flag("--pi0", cpo.pi0, "count primes passing all ell-tests for ell <= log x");
    auto* cpd = cp->add_option("--d", cpo.d, "count primes failing the d-test (N_d)");
    cp->callback([&] {
        env.command = "count-pi";
        env.columns = {"x", "g", "variant", "d", "count"};
        env.params = {{"x", std::to_string(cpo.x)}, {"g", std::to_string(cpo.g)}};
        env.prime_table_limit = cpo.x;
        std::string variant = "pi";
        u64 count = 0;
        if (cpd->count() > 0) {
            variant = "nd";
            count = count_Nd(cpo.x, cpo.g, cpo.d);
        } else if (cpo.pi0) {
            variant = "pi0";
            count = count_Pi0(cpo.x, cpo.g);
        } else {
            count = count_Pi(cpo.x, cpo.g);
        }
        env.rows.push_back({Cell::of(cpo.x), Cell::of(cpo.g), Cell::of(variant),
                            cpd->count() > 0 ? Cell::of(cpo.d) : Cell::null(), Cell::of(count)});
    });

    // ---- delta ----------------------------------------------------------
    auto* dl = app.add_subcommand("delta", "exact least-root density table");
    dl->fallthrough();
    struct {
        u64 max_prime = 0;
        bool star = false;
    } dlo;
    dl->add_option("--max-prime", dlo.max_prime)->required();
    dl->add_flag("--star", dlo.star, "almost-primitive variant");
    dl->callback([&] {
        env.command = "delta";
        env.columns = {"p", "delta_p_num", "delta_p_den", "partial_sum_num", "partial_sum_den",
                       "p_delta_p_float"};
        env.params = {{"max_prime", std::to_string(dlo.max_prime)},
                      {"star", dlo.star ? "true" : "false"}};
        env.prime_table_limit = dlo.max_prime;
        DeltaTable table = dlo.star ? delta_star_table(dlo.max_prime) : delta_table(dlo.max_prime);
        for (const DeltaRow& r : table.rows) {
            env.rows.push_back({Cell::of(r.p), Cell::of(r.delta.get_num().get_str()),
                                Cell::of(r.delta.get_den().get_str()),
                                Cell::of(r.delta_sum.get_num().get_str()),
                                Cell::of(r.delta_sum.get_den().get_str()),
                                Cell::of(to_double(r.delta * mpq_class(r.p)))});
        }
    });

    // ---- mean-predicted -------------------------------------------------
    auto* mp = app.add_subcommand("mean-predicted", "partial sum of p * delta_p");
    mp->fallthrough();
    struct {
        u64 max_prime = 10'000;
    } mpo;
    mp->add_option("--max-prime", mpo.max_prime);
    mp->callback([&] {
        env.command = "mean-predicted";
        env.columns = {"max_prime", "approx", "error_bound"};
        env.params = {{"max_prime", std::to_string(mpo.max_prime)}};
        env.prime_table_limit = mpo.max_prime;
        DensityValue dv = mean_pg_predicted(mpo.max_prime);
        env.rows.push_back({Cell::of(mpo.max_prime), Cell::of(dv.approx), Cell::of(dv.error_bound)});
        env.warnings.push_back("error_bound is a heuristic tail majorant, not a proved bound");
    });

    // ---- count-s --------------------------------------------------------
    auto* cs = app.add_subcommand("count-s", "primes with (g/p) = -1 and p-1 coprime to W");
    cs->fallthrough();
    struct {
        u64 x = 0;
        i64 g = 0;
    } cso;
    cs->add_option("--x", cso.x)->required();
    cs->add_option("--g", cso.g)->required();
    cs->callback([&] {
        env.command = "count-s";
        env.columns = {"x", "g", "count", "predicted", "li_x", "ratio"};
        env.params = {{"x", std::to_string(cso.x)}, {"g", std::to_string(cso.g)}};
        env.prime_table_limit = cso.x;
        SetSCount s = count_S(cso.x, cso.g);
        double ratio = s.predicted != 0.0 ? static_cast<double>(s.count) / s.predicted : 0.0;
        env.rows.push_back({Cell::of(cso.x), Cell::of(cso.g), Cell::of(s.count),
                            Cell::of(s.predicted), Cell::of(s.li_x), Cell::of(ratio)});
    });

    // ---- sieve-bound ------------------------------------------------------
    auto* sb = app.add_subcommand("sieve-bound", "unconditional sieve upper bounds");
    sb->require_subcommand(1);
    sb->fallthrough();
    auto* sbl = sb->add_subcommand("large", "Montgomery's arithmetic large sieve");
    sbl->fallthrough();
    struct {
        u64 N = 0;
        i64 M = 0;
        double Q = 0.0;
        double phi_limit = 0.0;
    } lo;
    sbl->add_option("--N", lo.N, "interval length")->required();
    sbl->add_option("--M", lo.M, "interval start offset (interval is [M+1, M+N])");
    auto* sblq = sbl->add_option("--Q", lo.Q, "sieve level (default sqrt(N))");
    sbl->add_option("--phi-limit", lo.phi_limit,
                    "distinguish nu(p) = phi(p-1) classes for primes p <= this");
    sbl->callback([&] {
        env.command = "sieve-bound large";
        env.columns = {"N", "M", "Q", "phi_limit", "J", "bound"};
        LargeSieveProblem problem;
        problem.N = lo.N;
        problem.M = lo.M;
        problem.Q = sblq->count() > 0 ? lo.Q : std::sqrt(static_cast<double>(lo.N));
        if (lo.phi_limit >= 2.0)
            for_each_prime(static_cast<u64>(lo.phi_limit),
                           [&](u64 p) { problem.nu.emplace_back(p, euler_phi(p - 1)); });
        env.params = {{"N", std::to_string(lo.N)},
                      {"M", std::to_string(lo.M)},
                      {"Q", fmt_double(problem.Q)},
                      {"phi_limit", fmt_double(lo.phi_limit)}};
        env.prime_table_limit = static_cast<u64>(lo.phi_limit);
        double J = large_sieve_J(problem);
        env.rows.push_back({Cell::of(lo.N), Cell::of(lo.M), Cell::of(problem.Q),
                            Cell::of(lo.phi_limit), Cell::of(J), Cell::of(large_sieve_bound(problem))});
    });
    auto* sbg = sb->add_subcommand("larger", "Gallagher's larger sieve over D_theta");
    sbg->fallthrough();
    struct {
        u64 x = 10'000;
        double theta = 0.24;
    } go;
    sbg->add_option("--x", go.x, "interval is [-x, x]");
    sbg->add_option("--theta", go.theta, "smoothness exponent in (0, 1)");
    sbg->callback([&] {
        env.command = "sieve-bound larger";
        env.columns = {"x", "theta", "y", "z", "D_size", "N", "bound", "available"};
        double logx = std::log(static_cast<double>(go.x));
        double y = std::pow(logx * std::pow(std::log(logx), 2.0), 1.0 / go.theta);
        double z = std::pow(y, 1.0 - go.theta);
        u64 N = 2 * go.x + 1;
        PrimeTable table(static_cast<u64>(std::ceil(y)) + 1);
        std::vector<u64> D = build_D_theta(y, go.theta, table);
        LargerSieveProblem problem;
        problem.N = N;
        for (u64 p : D) problem.nu_bar.emplace_back(p, nu_bar_omega(p, z));
        std::optional<double> bound = larger_sieve_bound(problem);
        env.params = {{"x", std::to_string(go.x)}, {"theta", fmt_double(go.theta)}};
        env.prime_table_limit = table.limit();
        env.rows.push_back({Cell::of(go.x), Cell::of(go.theta), Cell::of(y), Cell::of(z),
                            Cell::of(static_cast<u64>(D.size())), Cell::of(N),
                            bound ? Cell::of(*bound) : Cell::null(),
                            Cell::of(std::string(bound ? "true" : "false"))});
    });

    // ---- exp ---------------------------------------------------------------
    auto* ex = app.add_subcommand("exp", "experiment harness");
    ex->require_subcommand(1);
    ex->fallthrough();
    ExperimentOptions exp_options;

    auto* em = ex->add_subcommand("mean", "average of p_g over |g| <= x");
    em->fallthrough();
    struct {
        u64 x = 0;
        u64 bound = 100'000;
        u64 delta_max_prime = 10'000;
    } emo;
    em->add_option("--x", emo.x)->required();
    em->add_option("--search-bound", emo.bound);
    em->add_option("--delta-max-prime", emo.delta_max_prime);
    em->callback([&] {
        env.command = "exp mean";
        exp_options.threads = opt.threads;
        exp_options.strict_exhaustion = opt.strict_exhaustion;
        ExperimentRecord rec = exp_mean_pg(emo.x, emo.bound, emo.delta_max_prime, exp_options);
        env.params = rec.params;
        env.prime_table_limit = emo.bound;
        set_experiment_columns(env, {"x"});
        record_to_row(env, rec, {"x"});
        std::string exhausted = record_param(rec, "exhausted_count");
        if (exhausted != "0")
            env.warnings.push_back(exhausted + " searches exhausted the bound and were excluded");
    });

    auto* et = ex->add_subcommand("tamed", "average of min{p_g, x^eta}");
    et->fallthrough();
    struct {
        u64 x = 0;
        double eta = 0.4;
        u64 delta_max_prime = 10'000;
    } eto;
    et->add_option("--x", eto.x)->required();
    et->add_option("--eta", eto.eta)->required();
    et->add_option("--delta-max-prime", eto.delta_max_prime);
    et->callback([&] {
        env.command = "exp tamed";
        exp_options.threads = opt.threads;
        ExperimentRecord rec = exp_tamed_mean(eto.x, eto.eta, eto.delta_max_prime, exp_options);
        env.params = rec.params;
        env.prime_table_limit = eto.x;
        set_experiment_columns(env, {"x", "eta"});
        record_to_row(env, rec, {"x", "eta"});
    });

    auto* ed = ex->add_subcommand("dist", "frequency of p_g = p versus delta_p");
    ed->fallthrough();
    struct {
        u64 x = 0;
        u64 max_p = 100;
    } edo;
    ed->add_option("--x", edo.x)->required();
    ed->add_option("--max-p", edo.max_p);
    ed->callback([&] {
        env.command = "exp dist";
        exp_options.threads = opt.threads;
        auto rows = exp_pg_distribution(edo.x, edo.max_p, exp_options);
        env.params = {{"x", std::to_string(edo.x)}, {"max_p", std::to_string(edo.max_p)}};
        env.prime_table_limit = edo.max_p;
        env.columns = {"p", "count", "empirical", "delta_p", "abs_error"};
        for (const auto& rec : rows) {
            env.rows.push_back({Cell::of(static_cast<u64>(std::stoull(rec.params[1].second))),
                                Cell::of(static_cast<u64>(std::stoull(rec.params[2].second))),
                                Cell::of(rec.empirical), Cell::of(rec.predicted),
                                Cell::of(rec.abs_error)});
        }
    });

    auto* ee = ex->add_subcommand("exceptional", "counts of large p_g / p*_g versus sieve bounds");
    ee->fallthrough();
    struct {
        u64 x = 0;
        double Y = 0.0;
        double theta = 0.24;
    } eeo;
    ee->add_option("--x", eeo.x)->required();
    auto* eey = ee->add_option("--Y", eeo.Y, "p_g threshold (default log^2 N)");
    ee->add_option("--theta", eeo.theta);
    ee->callback([&] {
        env.command = "exp exceptional";
        exp_options.threads = opt.threads;
        double N = 2.0 * static_cast<double>(eeo.x) + 1.0;
        double Y = eey->count() > 0 ? eeo.Y : std::pow(std::log(N), 2.0);
        auto rows = exp_exceptional_count(eeo.x, Y, eeo.theta, exp_options);
        env.params = {{"x", std::to_string(eeo.x)},
                      {"Y", fmt_double(Y)},
                      {"theta", fmt_double(eeo.theta)}};
        set_experiment_columns(env, {"threshold", "dominated", "D_size"});
        for (const auto& rec : rows) {
            ExperimentRecord r = rec;
            // normalize the threshold column name across the three records
            for (auto& [k, v] : r.params) {
                if (k == "Y" || k == "y") k = "threshold";
            }
            record_to_row(env, r, {"threshold", "dominated", "D_size"});
        }
    });

    auto* es = ex->add_subcommand("sweep", "Pi(x; g) / (A(g) pi(x)) ratios");
    es->fallthrough();
    struct {
        std::vector<i64> gs;
        std::vector<u64> xs;
        u64 prime_limit = 1'000'000;
    } eso;
    es->add_option("--g", eso.gs)->required()->expected(-1);
    es->add_option("--x", eso.xs)->required()->expected(-1);
    es->add_option("--prime-limit", eso.prime_limit);
    es->callback([&] {
        env.command = "exp sweep";
        auto rows = exp_uniformity_sweep(eso.gs, eso.xs, eso.prime_limit, &env.warnings);
        env.params = {{"prime_limit", std::to_string(eso.prime_limit)}};
        env.prime_table_limit = eso.prime_limit;
        env.columns = {"g", "x", "pi_xg", "A_g", "pi_x", "ratio", "error_scale"};
        for (const auto& rec : rows) {
            env.rows.push_back({Cell::of(static_cast<i64>(std::stoll(rec.params[0].second))),
                                Cell::of(static_cast<u64>(std::stoull(rec.params[1].second))),
                                Cell::of(static_cast<u64>(std::stoull(rec.params[2].second))),
                                Cell::of(std::stod(rec.params[3].second)),
                                Cell::of(static_cast<u64>(std::stoull(rec.params[4].second))),
                                Cell::of(rec.empirical),
                                Cell::of(std::stod(rec.params[5].second))});
        }
    });

    auto* ev = ex->add_subcommand("vaughan", "L_k / k convergence toward varrho_0");
    ev->fallthrough();
    struct {
        std::vector<u64> ks;
        u64 m_max = 32;
        u64 prime_limit = 1'000'000;
    } evo;
    ev->add_option("--k", evo.ks)->required()->expected(-1);
    ev->add_option("--m-max", evo.m_max);
    ev->add_option("--prime-limit", evo.prime_limit);
    ev->callback([&] {
        env.command = "exp vaughan";
        auto rows = exp_vaughan_convergence(evo.ks, evo.m_max, evo.prime_limit);
        env.params = {{"m_max", std::to_string(evo.m_max)},
                      {"prime_limit", std::to_string(evo.prime_limit)}};
        env.prime_table_limit = evo.prime_limit;
        env.columns = {"k", "r_k", "L_k", "L_k_over_k", "varrho0", "ratio"};
        for (const auto& rec : rows) {
            env.rows.push_back({Cell::of(static_cast<u64>(std::stoull(rec.params[0].second))),
                                Cell::of(static_cast<u64>(std::stoull(rec.params[1].second))),
                                Cell::of(std::stod(rec.params[2].second)), Cell::of(rec.empirical),
                                Cell::of(rec.predicted), Cell::of(std::stod(rec.params[3].second))});
        }
    });

    auto start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ExhaustionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt.strict_exhaustion && exhausted_seen) {
        std::cerr << "error: search bound exhausted under --strict-exhaustion\n";
        return 3;
    }
    env.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    try {
        write_output(env, opt.format, opt.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
