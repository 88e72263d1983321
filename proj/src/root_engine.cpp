#include "artinlab/root_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "artinlab/prime_table.hpp"

namespace artinlab {

namespace {

// Prime cutoff "<= log x", boundary included when log x lands on an integer.
u64 log_cutoff(u64 x) {
    return static_cast<u64>(std::floor(std::log(static_cast<double>(x)) + 1e-9));
}

u64 least_primitive_root_mod(u64 p, const FactoredInteger& pm1) {
    if (p == 2) return 1;
    for (u64 a = 2; a < p; ++a) {
        bool ok = true;
        for (auto [q, e] : pm1.factors) {
            (void)e;
            if (mod_pow(static_cast<i64>(a), (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    throw std::logic_error("least_primitive_root_mod: no generator found");
}

bool index_at_most(u64 residue, u64 p, const FactoredInteger& pm1, u64 max_index) {
    u64 order = multiplicative_order(static_cast<i64>(residue), p, pm1);
    return (p - 1) / order <= max_index;
}

}  // namespace

LTestOutcome ell_test(i64 g, u64 p, u64 ell) {
    u64 r = reduce_mod(g, p);
    if (r == 0) throw std::domain_error("ell_test: p divides g");
    LTestOutcome out{p, ell, true};
    if ((p - 1) % ell == 0 && mod_pow(static_cast<i64>(r), (p - 1) / ell, p) == 1)
        out.passed = false;
    return out;
}

bool is_primitive_root(i64 g, u64 p) {
    u64 r = reduce_mod(g, p);
    if (r == 0) return false;
    FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
    return multiplicative_order(static_cast<i64>(r), p, pm1) == p - 1;
}

bool is_almost_primitive_root(i64 g, u64 p) {
    u64 r = reduce_mod(g, p);
    if (r == 0) return false;
    FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
    return index_at_most(r, p, pm1, 2);
}

u64 count_Pi(u64 x, i64 g) {
    if (x < 2) throw std::invalid_argument("count_Pi: x must be >= 2");
    if (g >= -1 && g <= 1) throw std::invalid_argument("count_Pi: requires |g| > 1");
    u64 count = 0;
    PrimeStream stream(x);
    while (u64 p = stream.next()) {
        if (is_primitive_root(g, p)) ++count;
    }
    return count;
}

u64 count_Pi0(u64 x, i64 g) {
    if (x < 3) throw std::invalid_argument("count_Pi0: x must be >= 3");
    u64 ell_max = log_cutoff(x);
    std::vector<u64> ells;
    for_each_prime(ell_max, [&](u64 ell) { ells.push_back(ell); });
    u64 count = 0;
    PrimeStream stream(x);
    while (u64 p = stream.next()) {
        u64 r = reduce_mod(g, p);
        if (r == 0) continue;
        bool passes_all = true;
        for (u64 ell : ells) {
            if ((p - 1) % ell == 0 && mod_pow(static_cast<i64>(r), (p - 1) / ell, p) == 1) {
                passes_all = false;
                break;
            }
        }
        if (passes_all) ++count;
    }
    return count;
}

u64 count_Nd(u64 x, i64 g, u64 d) {
    if (!is_squarefree(d)) throw std::invalid_argument("count_Nd: d must be squarefree");
    u64 count = 0;
    PrimeStream stream(x);
    while (u64 p = stream.next()) {
        u64 r = reduce_mod(g, p);
        if (r == 0) continue;
        if ((p - 1) % d != 0) continue;
        if (mod_pow(static_cast<i64>(r), (p - 1) / d, p) == 1) ++count;
    }
    return count;
}

RootSearchResult least_artin_prime(i64 g, u64 search_bound) {
    if (search_bound < 2) throw std::invalid_argument("least_artin_prime: search_bound must be >= 2");
    if (g == 0) return RootSearchResult::proven_infinite();
    if (g > 1 && g % 2 == 0 && is_perfect_square(g)) return RootSearchResult::proven_infinite();
    PrimeStream stream(search_bound);
    while (u64 p = stream.next()) {
        if (is_primitive_root(g, p)) return RootSearchResult::found(p);
    }
    return RootSearchResult::exhausted(search_bound);
}

RootSearchResult least_almost_artin_prime(i64 g, u64 search_bound) {
    if (g == 0) throw std::invalid_argument("least_almost_artin_prime: g must be nonzero");
    if (search_bound < 2) throw std::invalid_argument("least_almost_artin_prime: search_bound must be >= 2");
    PrimeStream stream(search_bound);
    while (u64 p = stream.next()) {
        if (is_almost_primitive_root(g, p)) return RootSearchResult::found(p);
    }
    return RootSearchResult::exhausted(search_bound);
}

std::vector<unsigned char> root_residue_mask(u64 p, RootMode mode) {
    std::vector<unsigned char> mask(p, 0);
    if (p == 2) {
        mask[1] = 1;
        return mask;
    }
    FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
    u64 rho = least_primitive_root_mod(p, pm1);
    u64 max_gcd = (mode == RootMode::Almost) ? 2 : 1;
    if (p - 1 <= max_gcd) mask[1] = 1;  // rho^0
    u64 cur = 1;
    for (u64 k = 1; k <= p - 2; ++k) {
        cur = mul_mod(cur, rho, p);
        if (std::gcd(k, p - 1) <= max_gcd) mask[cur] = 1;
    }
    return mask;
}

namespace {

constexpr std::size_t kScalarFallback = 64;

struct BatchState {
    i64 g_min;
    std::vector<RootSearchResult> results;
    std::vector<unsigned char> excluded;  // Almost mode: g == 0
};

void mark_round(BatchState& state, std::vector<u64>& unresolved, u64 p,
                const std::vector<unsigned char>& mask, unsigned threads) {
    std::size_t n = unresolved.size();
    unsigned workers = std::max(1u, threads);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, (n + 4095) / 4096));
    std::vector<std::vector<u64>> survivors(workers);
    auto work = [&](unsigned w) {
        std::size_t lo = n * w / workers;
        std::size_t hi = n * (w + 1) / workers;
        auto& out = survivors[w];
        out.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
            u64 idx = unresolved[i];
            u64 r = reduce_mod(state.g_min + static_cast<i64>(idx), p);
            if (mask[r])
                state.results[idx] = RootSearchResult::found(p);
            else
                out.push_back(idx);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    unresolved.clear();
    for (auto& s : survivors) unresolved.insert(unresolved.end(), s.begin(), s.end());
}

}  // namespace

std::vector<std::pair<i64, RootSearchResult>> batch_least_artin(
    i64 g_min, i64 g_max, u64 search_bound, RootMode mode, unsigned threads) {
    if (g_min > g_max) throw std::invalid_argument("batch_least_artin: empty range");
    if (search_bound < 2) throw std::invalid_argument("batch_least_artin: search_bound must be >= 2");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    const u64 n = static_cast<u64>(g_max - g_min) + 1;
    BatchState state{g_min, std::vector<RootSearchResult>(n, RootSearchResult::exhausted(search_bound)),
                     std::vector<unsigned char>(n, 0)};
    std::vector<unsigned char> resolved(n, 0);

    if (g_min <= 0 && 0 <= g_max) {
        u64 idx = static_cast<u64>(-g_min);
        if (mode == RootMode::Primitive) {
            state.results[idx] = RootSearchResult::proven_infinite();
        } else {
            state.excluded[idx] = 1;
        }
        resolved[idx] = 1;
    }
    if (mode == RootMode::Primitive) {
        for (i64 s = 2; s <= 3037000499LL && s * s <= g_max; s += 2) {
            i64 sq = s * s;
            if (sq >= g_min) {
                u64 idx = static_cast<u64>(sq - g_min);
                state.results[idx] = RootSearchResult::proven_infinite();
                resolved[idx] = 1;
            }
        }
    }

    std::vector<u64> unresolved;
    unresolved.reserve(n);
    for (u64 i = 0; i < n; ++i)
        if (!resolved[i]) unresolved.push_back(i);

    PrimeStream stream(search_bound);
    u64 p = 0;
    while (!unresolved.empty() && unresolved.size() > kScalarFallback && (p = stream.next()) != 0) {
        std::vector<unsigned char> mask = root_residue_mask(p, mode);
        mark_round(state, unresolved, p, mask, threads);
    }
    if (!unresolved.empty() && unresolved.size() <= kScalarFallback) {
        // Few stragglers left: test them per prime with order computations
        // instead of enumerating whole residue sets.
        u64 max_index = (mode == RootMode::Almost) ? 2 : 1;
        while (!unresolved.empty() && (p = stream.next()) != 0) {
            FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
            std::vector<u64> still;
            still.reserve(unresolved.size());
            for (u64 idx : unresolved) {
                u64 r = reduce_mod(g_min + static_cast<i64>(idx), p);
                if (r != 0 && index_at_most(r, p, pm1, max_index))
                    state.results[idx] = RootSearchResult::found(p);
                else
                    still.push_back(idx);
            }
            unresolved.swap(still);
        }
    }

    std::vector<std::pair<i64, RootSearchResult>> out;
    out.reserve(n);
    for (u64 i = 0; i < n; ++i) {
        if (state.excluded[i]) continue;
        out.emplace_back(g_min + static_cast<i64>(i), state.results[i]);
    }
    return out;
}

}  // namespace artinlab
