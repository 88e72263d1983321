#include "artinlab/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "artinlab/prime_table.hpp"

namespace artinlab {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

const PrimeTable& trial_primes() {
    static const PrimeTable table(kTrialLimit);
    return table;
}

// Brent's cycle variant of Pollard rho; n odd composite, not a prime power
// of a trial prime. The parameter c advances deterministically until a
// nontrivial factor appears.
u64 pollard_brent(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y, q = 1;
        const u64 m = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                u64 steps = std::min(m, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (mul_mod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_large(u64 n, std::vector<std::pair<u64, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(n, 1u);
        return;
    }
    u64 d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

}  // namespace

FactoredInteger factorize(i64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    FactoredInteger result;
    result.n = n;
    result.sign = n < 0 ? -1 : 1;
    u64 m = result.abs_value();
    for (u64 p : trial_primes().primes()) {
        if (p * p > m) break;
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            result.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        if (m <= kTrialLimit * kTrialLimit && is_prime_u64(m)) {
            result.factors.emplace_back(m, 1u);
        } else {
            std::vector<std::pair<u64, unsigned>> rest;
            factor_large(m, rest);
            std::sort(rest.begin(), rest.end());
            for (auto& [p, e] : rest) {
                if (!result.factors.empty() && result.factors.back().first == p)
                    result.factors.back().second += e;
                else
                    result.factors.emplace_back(p, e);
            }
        }
    }
    return result;
}

u64 euler_phi(const FactoredInteger& f) {
    if (f.n < 1) throw std::invalid_argument("euler_phi: requires n >= 1");
    u64 phi = 1;
    for (auto [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: requires n >= 1");
    if (n > static_cast<u64>(INT64_MAX)) throw std::invalid_argument("euler_phi: n too large");
    if (n == 1) return 1;
    return euler_phi(factorize(static_cast<i64>(n)));
}

int mobius(const FactoredInteger& f) {
    if (f.n < 1) throw std::invalid_argument("mobius: requires n >= 1");
    for (auto [p, e] : f.factors) {
        (void)p;
        if (e >= 2) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(u64 n) {
    if (n == 0) throw std::invalid_argument("mobius: requires n >= 1");
    if (n > static_cast<u64>(INT64_MAX)) throw std::invalid_argument("mobius: n too large");
    if (n == 1) return 1;
    return mobius(factorize(static_cast<i64>(n)));
}

bool is_squarefree(u64 n) {
    if (n == 0) return false;
    if (n == 1) return true;
    return mobius(factorize(static_cast<i64>(n))) != 0;
}

std::vector<u64> divisors(const FactoredInteger& f) {
    std::vector<u64> divs{1};
    for (auto [p, e] : f.factors) {
        std::size_t base = divs.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

std::vector<std::pair<u64, u64>> divisors_with_phi(const FactoredInteger& f) {
    std::vector<std::pair<u64, u64>> divs{{1, 1}};
    for (auto [p, e] : f.factors) {
        std::size_t base = divs.size();
        u64 pk = 1, phi_pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            phi_pk = (i == 1) ? p - 1 : phi_pk * p;
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.emplace_back(divs[j].first * pk, divs[j].second * phi_pk);
        }
    }
    return divs;
}

u64 multiplicative_order(i64 g, u64 p, const FactoredInteger& p_minus_one) {
    u64 r = reduce_mod(g, p);
    if (r == 0) throw std::domain_error("multiplicative_order: p divides g");
    u64 t = p - 1;
    for (auto [q, e] : p_minus_one.factors) {
        (void)e;
        while (t % q == 0 && mod_pow(static_cast<i64>(r), t / q, p) == 1) t /= q;
    }
    return t;
}

u64 multiplicative_order(i64 g, u64 p) {
    return multiplicative_order(g, p, factorize(static_cast<i64>(p - 1)));
}

}  // namespace artinlab
