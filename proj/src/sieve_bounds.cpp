#include "artinlab/sieve_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "artinlab/artin_constants.hpp"
#include "artinlab/modular.hpp"

namespace artinlab {

namespace {

constexpr double kUpwardSlack = 1.0 + 1e-9;

// Depth-first enumeration of squarefree n <= Q over primes with nu >= 1,
// accumulating prod nu(p)/(p - nu(p)).
void J_recurse(const std::vector<std::pair<u64, u64>>& active, std::size_t start, u64 n, double Q,
               double weight, double& sum) {
    for (std::size_t i = start; i < active.size(); ++i) {
        auto [p, nu] = active[i];
        if (static_cast<double>(n) * static_cast<double>(p) > Q) break;
        double w = weight * static_cast<double>(nu) / static_cast<double>(p - nu);
        sum += w;
        J_recurse(active, i + 1, n * p, Q, w, sum);
    }
}

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double (*f)(double), double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double inv_log(double t) {
    return 1.0 / std::log(t);
}

}  // namespace

double large_sieve_J(const LargeSieveProblem& problem) {
    if (problem.Q < 1.0) throw std::invalid_argument("large_sieve_J: Q must be >= 1");
    std::vector<std::pair<u64, u64>> active;
    for (auto [p, nu] : problem.nu) {
        if (nu >= p) throw std::invalid_argument("large_sieve_J: nu(p) must be < p");
        if (nu >= 1 && static_cast<double>(p) <= problem.Q) active.emplace_back(p, nu);
    }
    std::sort(active.begin(), active.end());
    double sum = 1.0;  // n = 1
    J_recurse(active, 0, 1, problem.Q, 1.0, sum);
    return sum;
}

double large_sieve_bound(const LargeSieveProblem& problem) {
    double J = large_sieve_J(problem);
    return (static_cast<double>(problem.N) + problem.Q * problem.Q) / J * kUpwardSlack;
}

std::optional<double> larger_sieve_bound(const LargerSieveProblem& problem) {
    if (problem.N == 0) throw std::invalid_argument("larger_sieve_bound: N must be positive");
    double logN = std::log(static_cast<double>(problem.N));
    double numerator = -logN, denominator = -logN;
    for (auto [d, nb] : problem.nu_bar) {
        if (nb < 1) throw std::invalid_argument("larger_sieve_bound: nu_bar(d) must be >= 1");
        FactoredInteger f = factorize(static_cast<i64>(d));
        if (f.factors.size() != 1)
            throw std::invalid_argument("larger_sieve_bound: D must contain prime powers");
        double lambda = std::log(static_cast<double>(f.factors[0].first));  // von Mangoldt
        numerator += lambda;
        denominator += lambda / static_cast<double>(nb);
    }
    if (denominator <= 0.0) return std::nullopt;
    return numerator / denominator * kUpwardSlack;
}

std::vector<u64> build_D_theta(double y, double theta, const PrimeTable& table) {
    if (static_cast<double>(table.limit()) < y)
        throw std::invalid_argument("build_D_theta: prime table smaller than y");
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("build_D_theta: theta in (0,1)");
    double threshold = std::pow(y, theta);
    std::vector<u64> small;
    for (u64 q : table.primes()) {
        if (static_cast<double>(q) > threshold) break;
        small.push_back(q);
    }
    std::vector<u64> D;
    for (u64 p : table.primes()) {
        if (static_cast<double>(p) > y) break;
        if (p <= 3) continue;
        u64 m = (p - 1) / 2;
        bool keep = true;  // m == 1 keeps: least prime factor of 1 is infinite
        for (u64 q : small) {
            if (m % q == 0) {
                keep = false;
                break;
            }
        }
        if (keep) D.push_back(p);
    }
    return D;
}

u64 nu_bar_omega(u64 p, double z) {
    if (!is_prime_u64(p)) throw std::invalid_argument("nu_bar_omega: p must be prime");
    u64 total = 1;
    if (z < 1.0) return total;
    FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
    for (auto [f, phi] : divisors_with_phi(pm1)) {
        if (static_cast<double>(f) <= z) total += phi;
    }
    return total;
}

double li(double x, double abs_tol) {
    if (x < 2.0) throw std::invalid_argument("li: x must be >= 2");
    if (x == 2.0) return 0.0;
    double a = 2.0, b = x;
    double fa = inv_log(a), fb = inv_log(b), fm = inv_log(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, b - a);
    return adaptive_simpson(inv_log, a, b, fa, fm, fb, whole, abs_tol, 60);
}

SetSCount count_S(u64 x, i64 g) {
    if (x < 10) throw std::invalid_argument("count_S: x must be >= 10");
    if (g >= -1 && g <= 1) throw std::invalid_argument("count_S: requires |g| > 1");
    u64 log_x = static_cast<u64>(std::floor(std::log(static_cast<double>(x)) + 1e-9));
    std::vector<u64> W_primes;
    for_each_prime(log_x, [&](u64 q) {
        if (q > 2) W_primes.push_back(q);
    });
    SetSCount out;
    PrimeStream stream(x);
    while (u64 p = stream.next()) {
        if (kronecker(g, static_cast<i64>(p)) != -1) continue;
        bool coprime = true;
        for (u64 q : W_primes) {
            if ((p - 1) % q == 0) {
                coprime = false;
                break;
            }
        }
        if (coprime) ++out.count;
    }
    PowerDecomposition dec = decompose(g);
    double a0 = tilde_A0(static_cast<double>(x)).approx;
    double a1 = tilde_A1(dec, static_cast<double>(x)).approx;
    out.li_x = li(static_cast<double>(x));
    out.predicted = 0.5 * a0 * a1 * out.li_x;
    return out;
}

}  // namespace artinlab
