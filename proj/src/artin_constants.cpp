#include "artinlab/artin_constants.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace artinlab {

namespace {

bool mod4_is_1(i64 n) {
    return ((n % 4) + 4) % 4 == 1;
}

bool divides(u64 q, u64 n) {
    return n % q == 0;
}

// Prime cutoff "<= log x", boundary included when log x lands on an integer.
u64 log_prime_cutoff(double x) {
    return static_cast<u64>(std::floor(std::log(x) + 1e-9));
}

// error_bound for a truncated product prod_{q > Q}(1 - a_q) with
// sum a_q <= tail_sum and a_q <= 1/2: |log prod| <= 2 * tail_sum.
double tail_error(double approx, double tail_sum) {
    return std::fabs(approx) * std::expm1(2.0 * tail_sum);
}

}  // namespace

DensityValue artin_A0(u64 h, u64 prime_limit) {
    if (h % 2 == 0) throw std::invalid_argument("artin_A0: h must be odd");
    if (prime_limit < 100) throw std::invalid_argument("artin_A0: prime_limit must be >= 100");
    double product = 1.0;
    for_each_prime(prime_limit, [&](u64 q) {
        double qd = static_cast<double>(q);
        if (h % q == 0)
            product *= 1.0 - 1.0 / (qd - 1.0);
        else
            product *= 1.0 - 1.0 / (qd * (qd - 1.0));
    });
    if (h > 1) {
        for (auto [q, e] : factorize(static_cast<i64>(h)).factors) {
            (void)e;
            if (q > prime_limit) product *= 1.0 - 1.0 / (static_cast<double>(q) - 1.0);
        }
    }
    // sum_{q > Q} 1/(q(q-1)) < 1/Q
    return DensityValue::from_interval(product, tail_error(product, 1.0 / static_cast<double>(prime_limit)));
}

DensityValue artin_A1(const PowerDecomposition& dec) {
    if (dec.is_square) throw std::invalid_argument("artin_A1: undefined for squares");
    if (!mod4_is_1(dec.g1)) return DensityValue::from_exact(mpq_class(1));
    u64 abs_g1 = dec.g1 < 0 ? static_cast<u64>(-dec.g1) : static_cast<u64>(dec.g1);
    mpq_class term(mobius(abs_g1));
    if (abs_g1 > 1) {
        for (auto [q, e] : factorize(static_cast<i64>(abs_g1)).factors) {
            (void)e;
            mpz_class qz(static_cast<unsigned long>(q));
            if (dec.h % q == 0)
                term /= mpq_class(qz - 2);
            else
                term /= mpq_class(qz * qz - qz - 1);
        }
    }
    return DensityValue::from_exact(1 - term);
}

DensityValue artin_A(i64 g, u64 prime_limit) {
    PowerDecomposition dec = decompose(g);  // rejects |g| <= 1
    if (dec.is_square) throw std::invalid_argument("artin_A: g must not be a perfect square");
    DensityValue a0 = artin_A0(dec.h, prime_limit);
    DensityValue a1 = artin_A1(dec);
    double approx = a0.approx * a1.approx;
    double err = std::fabs(a0.approx) * a1.error_bound + std::fabs(a1.approx) * a0.error_bound +
                 a0.error_bound * a1.error_bound;
    return DensityValue::from_interval(approx, err);
}

int epsilon_d(u64 d, const PowerDecomposition& dec) {
    if (!is_squarefree(d)) throw std::invalid_argument("epsilon_d: d must be squarefree");
    if (!mod4_is_1(dec.g1)) return 1;
    u64 two_g1 = 2 * (dec.g1 < 0 ? static_cast<u64>(-dec.g1) : static_cast<u64>(dec.g1));
    return divides(two_g1, d) ? 2 : 1;
}

u64 kummer_degree(u64 d, const PowerDecomposition& dec) {
    if (d == 0 || !is_squarefree(d)) throw std::invalid_argument("kummer_degree: d must be squarefree");
    if (d > 0xFFFFFFFFull) throw std::invalid_argument("kummer_degree: d*phi(d) exceeds 64 bits");
    if (d == 1) return 1;
    u64 phi = euler_phi(d);
    u64 divisor = static_cast<u64>(epsilon_d(d, dec)) * std::gcd(d, dec.h);
    u64 numerator = d * phi;
    if (numerator % divisor != 0) throw std::logic_error("kummer_degree: non-integral degree");
    return numerator / divisor;
}

DensityValue hooley_sum_truncated(const PowerDecomposition& dec, u64 d_limit) {
    if (d_limit < 1) throw std::invalid_argument("hooley_sum_truncated: d_limit must be >= 1");
    // Squarefree d in increasing order via a min-heap keyed on d; each
    // entry carries mu and phi so no factorizations are needed.
    struct Entry {
        u64 d;
        u64 phi;
        std::size_t next_prime_idx;
        int mu;
        bool operator>(const Entry& o) const { return d > o.d; }
    };
    PrimeTable table(std::max<u64>(d_limit, 2));
    const auto& primes = table.primes();

    u64 two_abs_g1 = 2 * (dec.g1 < 0 ? static_cast<u64>(-dec.g1) : static_cast<u64>(dec.g1));
    bool g1_is_1_mod_4 = mod4_is_1(dec.g1);

    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({1, 1, 0, 1});
    long double sum = 0.0L;
    while (!heap.empty()) {
        Entry e = heap.top();
        heap.pop();
        int eps = (g1_is_1_mod_4 && e.d % two_abs_g1 == 0) ? 2 : 1;
        u64 degree_den = e.d * e.phi;
        u64 degree_num = static_cast<u64>(eps) * std::gcd(e.d, dec.h);
        sum += static_cast<long double>(e.mu) * degree_num / degree_den;
        for (std::size_t j = e.next_prime_idx; j < primes.size(); ++j) {
            u64 p = primes[j];
            if (e.d > d_limit / p) break;
            heap.push({e.d * p, e.phi * (p - 1), j + 1, -e.mu});
        }
    }
    // Heuristic tail: sum_{d > D} h/(d*phi(d)) ~ h * (zeta(2)zeta(3)/zeta(6)) / D.
    double tail = static_cast<double>(dec.h) * 1.9435964368 / static_cast<double>(d_limit);
    return DensityValue::from_interval(static_cast<double>(sum), tail);
}

namespace {

DeltaTable build_delta_table(u64 max_prime, u64 (*weight)(u64)) {
    if (max_prime < 2) throw std::invalid_argument("delta_table: max_prime must be >= 2");
    DeltaTable table;
    table.max_prime = max_prime;
    mpq_class residual(1);
    mpq_class delta_sum(0);
    mpq_class p_delta_sum(0);
    for_each_prime(max_prime, [&](u64 p) {
        mpq_class w(weight(p), p);
        w.canonicalize();
        mpq_class delta = residual * w;
        residual *= (1 - w);
        delta_sum += delta;
        p_delta_sum += delta * mpq_class(p);
        table.rows.push_back({p, delta, delta_sum, p_delta_sum});
    });
    table.residual_product = residual;
    return table;
}

u64 weight_phi(u64 p) {
    return euler_phi(p - 1);
}

}  // namespace

u64 F_almost(u64 p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("F_almost: p must be prime");
    if (p == 2) return 1;
    return euler_phi((p - 1) / 2) + euler_phi(p - 1);
}

DeltaTable delta_table(u64 max_prime) {
    return build_delta_table(max_prime, weight_phi);
}

DeltaTable delta_star_table(u64 max_prime) {
    return build_delta_table(max_prime, F_almost);
}

DensityValue mean_pg_predicted(u64 max_prime) {
    if (max_prime < 100) throw std::invalid_argument("mean_pg_predicted: max_prime must be >= 100");
    DeltaTable table = delta_table(max_prime);
    double approx = to_double(table.rows.back().p_delta_sum);
    mpq_class tail = table.residual_product * mpq_class(max_prime) * mpq_class(max_prime);
    return DensityValue::from_interval(approx, to_double(tail));
}

DensityValue sigma_m(u64 m, u64 prime_limit) {
    if (m < 1) throw std::invalid_argument("sigma_m: m must be >= 1");
    double product = 1.0;
    double md = static_cast<double>(m);
    for_each_prime(prime_limit, [&](u64 p) {
        double pd = static_cast<double>(p);
        // (p^m - (p-1)^m) / (p^(m+1) - p^m) == (1 - (1-1/p)^m) / (p-1)
        double frac = -std::expm1(md * std::log1p(-1.0 / pd));
        product *= 1.0 - frac / (pd - 1.0);
    });
    // a_p <= m/(p(p-1)), so sum_{p > Q} a_p <= m/Q
    return DensityValue::from_interval(product, tail_error(product, md / static_cast<double>(prime_limit)));
}

DensityValue varrho_exponent(u64 m_max, u64 prime_limit) {
    if (m_max < 1) throw std::invalid_argument("varrho_exponent: m_max must be >= 1");
    double sum = 0.0, err = 0.0;
    for (u64 m = 1; m <= m_max; ++m) {
        DensityValue s = sigma_m(m, prime_limit);
        sum += s.approx / static_cast<double>(m);
        err += s.error_bound / static_cast<double>(m);
    }
    err += std::ldexp(1.0, -static_cast<int>(std::min<u64>(m_max, 1000)));  // geometric tail
    return DensityValue::from_interval(sum, err);
}

DensityValue varrho(u64 m_max, u64 prime_limit) {
    DensityValue r0 = varrho_exponent(m_max, prime_limit);
    double approx = std::exp(r0.approx);
    return DensityValue::from_interval(approx, approx * std::expm1(r0.error_bound));
}

VaughanProduct vaughan_product(u64 k, const PrimeTable& table) {
    if (k == 0 || k > table.size()) throw std::invalid_argument("vaughan_product: table too small for k");
    mpq_class product(1);
    for (std::size_t i = 0; i < k; ++i) {
        u64 r = table.primes()[i];
        mpq_class w(euler_phi(r - 1), r);
        w.canonicalize();
        product *= (1 - w);
    }
    return {product, -log_mpq(product)};
}

DensityValue tilde_A0(double x) {
    if (!(x >= std::exp(std::exp(1.0)))) throw std::invalid_argument("tilde_A0: requires x >= e^e");
    mpq_class product(1);
    for_each_prime(log_prime_cutoff(x), [&](u64 q) {
        if (q == 2) return;
        product *= mpq_class(q - 2, q - 1);
    });
    return DensityValue::from_exact(product);
}

DensityValue tilde_A1(const PowerDecomposition& dec, double x) {
    u64 q_max = log_prime_cutoff(x);
    mpq_class result(1);
    if (mod4_is_1(dec.g1)) {
        u64 abs_g1 = dec.g1 < 0 ? static_cast<u64>(-dec.g1) : static_cast<u64>(dec.g1);
        bool divides_W = true;  // W = product of odd primes <= log x
        mpq_class term(1);
        if (abs_g1 > 1) {
            for (auto [q, e] : factorize(static_cast<i64>(abs_g1)).factors) {
                (void)e;
                if (q == 2 || q > q_max) {
                    divides_W = false;
                    break;
                }
                term *= mpq_class(-1, static_cast<long>(q) - 2);
            }
        }
        if (divides_W) result = 1 - term;
    }
    return DensityValue::from_exact(result);
}

DensityValue twin_prime_C2(u64 prime_limit) {
    if (prime_limit < 100) throw std::invalid_argument("twin_prime_C2: prime_limit must be >= 100");
    double product = 1.0;
    for_each_prime(prime_limit, [&](u64 q) {
        if (q == 2) return;
        double qm1 = static_cast<double>(q) - 1.0;
        product *= 1.0 - 1.0 / (qm1 * qm1);
    });
    // sum_{q > Q} 1/(q-1)^2 < 2/Q for Q >= 100
    return DensityValue::from_interval(product, tail_error(product, 2.0 / static_cast<double>(prime_limit)));
}

}  // namespace artinlab
