#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "artinlab/decompose.hpp"
#include "artinlab/factor.hpp"
#include "artinlab/prime_table.hpp"

using namespace artinlab;

namespace {

// Independent oracle: trial-division primality.
bool naive_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Independent oracles: sieve-computed phi and mobius tables.
std::vector<u64> phi_sieve(u64 limit) {
    std::vector<u64> phi(limit + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (u64 p = 2; p <= limit; ++p) {
        if (phi[p] == p) {  // p prime
            for (u64 m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
        }
    }
    return phi;
}

std::vector<int> mobius_sieve(u64 limit) {
    std::vector<int> mu(limit + 1, 1);
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (u64 m = p; m <= limit; m += p) {
            if (m > p) composite[m] = true;
            mu[m] = -mu[m];
        }
        for (u64 m = p * p; m <= limit; m += p * p) mu[m] = 0;
    }
    return mu;
}

u64 coprime_count(u64 n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("prime table basics") {
    PrimeTable t(10);
    CHECK(t.primes() == std::vector<u64>{2, 3, 5, 7});
    PrimeTable t2(2);
    CHECK(t2.primes() == std::vector<u64>{2});
    CHECK_THROWS_AS(PrimeTable(1), std::invalid_argument);
    CHECK(t.contains(7));
    CHECK(!t.contains(9));
    CHECK(t.nth_prime(1) == 2);
    CHECK(t.nth_prime(4) == 7);
}

TEST_CASE("prime count at 1e6 matches brute-force primality count") {
    u64 brute = 0;
    for (u64 n = 2; n <= 1'000'000; ++n)
        if (naive_is_prime(n)) ++brute;
    CHECK(brute == 78498);
    PrimeTable t(1'000'000);
    CHECK(t.size() == brute);
    CHECK(t.count_below(1'000'000) == 78498);
}

TEST_CASE("prime table agrees with naive primality on [2, 30000]") {
    PrimeTable t(30000);
    std::size_t idx = 0;
    for (u64 n = 2; n <= 30000; ++n) {
        if (naive_is_prime(n)) {
            REQUIRE(idx < t.size());
            CHECK(t.primes()[idx] == n);
            ++idx;
        }
    }
    CHECK(idx == t.size());
}

TEST_CASE("prime stream respects segment boundaries") {
    // tiny segments force many refills
    PrimeStream small_seg(100000, 64);
    PrimeTable reference(100000);
    for (u64 p : reference.primes()) CHECK(small_seg.next() == p);
    CHECK(small_seg.next() == 0);
}

TEST_CASE("is_prime_u64 matches naive and handles large inputs") {
    for (u64 n = 0; n <= 20000; ++n) CHECK(is_prime_u64(n) == naive_is_prime(n));
    CHECK(is_prime_u64(2305843009213693951ull));   // 2^61 - 1
    CHECK(!is_prime_u64(2305843009213693953ull));
    CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("factorize examples") {
    auto f12 = factorize(12);
    CHECK(f12.sign == 1);
    CHECK(f12.factors == std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 1}});
    auto fm8 = factorize(-8);
    CHECK(fm8.sign == -1);
    CHECK(fm8.factors == std::vector<std::pair<u64, unsigned>>{{2, 3}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    auto big = factorize(600851475143LL);
    CHECK(big.factors.back().first == 6857);  // trial-division oracle: 71*839*1471*6857
    u64 check = 1;
    for (auto [p, e] : big.factors)
        for (unsigned i = 0; i < e; ++i) check *= p;
    CHECK(check == 600851475143ull);
}

TEST_CASE("factorize handles hard 64-bit composites") {
    // products of two large primes force the rho path
    u64 p = 1000000007, q = 999999937;
    auto f = factorize(static_cast<i64>(p * q));
    CHECK(f.factors == std::vector<std::pair<u64, unsigned>>{{999999937, 1}, {1000000007, 1}});
    auto sq = factorize(static_cast<i64>(p) * static_cast<i64>(p));
    CHECK(sq.factors == std::vector<std::pair<u64, unsigned>>{{1000000007, 2}});
}

TEST_CASE("factorize reconstructs every n in [2, 1e5]; phi/mobius match sieves") {
    auto phi = phi_sieve(100000);
    auto mu = mobius_sieve(100000);
    for (i64 n = 2; n <= 100000; ++n) {
        auto f = factorize(n);
        i64 value = f.sign;
        for (auto [p, e] : f.factors)
            for (unsigned i = 0; i < e; ++i) value *= static_cast<i64>(p);
        REQUIRE(value == n);
        REQUIRE(euler_phi(f) == phi[static_cast<u64>(n)]);
        REQUIRE(mobius(f) == mu[static_cast<u64>(n)]);
    }
}

TEST_CASE("euler_phi examples and brute-force coprime counts") {
    CHECK(euler_phi(1ull) == 1);
    CHECK(euler_phi(10ull) == 4);
    CHECK(euler_phi(2310ull) == 480);
    CHECK(coprime_count(2310) == 480);
    for (u64 n = 1; n <= 2000; ++n) CHECK(euler_phi(n) == coprime_count(n));
}

TEST_CASE("mobius examples") {
    CHECK(mobius(1ull) == 1);
    CHECK(mobius(6ull) == 1);
    CHECK(mobius(12ull) == 0);
    CHECK(mobius(30ull) == -1);
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(2, 7) == 1);   // 2 = 3^2 mod 7
    CHECK(kronecker(3, 5) == -1);  // residues mod 5 are {1, 4}
    for (u64 k = 1; k <= 30; ++k) {
        if (k % 7 == 0) continue;
        CHECK(kronecker(static_cast<i64>(k * k), 7) == 1);
    }
}

TEST_CASE("kronecker matches Euler's criterion for odd primes") {
    PrimeTable t(500);
    for (u64 p : t.primes()) {
        if (p == 2) continue;
        for (i64 a = -50; a <= 50; ++a) {
            int k = kronecker(a, static_cast<i64>(p));
            u64 r = reduce_mod(a, p);
            int expected;
            if (r == 0)
                expected = 0;
            else {
                u64 e = mod_pow(a, (p - 1) / 2, p);
                expected = (e == 1) ? 1 : -1;
            }
            REQUIRE(k == expected);
        }
    }
}

TEST_CASE("kronecker multiplicativity and special arguments") {
    for (i64 a = -20; a <= 20; ++a) {
        for (i64 b = -20; b <= 20; ++b) {
            if (a != 0 && b != 0) {
                for (i64 n : {-15, -8, -2, -1, 2, 9, 12, 21}) {
                    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
                }
            }
            CHECK(kronecker(a, b * 21) == kronecker(a, b) * kronecker(a, 21));
        }
        CHECK(kronecker(a, 0) == ((a == 1 || a == -1) ? 1 : 0));
    }
}

TEST_CASE("mod_pow basics and agreement with naive powering") {
    CHECK(mod_pow(2, 3, 7) == 1);
    CHECK(mod_pow(5, 0, 11) == 1);
    CHECK(mod_pow(2, 3, 7) == 8 % 7);
    CHECK(mod_pow(-2, 2, 7) == 4);
    CHECK(mod_pow(-2, 3, 7) == 6);  // (-8) mod 7
    for (u64 m = 2; m <= 100; ++m) {
        for (i64 b = -10; b <= 10; ++b) {
            u64 naive = 1 % m;
            for (u64 e = 0; e <= 50; ++e) {
                CHECK(mod_pow(b, e, m) == naive);
                naive = mul_mod(naive, reduce_mod(b, m), m);
            }
        }
    }
}

TEST_CASE("mod_pow avoids overflow near 64-bit modulus") {
    u64 p = 18446744073709551557ull;
    CHECK(mod_pow(2, p - 1, p) == 1);  // Fermat at the largest 64-bit prime
}

TEST_CASE("multiplicative_order examples and properties") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(8, 7) == 1);  // 8 == 1 mod 7
    CHECK_THROWS_AS(multiplicative_order(14, 7), std::domain_error);

    PrimeTable t(10000);
    for (u64 p : t.primes()) {
        FactoredInteger pm1 = factorize(static_cast<i64>(p - 1));
        for (i64 g = 2; g <= 100; ++g) {
            if (reduce_mod(g, p) == 0) continue;
            u64 ord = multiplicative_order(g, p, pm1);
            REQUIRE((p - 1) % ord == 0);
            REQUIRE(mod_pow(g, ord, p) == 1);
            for (auto [q, e] : factorize(static_cast<i64>(ord)).factors) {
                (void)e;
                REQUIRE(mod_pow(g, ord / q, p) != 1);
            }
        }
    }
}

TEST_CASE("decompose examples") {
    auto d8 = decompose(8);
    CHECK(d8.g1 == 2);
    CHECK(d8.h == 3);
    CHECK(!d8.is_square);
    CHECK(d8.delta == 8);

    auto dm8 = decompose(-8);
    CHECK(dm8.g1 == -2);
    CHECK(dm8.h == 3);
    CHECK(!dm8.is_square);
    CHECK(dm8.delta == -8);

    auto d5 = decompose(5);
    CHECK(d5.g1 == 5);
    CHECK(d5.h == 1);
    CHECK(!d5.is_square);
    CHECK(d5.delta == 5);

    auto dm16 = decompose(-16);
    CHECK(dm16.g1 == -1);
    CHECK(dm16.h == 1);
    CHECK(!dm16.is_square);
    CHECK(dm16.delta == -4);

    auto d36 = decompose(36);
    CHECK(d36.is_square);
    CHECK(d36.g1 == 1);
    CHECK(d36.h == 2);
    CHECK(!d36.delta.has_value());

    CHECK_THROWS_AS(decompose(1), std::invalid_argument);
    CHECK_THROWS_AS(decompose(0), std::invalid_argument);
    CHECK_THROWS_AS(decompose(-1), std::invalid_argument);
}

TEST_CASE("decompose invariants over [-2000, 2000]") {
    for (i64 g = -2000; g <= 2000; ++g) {
        if (g >= -1 && g <= 1) continue;
        auto dec = decompose(g);
        if (!dec.is_square) CHECK(dec.h % 2 == 1);
        // g / g1 is a perfect square of a rational: g * g1 = square * g1^2
        i64 ratio_num = g * dec.g1;
        CHECK(ratio_num % (dec.g1 * dec.g1) == 0);
        CHECK(is_perfect_square(ratio_num / (dec.g1 * dec.g1)));
        CHECK(mobius(static_cast<u64>(dec.g1 < 0 ? -dec.g1 : dec.g1)) != 0);  // squarefree
        if (dec.delta) {
            i64 mod4 = ((dec.g1 % 4) + 4) % 4;
            CHECK(*dec.delta == (mod4 == 1 ? dec.g1 : 4 * dec.g1));
        }
    }
}

TEST_CASE("kronecker(g, p) equals kronecker(delta, p) away from 2g") {
    PrimeTable t(1000);
    for (i64 g = -1000; g <= 1000; ++g) {
        if (g >= -1 && g <= 1) continue;
        auto dec = decompose(g);
        if (!dec.delta) continue;  // perfect squares
        for (u64 p : t.primes()) {
            if (p == 2 || reduce_mod(2 * g, p) == 0) continue;
            REQUIRE(kronecker(g, static_cast<i64>(p)) ==
                    kronecker(*dec.delta, static_cast<i64>(p)));
        }
    }
}

TEST_CASE("divisor enumeration carries exact phi values") {
    auto f = factorize(360);
    auto dp = divisors_with_phi(f);
    CHECK(dp.size() == 24);
    u64 total = 0;
    for (auto [d, phi] : dp) {
        CHECK(euler_phi(d) == phi);
        total += phi;
    }
    CHECK(total == 360);  // sum of phi over divisors
}
