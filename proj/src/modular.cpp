#include "artinlab/modular.hpp"

namespace artinlab {

u64 mod_pow(i64 base, u64 exponent, u64 modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    u64 b = reduce_mod(base, modulus);
    u64 result = 1 % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    return result;
}

namespace {

// Jacobi symbol for odd m > 0, a in [0, m).
int jacobi_odd(u64 a, u64 m) {
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = m & 7;
            if (r == 3 || r == 5) t = -t;
        }
        u64 tmp = a;
        a = m;
        m = tmp;
        if ((a & 3) == 3 && (m & 3) == 3) t = -t;
        a %= m;
    }
    return m == 1 ? t : 0;
}

}  // namespace

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    u64 m = static_cast<u64>(n);
    if ((m & 1) == 0) {
        if ((a & 1) == 0) return 0;
        int e = 0;
        while ((m & 1) == 0) {
            m >>= 1;
            ++e;
        }
        if (e & 1) {
            u64 am8 = reduce_mod(a, 8);
            if (am8 == 3 || am8 == 5) sign = -sign;
        }
    }
    return sign * jacobi_odd(reduce_mod(a, m), m);
}

}  // namespace artinlab
