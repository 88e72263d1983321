#include "artinlab/decompose.hpp"

#include <numeric>
#include <stdexcept>

namespace artinlab {

PowerDecomposition decompose(i64 g) {
    if (g >= -1 && g <= 1) throw std::invalid_argument("decompose: requires |g| > 1");
    PowerDecomposition dec;
    dec.g = g;
    FactoredInteger f = factorize(g);
    u64 exp_gcd = 0;
    i64 kernel = f.sign;
    for (auto [p, e] : f.factors) {
        exp_gcd = std::gcd(exp_gcd, static_cast<u64>(e));
        if (e & 1) kernel *= static_cast<i64>(p);
    }
    dec.g1 = kernel;
    dec.is_square = g > 0 && exp_gcd % 2 == 0;
    if (g > 0) {
        dec.h = exp_gcd;
    } else {
        u64 h = exp_gcd;
        while (h % 2 == 0) h /= 2;  // negative h-th powers exist only for odd h
        dec.h = h;
    }
    if (dec.g1 != 1) {
        i64 mod4 = ((dec.g1 % 4) + 4) % 4;
        dec.delta = (mod4 == 1) ? dec.g1 : 4 * dec.g1;
    }
    return dec;
}

}  // namespace artinlab
