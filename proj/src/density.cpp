#include "artinlab/density.hpp"

#include <cmath>

namespace artinlab {

double to_double(const mpq_class& q) {
    return mpq_get_d(q.get_mpq_t());
}

DensityValue DensityValue::from_exact(mpq_class value) {
    DensityValue dv;
    dv.approx = to_double(value);
    dv.error_bound = std::ldexp(std::fabs(dv.approx), -52) + 1e-300;
    dv.exact = std::move(value);
    return dv;
}

DensityValue DensityValue::from_interval(double approx, double error_bound) {
    DensityValue dv;
    dv.approx = approx;
    dv.error_bound = error_bound;
    return dv;
}

double log_mpq(const mpq_class& q) {
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

}  // namespace artinlab
