#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "artinlab/modular.hpp"

namespace artinlab {

/// A constant known either exactly (finite product, big rational) or as
/// a float with an explicit interval: the true value lies within
/// [approx - error_bound, approx + error_bound]. When exact is present,
/// error_bound covers only the rational-to-double rounding.
struct DensityValue {
    std::optional<mpq_class> exact;
    double approx = 0.0;
    double error_bound = 0.0;

    static DensityValue from_exact(mpq_class value);
    static DensityValue from_interval(double approx, double error_bound);
};

double to_double(const mpq_class& q);

/// Natural log of a positive rational, robust to operands far outside
/// double range.
double log_mpq(const mpq_class& q);

/// "num/den" in lowest terms ("num" when den == 1).
std::string rational_str(const mpq_class& q);

}  // namespace artinlab
