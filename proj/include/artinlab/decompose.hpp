#pragma once

#include <optional>

#include "artinlab/factor.hpp"

namespace artinlab {

/// g = g1 * (rational square), g1 squarefree; h is the largest integer
/// with g an h-th power in Q^x (odd whenever g is not a square);
/// delta is the discriminant of Q(sqrt(g1)), absent when g1 == 1.
struct PowerDecomposition {
    i64 g = 0;
    i64 g1 = 1;
    u64 h = 1;
    bool is_square = false;
    std::optional<i64> delta;
};

/// Requires |g| > 1.
PowerDecomposition decompose(i64 g);

}  // namespace artinlab
