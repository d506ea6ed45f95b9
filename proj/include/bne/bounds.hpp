#pragma once

#include <cstdint>

#include "bne/estimators.hpp"

namespace bne {

// Closed-form resource requirements of one algorithm at the given accuracy
// target, evaluated with the same integer rounding the runtime uses. For the
// Chebyshev-combined quantum scheme sample_count is the per-power budget (each
// of the d powers reuses it); for the other algorithms it is the total.
struct BoundReport {
    Algorithm algorithm{};
    double epsilon = 0.0;
    double eta = 0.0;
    double delta = 0.0;
    double one_norm = 2.0;
    int degree = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t step_count = 0;
};

BoundReport bound(Algorithm a, const BneParams& p);

}  // namespace bne
