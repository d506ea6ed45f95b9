#pragma once

#include <cstdint>

#include "bne/complex.hpp"
#include "bne/rng.hpp"
#include "bne/rows.hpp"

namespace bne {

// One importance-sampled walk value. E[value] = (1/|S_k|) tr(H^d) when the
// start simplex is uniform; |value| <= max_row_one_norm^d always.
struct WalkSample {
    double value = 0.0;
    int steps_taken = 0;
};

// Walks d steps from a uniform start simplex, moving x -> y with probability
// |H_xy| / ||H_x||_1 and accumulating sign(H_{x,y}) * ||H_x||_1 per step; the
// sample is the accumulated product if the walk returns to its start, else 0.
// A row with zero 1-norm is absorbing and the sample value is 0. d = 0 gives 1.
WalkSample sample_walk(const CliqueComplex& cx, int d, Rng& rng);

// Mean of q walk samples, streams keyed by (key, sample_index). The reduction
// order over fixed-size index blocks is deterministic and independent of the
// worker count.
double estimate_sparse_trace(const CliqueComplex& cx, int d, std::uint64_t q,
                             const StreamKey& key, int workers = 1);

}  // namespace bne
