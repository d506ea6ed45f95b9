#pragma once

#include <cstdint>

#include "bne/complex.hpp"
#include "bne/rng.hpp"
#include "bne/state.hpp"

namespace bne {

// Selects one of the two block factorisations built from projectors and
// B/sqrt(n):
//   laplacian:  D = P_Gamma (B/sqrt n) P_Gamma P_{k+1},        D^T D = D~
//   reflected:  D = (I - P_Gamma) (B/sqrt n) P_Gamma P_{k+1},  D^T D = I - D~
struct BlockVariant {
    const CliqueComplex* complex = nullptr;
    Variant kind = Variant::laplacian;
};

// Applies D (or its adjoint) through the projector pipeline on the sparse
// statevector. Carries reusable scratch buffers; one instance per thread.
class BlockApplier {
public:
    explicit BlockApplier(BlockVariant v);

    const BlockVariant& variant() const { return v_; }

    // in-place application; checks that the support stays within
    // weights {k, k+1, k+2}
    void apply(SimplexState& state, bool dagger) const;

private:
    BlockVariant v_;
    double inv_sqrt_n_;
    mutable std::vector<SimplexState::Entry> scratch_;
};

SimplexState apply_D(const BlockVariant& v, const SimplexState& in, bool dagger = false);

// One run of the measured block scheme: start in a uniform basis simplex,
// alternate D (odd step) and D^T (even step); after each application draw
// u ~ U[0,1) and fail unless u < ||state||^2, renormalising on success. A
// failed step records 0; surviving all d steps records 1. The mean of the bit
// is (1/|S_k|) tr((D^T D)^d).
int quantum_sample(const BlockApplier& applier, int d, Rng& rng);

double estimate_block_trace(const CliqueComplex& cx, Variant kind, int d,
                            std::uint64_t q, const StreamKey& key, int workers = 1);

}  // namespace bne
