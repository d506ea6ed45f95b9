#include "bne/bounds.hpp"

namespace bne {

BoundReport bound(Algorithm a, const BneParams& p) {
    const ShotPlan pl = plan(a, p);
    BoundReport r;
    r.algorithm = a;
    r.epsilon = p.epsilon;
    r.eta = p.eta;
    r.delta = p.delta;
    r.one_norm = p.one_norm.value_or(2.0);
    r.degree = pl.degree;
    r.step_count = pl.total_steps();
    // the Chebyshev-combined quantum scheme reuses one budget for every power
    r.sample_count = a == Algorithm::qbne_chebyshev ? pl.budgets.front().samples
                                                    : pl.total_samples();
    return r;
}

}  // namespace bne
