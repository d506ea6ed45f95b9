#include "bne/trace_quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bne/parallel.hpp"

namespace bne {

BlockApplier::BlockApplier(BlockVariant v) : v_(v) {
    if (!v_.complex) throw std::invalid_argument("block variant needs a complex");
    inv_sqrt_n_ = 1.0 / std::sqrt(static_cast<double>(v_.complex->n()));
}

namespace {

template <class Pred>
void filter(std::vector<SimplexState::Entry>& amps, Pred&& keep) {
    std::erase_if(amps, [&](const SimplexState::Entry& e) { return !keep(e.first); });
}

}  // namespace

void BlockApplier::apply(SimplexState& state, bool dagger) const {
    const CliqueComplex& cx = *v_.complex;
    const int n = cx.n();
    const int k1 = cx.k() + 1;
    auto& amps = state.entries();

    const auto clique = [&](std::uint64_t m) { return cx.is_clique(m); };
    const auto non_clique = [&](std::uint64_t m) { return !cx.is_clique(m); };
    const auto weight_k1 = [&](std::uint64_t m) { return std::popcount(m) == k1; };

    const auto expand = [&] {
        scratch_.clear();
        scratch_.reserve(amps.size() * n);
        for (const auto& [mask, a] : amps) {
            for (int i = 0; i < n; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << i;
                const std::uint64_t below = mask & (bit - 1);
                const double sgn =
                    (std::popcount(below) & 1) ? -inv_sqrt_n_ : inv_sqrt_n_;
                scratch_.emplace_back(mask ^ bit, a * sgn);
            }
        }
        std::sort(scratch_.begin(), scratch_.end(),
                  [](const SimplexState::Entry& a, const SimplexState::Entry& b) {
                      return a.first < b.first;
                  });
        amps.clear();
        for (std::size_t r = 0; r < scratch_.size();) {
            const std::uint64_t key = scratch_[r].first;
            std::complex<double> sum = scratch_[r].second;
            for (++r; r < scratch_.size() && scratch_[r].first == key; ++r) {
                sum += scratch_[r].second;
            }
            if (std::abs(sum) > SimplexState::kPruneEps) amps.emplace_back(key, sum);
        }
    };

    if (!dagger) {
        filter(amps, weight_k1);
        filter(amps, clique);
        expand();
        if (v_.kind == Variant::laplacian) {
            filter(amps, clique);
        } else {
            filter(amps, non_clique);
        }
    } else {
        if (v_.kind == Variant::laplacian) {
            filter(amps, clique);
        } else {
            filter(amps, non_clique);
        }
        expand();
        filter(amps, clique);
        filter(amps, weight_k1);
    }

    for (const auto& [mask, a] : amps) {
        const int w = std::popcount(mask);
        if (w < k1 - 1 || w > k1 + 1) {
            throw std::logic_error("block application left weight outside {k, k+1, k+2}");
        }
    }
}

SimplexState apply_D(const BlockVariant& v, const SimplexState& in, bool dagger) {
    BlockApplier applier(v);
    SimplexState out = in;
    applier.apply(out, dagger);
    return out;
}

int quantum_sample(const BlockApplier& applier, int d, Rng& rng) {
    if (d < 0) throw std::invalid_argument("power must be non-negative");
    const CliqueComplex& cx = *applier.variant().complex;
    const std::size_t start = cx.sample(rng);
    if (d == 0) return 1;

    SimplexState state = SimplexState::basis(cx.n(), cx.mask_at(start));
    for (int j = 1; j <= d; ++j) {
        applier.apply(state, /*dagger=*/(j % 2) == 0);
        const double s = state.norm_sq();  // success probability of this step
        if (!(rng.uniform() < s)) return 0;
        state.scale(1.0 / std::sqrt(s));
    }
    return 1;
}

double estimate_block_trace(const CliqueComplex& cx, Variant kind, int d,
                            std::uint64_t q, const StreamKey& key, int workers) {
    if (q == 0) throw std::invalid_argument("sample count must be positive");
    const BlockVariant v{&cx, kind};
    const std::uint64_t n_blocks = (q + kSampleBlock - 1) / kSampleBlock;
    std::vector<std::uint64_t> block_counts(n_blocks, 0);
    run_items<BlockApplier>(
        n_blocks, workers, [&] { return BlockApplier(v); },
        [&](BlockApplier& applier, std::size_t b) {
            const std::uint64_t lo = b * kSampleBlock;
            const std::uint64_t hi = std::min(q, lo + kSampleBlock);
            std::uint64_t ones = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                Rng rng = stream_rng(key, i);
                ones += static_cast<std::uint64_t>(quantum_sample(applier, d, rng));
            }
            block_counts[b] = ones;
        });
    std::uint64_t total = 0;
    for (auto c : block_counts) total += c;
    return static_cast<double>(total) / static_cast<double>(q);
}

}  // namespace bne
