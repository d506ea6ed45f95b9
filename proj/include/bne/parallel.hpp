#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bne {

// Runs fn(ctx, item) for item = 0..n_items-1 across `workers` threads. Each
// thread gets its own context from make_ctx. Items are claimed through an
// atomic counter, so which thread runs which item is scheduling-dependent;
// callers must write results into per-item slots to stay deterministic.
template <class Ctx, class MakeCtx, class Fn>
void run_items(std::size_t n_items, int workers, MakeCtx&& make_ctx, Fn&& fn) {
    if (workers <= 1 || n_items <= 1) {
        Ctx ctx = make_ctx();
        for (std::size_t i = 0; i < n_items; ++i) fn(ctx, i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        Ctx ctx = make_ctx();
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n_items) break;
            fn(ctx, i);
        }
    };
    std::vector<std::thread> pool;
    const int nt = static_cast<int>(std::min<std::size_t>(workers, n_items));
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

struct NoCtx {};

template <class Fn>
void run_items(std::size_t n_items, int workers, Fn&& fn) {
    run_items<NoCtx>(
        n_items, workers, [] { return NoCtx{}; },
        [&](NoCtx&, std::size_t i) { fn(i); });
}

// Fixed block size for sample-sum reduction. Block boundaries depend only on
// sample indices, never on the worker count, so partial sums (and therefore
// floating point rounding) are reproducible for any --workers value.
inline constexpr std::uint64_t kSampleBlock = 4096;

}  // namespace bne
