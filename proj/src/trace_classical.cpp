#include "bne/trace_classical.hpp"

#include <stdexcept>
#include <vector>

#include "bne/parallel.hpp"

namespace bne {

WalkSample sample_walk(const CliqueComplex& cx, int d, Rng& rng) {
    if (d < 0) throw std::invalid_argument("power must be non-negative");
    const SparseRowTable& rows = cx.rows();
    const std::size_t start = cx.sample(rng);
    if (d == 0) return {1.0, 0};

    std::size_t x = start;
    double acc = 1.0;
    for (int step = 0; step < d; ++step) {
        const SparseRow& row = rows.row(x);
        if (row.one_norm == 0.0) return {0.0, step};  // absorbing dead end
        // cumulative-sum inversion over entries in ascending key order
        const double u = rng.uniform() * row.one_norm;
        double cum = 0.0;
        const SparseRow::Entry* picked = &row.entries.back();
        for (const auto& e : row.entries) {
            cum += e.value < 0.0 ? -e.value : e.value;
            if (u < cum) {
                picked = &e;
                break;
            }
        }
        acc *= picked->value < 0.0 ? -row.one_norm : row.one_norm;
        x = picked->rank;
    }
    return {x == start ? acc : 0.0, d};
}

double estimate_sparse_trace(const CliqueComplex& cx, int d, std::uint64_t q,
                             const StreamKey& key, int workers) {
    if (q == 0) throw std::invalid_argument("sample count must be positive");
    cx.rows();  // build the row table before fanning out

    const std::uint64_t n_blocks = (q + kSampleBlock - 1) / kSampleBlock;
    std::vector<double> block_sums(n_blocks, 0.0);
    run_items(n_blocks, workers, [&](std::size_t b) {
        const std::uint64_t lo = b * kSampleBlock;
        const std::uint64_t hi = std::min(q, lo + kSampleBlock);
        double s = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            Rng rng = stream_rng(key, i);
            s += sample_walk(cx, d, rng).value;
        }
        block_sums[b] = s;
    });
    double total = 0.0;
    for (double s : block_sums) total += s;  // fixed order: bit-reproducible
    return total / static_cast<double>(q);
}

}  // namespace bne
