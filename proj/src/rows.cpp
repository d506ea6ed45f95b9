#include "bne/rows.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bne {

namespace {

// (-1)^(index of v within the set), i.e. parity of the set bits below v
inline double removal_sign(std::uint64_t mask, int v) {
    const std::uint64_t below = mask & ((std::uint64_t{1} << v) - 1);
    return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

}  // namespace

SparseRow sparse_row_H(const CliqueComplex& cx, std::size_t rank) {
    const Graph& g = cx.graph();
    const int n = g.n();
    const int k = cx.k();
    const std::uint64_t sigma = cx.mask_at(rank);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const double inv_n = 1.0 / n;

    SparseRow row;

    // diagonal of D_k is (k+1) + (number of cofacets); H = I - D_k/n
    int up_degree = 0;
    std::uint64_t outside = all & ~sigma;
    for (std::uint64_t rest = outside; rest;) {
        const int w = std::countr_zero(rest);
        rest &= rest - 1;
        if (cx.is_clique(sigma | (std::uint64_t{1} << w))) ++up_degree;
    }
    const int diag_red = n - (k + 1) - up_degree;
    if (diag_red != 0) {
        row.entries.push_back({static_cast<std::uint32_t>(rank), diag_red * inv_n});
    }

    // neighbours tau = sigma \ {v} + {w} sharing the face sigma \ {v}; the
    // off-diagonal Laplacian entry survives only when sigma + {w} is NOT a
    // simplex (otherwise the up and down contributions cancel)
    for (std::uint64_t sv = sigma; sv;) {
        const int v = std::countr_zero(sv);
        sv &= sv - 1;
        const std::uint64_t face = sigma ^ (std::uint64_t{1} << v);
        for (std::uint64_t rest = outside; rest;) {
            const int w = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint64_t wbit = std::uint64_t{1} << w;
            const std::uint64_t tau = face | wbit;
            if (!cx.is_clique(tau)) continue;
            if (cx.is_clique(sigma | wbit)) continue;
            const double sgn = removal_sign(sigma, v) * removal_sign(tau, w);
            const auto trank = cx.rank_of(tau);
            row.entries.push_back({static_cast<std::uint32_t>(*trank), -sgn * inv_n});
        }
    }

    std::sort(row.entries.begin(), row.entries.end(),
              [](const SparseRow::Entry& a, const SparseRow::Entry& b) {
                  return a.rank < b.rank;
              });
    for (const auto& e : row.entries) row.one_norm += std::abs(e.value);
    return row;
}

SparseRowTable::SparseRowTable(const CliqueComplex& cx) {
    rows_.reserve(cx.size());
    for (std::size_t r = 0; r < cx.size(); ++r) {
        rows_.push_back(sparse_row_H(cx, r));
        max_one_norm_ = std::max(max_one_norm_, rows_.back().one_norm);
    }
}

}  // namespace bne
