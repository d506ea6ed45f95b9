#include "bne/complex.hpp"

#include <bit>
#include <stdexcept>

#include "bne/rows.hpp"

namespace bne {

CliqueComplex::CliqueComplex(Graph g, int k) : g_(std::move(g)), k_(k) {
    if (k < 0 || k >= g_.n()) {
        throw std::invalid_argument("k must satisfy 0 <= k < n");
    }
    const auto simplices = enumerate_k_simplices(g_, k);
    masks_.reserve(simplices.size());
    rank_.reserve(simplices.size() * 2);
    for (std::size_t r = 0; r < simplices.size(); ++r) {
        masks_.push_back(simplices[r].mask());
        rank_.emplace(masks_[r], r);
    }
    if (g_.n() <= 20) {
        clique_table_.resize(std::size_t{1} << g_.n());
        for (std::uint64_t m = 0; m < clique_table_.size(); ++m) {
            clique_table_[m] = g_.is_clique_mask(m) ? 1 : 0;
        }
    }
    closed_form_ = g_.partite() && g_.partite()->clusters == k + 1;
}

CliqueComplex::~CliqueComplex() = default;

Simplex CliqueComplex::simplex_at(std::size_t rank) const {
    return Simplex::from_mask(masks_[rank]);
}

std::optional<std::size_t> CliqueComplex::rank_of(std::uint64_t mask) const {
    const auto it = rank_.find(mask);
    if (it == rank_.end()) return std::nullopt;
    return it->second;
}

bool CliqueComplex::is_clique(std::uint64_t mask) const {
    if (!clique_table_.empty()) return clique_table_[mask] != 0;
    return g_.is_clique_mask(mask);
}

std::size_t CliqueComplex::sample(Rng& rng) const {
    if (closed_form_) {
        // one uniform vertex per cluster; the simplices with clusters == k+1
        // are exactly the transversals, listed in mixed-radix lex order
        const auto m = static_cast<std::uint64_t>(g_.partite()->cluster_size);
        std::size_t r = 0;
        for (int c = 0; c <= k_; ++c) r = r * m + rng.bounded(m);
        return r;
    }
    return rng.bounded(masks_.size());
}

const SparseRowTable& CliqueComplex::rows() const {
    std::call_once(rows_once_, [this] { rows_ = std::make_unique<SparseRowTable>(*this); });
    return *rows_;
}

}  // namespace bne
