#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bne/graph.hpp"
#include "bne/rng.hpp"

namespace bne {

class SparseRowTable;

// Which of the two normalised operators is meant: the normalised combinatorial
// Laplacian D~ = D_k/n, or its reflection H = I - D~ restricted to S_k.
enum class Variant { laplacian, reflected };

// Immutable view of (graph, k): the lex-ordered list S_k of k-simplices with
// rank lookup, clique testing, uniform sampling, and a lazily built table of
// the sparse H rows. Safe for concurrent read access once constructed.
class CliqueComplex {
public:
    CliqueComplex(Graph g, int k);
    ~CliqueComplex();
    CliqueComplex(const CliqueComplex&) = delete;
    CliqueComplex& operator=(const CliqueComplex&) = delete;

    const Graph& graph() const { return g_; }
    int k() const { return k_; }
    int n() const { return g_.n(); }
    std::size_t size() const { return masks_.size(); }

    std::uint64_t mask_at(std::size_t rank) const { return masks_[rank]; }
    Simplex simplex_at(std::size_t rank) const;
    std::optional<std::size_t> rank_of(std::uint64_t mask) const;

    bool is_clique(std::uint64_t mask) const;

    // uniform rank over S_k; the complete-(k+1)-partite case draws one vertex
    // per cluster in closed form, which is the same distribution
    std::size_t sample(Rng& rng) const;

    const SparseRowTable& rows() const;

private:
    Graph g_;
    int k_;
    std::vector<std::uint64_t> masks_;          // lex order of vertex lists
    std::unordered_map<std::uint64_t, std::size_t> rank_;
    std::vector<std::uint8_t> clique_table_;    // 2^n lookup when n <= 20
    bool closed_form_ = false;                  // partite with clusters == k+1

    mutable std::once_flag rows_once_;
    mutable std::unique_ptr<SparseRowTable> rows_;
};

}  // namespace bne
