#pragma once

#include <cstdint>
#include <vector>

#include "bne/complex.hpp"

namespace bne {

// One row of H = I - D_k/n restricted to S_k, discovered combinatorially
// without assembling the dense matrix. Entries are keyed by simplex rank and
// kept in ascending key order; exact zeros are not stored.
struct SparseRow {
    struct Entry {
        std::uint32_t rank;
        double value;
    };
    std::vector<Entry> entries;
    double one_norm = 0.0;
};

SparseRow sparse_row_H(const CliqueComplex& cx, std::size_t rank);

class SparseRowTable {
public:
    explicit SparseRowTable(const CliqueComplex& cx);

    const SparseRow& row(std::size_t rank) const { return rows_[rank]; }
    std::size_t size() const { return rows_.size(); }
    double max_one_norm() const { return max_one_norm_; }

private:
    std::vector<SparseRow> rows_;
    double max_one_norm_ = 0.0;
};

}  // namespace bne
