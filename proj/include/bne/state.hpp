#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace bne {

// Sparse statevector over n-qubit basis strings. A basis string encodes a
// vertex subset (bit i set = vertex i present). Amplitudes below the pruning
// threshold are dropped so supports stay exactly sparse; entries are kept
// sorted by basis key.
class SimplexState {
public:
    using Entry = std::pair<std::uint64_t, std::complex<double>>;
    static constexpr double kPruneEps = 1e-15;

    SimplexState() = default;
    explicit SimplexState(int n) : n_(n) {}

    static SimplexState basis(int n, std::uint64_t mask);

    int n() const { return n_; }
    bool empty() const { return amps_.empty(); }
    std::size_t support_size() const { return amps_.size(); }
    const std::vector<Entry>& entries() const { return amps_; }
    std::vector<Entry>& entries() { return amps_; }

    std::complex<double> amplitude(std::uint64_t mask) const;
    void set_amplitude(std::uint64_t mask, std::complex<double> a);

    double norm_sq() const;
    void scale(double factor);
    void prune(double eps = kPruneEps);

    // sorts by key, merges duplicate keys, prunes
    void normalise_layout(double eps = kPruneEps);

private:
    int n_ = 0;
    std::vector<Entry> amps_;
};

}  // namespace bne
