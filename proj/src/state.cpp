#include "bne/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bne {

SimplexState SimplexState::basis(int n, std::uint64_t mask) {
    SimplexState s(n);
    s.amps_.emplace_back(mask, std::complex<double>{1.0, 0.0});
    return s;
}

std::complex<double> SimplexState::amplitude(std::uint64_t mask) const {
    const auto it = std::lower_bound(
        amps_.begin(), amps_.end(), mask,
        [](const Entry& e, std::uint64_t m) { return e.first < m; });
    if (it != amps_.end() && it->first == mask) return it->second;
    return {0.0, 0.0};
}

void SimplexState::set_amplitude(std::uint64_t mask, std::complex<double> a) {
    const auto it = std::lower_bound(
        amps_.begin(), amps_.end(), mask,
        [](const Entry& e, std::uint64_t m) { return e.first < m; });
    if (it != amps_.end() && it->first == mask) {
        it->second = a;
    } else {
        amps_.insert(it, {mask, a});
    }
}

double SimplexState::norm_sq() const {
    double s = 0.0;
    for (const auto& [m, a] : amps_) s += std::norm(a);
    return s;
}

void SimplexState::scale(double factor) {
    for (auto& [m, a] : amps_) a *= factor;
}

void SimplexState::prune(double eps) {
    std::erase_if(amps_, [eps](const Entry& e) { return std::abs(e.second) <= eps; });
}

void SimplexState::normalise_layout(double eps) {
    std::sort(amps_.begin(), amps_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < amps_.size();) {
        std::uint64_t key = amps_[r].first;
        std::complex<double> sum = amps_[r].second;
        for (++r; r < amps_.size() && amps_[r].first == key; ++r) sum += amps_[r].second;
        if (std::abs(sum) > eps) amps_[w++] = {key, sum};
    }
    amps_.resize(w);
}

}  // namespace bne
