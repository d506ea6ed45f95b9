#pragma once

#include <cstdint>

namespace bne {

// splitmix64 (Steele/Lea/Flood); used for seed scrambling and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ (Blackman/Vigna), seeded via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        for (auto& w : s_) w = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound); bound >= 1
    std::uint64_t bounded(std::uint64_t bound) {
        // Lemire's method with rejection, exactly uniform
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t t = (0 - bound) % bound;
            while (lo < t) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Identifies one sample stream. Streams are mutually independent for distinct
// (base_seed, run, power, sample) tuples, which is what makes results
// reproducible regardless of how samples are scheduled across workers.
struct StreamKey {
    std::uint64_t base_seed = 0;
    std::uint64_t run = 0;
    std::uint64_t power = 0;
};

inline std::uint64_t derive_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a;
    const std::uint64_t h = splitmix64(x);
    x = h ^ (b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return splitmix64(x);
}

inline Rng stream_rng(const StreamKey& key, std::uint64_t sample_index) {
    std::uint64_t s = derive_seed(key.base_seed, key.run);
    s = derive_seed(s, key.power);
    s = derive_seed(s, sample_index);
    return Rng(s);
}

}  // namespace bne
