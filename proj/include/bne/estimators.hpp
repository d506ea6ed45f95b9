#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bne/chebyshev.hpp"
#include "bne/complex.hpp"

namespace bne {

enum class Algorithm {
    qbne_chebyshev,   // measured block scheme on D~, Chebyshev-combined
    cbne_power,       // sparse walks on H, single power
    cbne_chebyshev,   // sparse walks on H, Chebyshev-combined
    qbne_power,       // measured block scheme on H, single power
};

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

struct BneParams {
    double epsilon = 0.1;
    double eta = 0.1;
    double delta = 0.5;                  // lower bound on the spectral gap
    std::optional<double> one_norm;      // walk value range bound; default 2
};

// Budget for estimating one trace power: q samples aiming at accuracy
// epsilon_i for that term.
struct PowerBudget {
    int power = 0;
    double epsilon_i = 0.0;
    std::uint64_t samples = 0;
};

struct ShotPlan {
    Algorithm algorithm{};
    int degree = 0;
    double a0 = 0.0;                     // constant term, added exactly
    std::vector<double> coeffs;          // combination weight per budget entry
    std::optional<double> eta_prime;     // split confidence (cbne_chebyshev)
    std::vector<PowerBudget> budgets;    // ascending power

    std::uint64_t total_samples() const;
    std::uint64_t total_steps() const;   // sum of power * samples
};

ShotPlan plan(Algorithm a, const BneParams& p);

struct BneResult {
    double estimate = 0.0;
    ShotPlan plan;
    std::uint64_t samples_used = 0;       // total draws across budgets
    std::uint64_t markov_steps_used = 0;  // budgeted steps, sum power*samples
    std::uint64_t base_seed = 0;
};

BneResult run_algorithm(const CliqueComplex& cx, Algorithm a, const BneParams& p,
                        std::uint64_t seed, std::uint64_t run_id = 0, int workers = 1);

BneResult qbne_chebyshev(const CliqueComplex& cx, const BneParams& p,
                         std::uint64_t seed, int workers = 1);
BneResult cbne_power(const CliqueComplex& cx, const BneParams& p,
                     std::uint64_t seed, int workers = 1);
BneResult cbne_chebyshev(const CliqueComplex& cx, const BneParams& p,
                         std::uint64_t seed, int workers = 1);
BneResult qbne_power(const CliqueComplex& cx, const BneParams& p,
                     std::uint64_t seed, int workers = 1);

}  // namespace bne
