#include "bne/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "bne/trace_classical.hpp"
#include "bne/trace_quantum.hpp"

namespace bne {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::qbne_chebyshev: return "qbne-chebyshev";
        case Algorithm::cbne_power: return "cbne-power";
        case Algorithm::cbne_chebyshev: return "cbne-chebyshev";
        case Algorithm::qbne_power: return "qbne-power";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
    for (Algorithm a : {Algorithm::qbne_chebyshev, Algorithm::cbne_power,
                        Algorithm::cbne_chebyshev, Algorithm::qbne_power}) {
        if (name == algorithm_name(a)) return a;
    }
    return std::nullopt;
}

std::uint64_t ShotPlan::total_samples() const {
    std::uint64_t s = 0;
    for (const auto& b : budgets) s += b.samples;
    return s;
}

std::uint64_t ShotPlan::total_steps() const {
    std::uint64_t s = 0;
    for (const auto& b : budgets) s += static_cast<std::uint64_t>(b.power) * b.samples;
    return s;
}

namespace {

void validate(const BneParams& p, bool chebyshev_rule) {
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
    if (!(p.eta > 0.0 && p.eta < 1.0)) {
        throw std::invalid_argument("eta must lie in (0, 1)");
    }
    const double hi = chebyshev_rule ? 1.0 : std::nextafter(1.0, 2.0);
    if (!(p.delta > 0.0 && p.delta < hi)) {
        throw std::invalid_argument(chebyshev_rule
                                        ? "delta must lie in (0, 1)"
                                        : "delta must lie in (0, 1]");
    }
    if (p.one_norm && !(*p.one_norm >= 0.0)) {
        throw std::invalid_argument("one_norm must be non-negative");
    }
}

std::uint64_t ceil_count(double x) {
    const double c = std::ceil(x);
    if (!(c >= 0.0) || c > 9.0e18) throw std::invalid_argument("sample bound overflow");
    // every budget is at least one sample
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c));
}

int power_degree(double eps, double delta) {
    // degree_for insists on delta < 1; the plain power rule is fine at 1
    return static_cast<int>(std::ceil(std::log(2.0 / eps) / delta));
}

}  // namespace

ShotPlan plan(Algorithm a, const BneParams& p) {
    ShotPlan out;
    out.algorithm = a;
    const double L = std::log(2.0 / p.eta);
    const double one_norm = p.one_norm.value_or(2.0);

    switch (a) {
        case Algorithm::qbne_chebyshev: {
            validate(p, true);
            out.degree = degree_for(p.epsilon, p.delta, DegreeRule::chebyshev);
            const Polynomial poly = qbne_poly(out.degree, p.delta);
            const std::uint64_t q =
                ceil_count(2.0 * L * two_norm_sq(poly) / (p.epsilon * p.epsilon));
            out.a0 = poly.coeff(0);
            for (int i = 1; i <= out.degree; ++i) {
                out.budgets.push_back({i, p.epsilon, q});
                out.coeffs.push_back(poly.coeff(i));
            }
            break;
        }
        case Algorithm::cbne_power: {
            validate(p, false);
            out.degree = power_degree(p.epsilon, p.delta);
            const double range = 2.0 * std::pow(one_norm, out.degree);
            const double half = p.epsilon / 2.0;
            const std::uint64_t q = ceil_count(range * range * L / (2.0 * half * half));
            out.budgets.push_back({out.degree, half, q});
            out.coeffs.push_back(1.0);
            break;
        }
        case Algorithm::cbne_chebyshev: {
            validate(p, true);
            out.degree = degree_for(p.epsilon, p.delta, DegreeRule::chebyshev);
            const Polynomial poly = cbne_poly(out.degree, p.delta);
            const int dbar = (out.degree + 1) / 2;
            const double eta_prime = -std::expm1(std::log1p(-p.eta) / dbar);
            const double Lp = std::log(2.0 / eta_prime);
            out.eta_prime = eta_prime;
            out.a0 = poly.coeff(0);
            for (int i = 1; i <= out.degree; ++i) {
                const double ai = poly.coeff(i);
                if (ai == 0.0) continue;  // parity gaps get no budget
                const double eps_i = p.epsilon / (2.0 * dbar * std::abs(ai));
                const double range = 2.0 * std::pow(one_norm, i);
                const std::uint64_t qi =
                    ceil_count(range * range * Lp / (2.0 * eps_i * eps_i));
                out.budgets.push_back({i, eps_i, qi});
                out.coeffs.push_back(ai);
            }
            break;
        }
        case Algorithm::qbne_power: {
            validate(p, false);
            out.degree = power_degree(p.epsilon, p.delta);
            const std::uint64_t q = ceil_count(2.0 * L / (p.epsilon * p.epsilon));
            out.budgets.push_back({out.degree, p.epsilon, q});
            out.coeffs.push_back(1.0);
            break;
        }
    }
    return out;
}

BneResult run_algorithm(const CliqueComplex& cx, Algorithm a, const BneParams& p,
                        std::uint64_t seed, std::uint64_t run_id, int workers) {
    const ShotPlan pl = plan(a, p);
    double estimate = pl.a0;
    for (std::size_t i = 0; i < pl.budgets.size(); ++i) {
        const PowerBudget& b = pl.budgets[i];
        const StreamKey key{seed, run_id, static_cast<std::uint64_t>(b.power)};
        double mu = 0.0;
        switch (a) {
            case Algorithm::qbne_chebyshev:
                mu = estimate_block_trace(cx, Variant::laplacian, b.power, b.samples,
                                          key, workers);
                break;
            case Algorithm::qbne_power:
                mu = estimate_block_trace(cx, Variant::reflected, b.power, b.samples,
                                          key, workers);
                break;
            case Algorithm::cbne_power:
            case Algorithm::cbne_chebyshev:
                mu = estimate_sparse_trace(cx, b.power, b.samples, key, workers);
                break;
        }
        estimate += pl.coeffs[i] * mu;
    }
    BneResult r;
    r.estimate = estimate;
    r.plan = pl;
    r.samples_used = pl.total_samples();
    r.markov_steps_used = pl.total_steps();
    r.base_seed = seed;
    return r;
}

BneResult qbne_chebyshev(const CliqueComplex& cx, const BneParams& p,
                         std::uint64_t seed, int workers) {
    return run_algorithm(cx, Algorithm::qbne_chebyshev, p, seed, 0, workers);
}
BneResult cbne_power(const CliqueComplex& cx, const BneParams& p, std::uint64_t seed,
                     int workers) {
    return run_algorithm(cx, Algorithm::cbne_power, p, seed, 0, workers);
}
BneResult cbne_chebyshev(const CliqueComplex& cx, const BneParams& p,
                         std::uint64_t seed, int workers) {
    return run_algorithm(cx, Algorithm::cbne_chebyshev, p, seed, 0, workers);
}
BneResult qbne_power(const CliqueComplex& cx, const BneParams& p, std::uint64_t seed,
                     int workers) {
    return run_algorithm(cx, Algorithm::qbne_power, p, seed, 0, workers);
}

}  // namespace bne
