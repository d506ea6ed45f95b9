#include "bne/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bne/parallel.hpp"
#include "bne/trace_classical.hpp"
#include "bne/trace_quantum.hpp"

namespace bne {

std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

// rounds to the 6 significant digits the text outputs carry
double round_sig(double v) { return std::strtod(format_sig(v).c_str(), nullptr); }

}  // namespace

std::vector<std::uint64_t> default_checkpoints(std::uint64_t max_samples, int points) {
    if (max_samples == 0) throw ConfigError("max_samples must be positive");
    const std::uint64_t lo = std::min<std::uint64_t>(100, max_samples);
    if (lo == max_samples || points <= 1) return {max_samples};
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(max_samples));
    std::vector<std::uint64_t> out;
    out.reserve(points);
    for (int t = 0; t < points; ++t) {
        const double f = llo + (lhi - llo) * t / (points - 1);
        auto c = static_cast<std::uint64_t>(std::llround(std::exp(f)));
        c = std::clamp(c, lo, max_samples);
        if (out.empty() || c > out.back()) out.push_back(c);
    }
    out.back() = max_samples;
    return out;
}

ExperimentResult run_experiment(const CliqueComplex& cx, const ExperimentConfig& cfg) {
    if (cfg.runs < 1) throw ConfigError("runs must be at least 1");
    if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
    if (cfg.max_samples < 1) throw ConfigError("max_samples must be at least 1");
    if (cx.size() == 0) throw ConfigError("the complex has no k-simplices");

    ExperimentResult res;
    res.config = cfg;

    std::optional<ComplexProfile> prof;
    if (cx.size() <= kOracleMaxSimplices) prof = profile(cx.graph(), cx.k());

    double delta = 0.0;
    if (cfg.delta) {
        delta = *cfg.delta;
    } else if (prof) {
        delta = prof->delta;
    } else {
        throw ConfigError("complex too large for the exact oracle; pass --delta");
    }
    std::optional<double> one_norm = cfg.one_norm;
    if (!one_norm && prof) one_norm = prof->one_norm_H;

    const BneParams params{cfg.epsilon, cfg.eta, delta, one_norm};
    ShotPlan pl;
    try {
        pl = plan(cfg.algorithm, params);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    res.plan = pl;
    res.delta_used = delta;
    res.one_norm_used = one_norm.value_or(2.0);
    if (prof) res.ground_truth = prof->betti_normalised;

    std::vector<std::uint64_t> cps =
        cfg.checkpoints.empty() ? default_checkpoints(cfg.max_samples) : cfg.checkpoints;
    if (cps.empty() || cps.front() == 0) {
        throw ConfigError("checkpoints must be positive");
    }
    for (std::size_t t = 1; t < cps.size(); ++t) {
        if (cps[t] <= cps[t - 1]) {
            throw ConfigError("checkpoints must be strictly increasing");
        }
    }
    if (cps.back() > cfg.max_samples) {
        throw ConfigError("last checkpoint exceeds max_samples");
    }

    const std::size_t nb = pl.budgets.size();
    const std::size_t T = cps.size();
    const std::uint64_t Q = pl.total_samples();

    // checkpoint c allots floor(c * q_i / Q) samples to the power with planned
    // budget q_i: round-robin interleaving proportional to the plan
    std::vector<std::vector<std::uint64_t>> cuts(nb, std::vector<std::uint64_t>(T + 1, 0));
    for (std::size_t bi = 0; bi < nb; ++bi) {
        for (std::size_t t = 0; t < T; ++t) {
            const auto num = static_cast<unsigned __int128>(cps[t]) * pl.budgets[bi].samples;
            cuts[bi][t + 1] = static_cast<std::uint64_t>(num / Q);
        }
    }

    struct Item {
        std::uint32_t run, bi, seg;
        std::uint64_t lo, hi;
    };
    std::vector<Item> items;
    for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(cfg.runs); ++r) {
        for (std::uint32_t bi = 0; bi < nb; ++bi) {
            for (std::uint32_t t = 0; t < T; ++t) {
                const std::uint64_t lo = cuts[bi][t], hi = cuts[bi][t + 1];
                // fixed-size blocks inside each checkpoint segment keep the
                // summation order independent of the worker count
                for (std::uint64_t b = lo; b < hi; b += kSampleBlock) {
                    items.push_back({r, bi, t, b, std::min(hi, b + kSampleBlock)});
                }
            }
        }
    }

    const bool quantum = cfg.algorithm == Algorithm::qbne_chebyshev ||
                         cfg.algorithm == Algorithm::qbne_power;
    const Variant kind = cfg.algorithm == Algorithm::qbne_chebyshev
                             ? Variant::laplacian
                             : Variant::reflected;
    if (!quantum) cx.rows();  // build the row table before fanning out

    struct Ctx {
        std::unique_ptr<BlockApplier> applier;
    };
    std::vector<double> block_sums(items.size(), 0.0);
    run_items<Ctx>(
        items.size(), cfg.workers,
        [&] {
            Ctx c;
            if (quantum) c.applier = std::make_unique<BlockApplier>(BlockVariant{&cx, kind});
            return c;
        },
        [&](Ctx& c, std::size_t idx) {
            const Item& it = items[idx];
            const int power = pl.budgets[it.bi].power;
            const StreamKey key{cfg.base_seed, it.run,
                                static_cast<std::uint64_t>(power)};
            double s = 0.0;
            for (std::uint64_t i = it.lo; i < it.hi; ++i) {
                Rng rng = stream_rng(key, i);
                s += quantum ? static_cast<double>(quantum_sample(*c.applier, power, rng))
                             : sample_walk(cx, power, rng).value;
            }
            block_sums[idx] = s;
        });

    // fold blocks into per-(run, budget, segment) sums in fixed item order
    std::vector<double> seg_sums(static_cast<std::size_t>(cfg.runs) * nb * T, 0.0);
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const Item& it = items[idx];
        seg_sums[(static_cast<std::size_t>(it.run) * nb + it.bi) * T + it.seg] +=
            block_sums[idx];
    }

    res.traces.reserve(cfg.runs);
    for (int r = 0; r < cfg.runs; ++r) {
        ConvergenceTrace tr;
        tr.run_id = r;
        std::vector<double> prefix(nb, 0.0);
        for (std::size_t t = 0; t < T; ++t) {
            double est = pl.a0;
            for (std::size_t bi = 0; bi < nb; ++bi) {
                prefix[bi] += seg_sums[(static_cast<std::size_t>(r) * nb + bi) * T + t];
                const std::uint64_t c = cuts[bi][t + 1];
                if (c > 0) est += pl.coeffs[bi] * (prefix[bi] / static_cast<double>(c));
            }
            tr.rows.push_back({cps[t], est});
        }
        tr.final_estimate = tr.rows.back().estimate;
        res.traces.push_back(std::move(tr));
    }

    if (res.ground_truth) {
        // per checkpoint: how many runs are within epsilon from here on out
        std::vector<int> stay_counts(T, 0);
        for (const auto& tr : res.traces) {
            bool suffix_ok = true;
            for (std::size_t t = T; t-- > 0;) {
                if (std::abs(tr.rows[t].estimate - *res.ground_truth) > cfg.epsilon) {
                    suffix_ok = false;
                }
                if (suffix_ok) ++stay_counts[t];
            }
        }
        const int need = (9 * cfg.runs + 9) / 10;  // ceil(0.9 * runs)
        for (std::size_t t = 0; t < T; ++t) {
            if (stay_counts[t] >= need) {
                res.convergence_sample_count = cps[t];
                break;
            }
        }
    }
    return res;
}

void write_trace_csv(std::ostream& os, const ExperimentResult& r) {
    os << "run_id,sample_count,estimate\n";
    for (const auto& tr : r.traces) {
        for (const auto& row : tr.rows) {
            os << tr.run_id << ',' << row.sample_count << ','
               << format_sig(row.estimate) << '\n';
        }
    }
}

nlohmann::json summary_json(const ExperimentResult& r) {
    nlohmann::json j;
    j["algorithm"] = algorithm_name(r.config.algorithm);
    j["graph"] = r.config.graph_spec;
    j["k"] = r.config.k;
    j["epsilon"] = round_sig(r.config.epsilon);
    j["eta"] = round_sig(r.config.eta);
    j["delta"] = round_sig(r.delta_used);
    j["one_norm"] = round_sig(r.one_norm_used);
    j["ground_truth"] =
        r.ground_truth ? nlohmann::json(round_sig(*r.ground_truth)) : nlohmann::json();
    j["convergence_sample_count"] = r.convergence_sample_count
                                        ? nlohmann::json(*r.convergence_sample_count)
                                        : nlohmann::json();
    j["runs"] = r.config.runs;
    j["max_samples"] = r.config.max_samples;
    j["seed"] = r.config.base_seed;
    return j;
}

nlohmann::json inspect_json(const Graph& g, const std::string& spec, int k) {
    const ComplexProfile p = profile(g, k);
    nlohmann::json j;
    j["graph"] = spec;
    j["n"] = p.n;
    j["k"] = p.k;
    j["num_simplices"] = p.size;
    j["betti"] = p.betti;
    j["betti_normalised"] = round_sig(p.betti_normalised);
    j["delta"] = round_sig(p.delta);
    j["delta_degenerate"] = p.delta_degenerate;
    j["one_norm_H"] = round_sig(p.one_norm_H);
    return j;
}

std::string bounds_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream os;
    os << "algorithm,degree,sample_count,step_count,epsilon,eta,delta,one_norm\n";
    for (const auto& r : reports) {
        os << algorithm_name(r.algorithm) << ',' << r.degree << ',' << r.sample_count
           << ',' << r.step_count << ',' << format_sig(r.epsilon) << ','
           << format_sig(r.eta) << ',' << format_sig(r.delta) << ','
           << format_sig(r.one_norm) << '\n';
    }
    return os.str();
}

}  // namespace bne
