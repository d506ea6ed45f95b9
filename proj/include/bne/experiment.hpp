#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bne/bounds.hpp"
#include "bne/estimators.hpp"
#include "bne/oracle.hpp"

namespace bne {

// Raised for malformed configuration (CLI exit code 2) as opposed to
// filesystem problems (IoError, exit code 3).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string graph_spec;
    int k = 1;
    Algorithm algorithm = Algorithm::qbne_power;
    double epsilon = 0.1;
    double eta = 0.1;
    std::optional<double> delta;      // default: exact oracle value
    std::optional<double> one_norm;   // default: exact oracle value
    std::uint64_t base_seed = 0;
    int runs = 10;
    std::uint64_t max_samples = 1000000;
    int workers = 1;
    // strictly increasing running-estimate checkpoints; empty = default
    // log-spaced schedule from 100 to max_samples
    std::vector<std::uint64_t> checkpoints;
};

std::vector<std::uint64_t> default_checkpoints(std::uint64_t max_samples,
                                               int points = 40);

struct CheckpointRow {
    std::uint64_t sample_count = 0;
    double estimate = 0.0;
};

struct ConvergenceTrace {
    int run_id = 0;
    std::vector<CheckpointRow> rows;
    double final_estimate = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    ShotPlan plan;
    double delta_used = 0.0;
    double one_norm_used = 2.0;
    std::optional<double> ground_truth;   // oracle value when available
    std::vector<ConvergenceTrace> traces;
    // first checkpoint where >= ceil(0.9 * runs) runs stay within epsilon of
    // the ground truth for every later checkpoint as well
    std::optional<std::uint64_t> convergence_sample_count;
};

// Runs `runs` independent repetitions of the algorithm with the total sample
// budget max_samples, split across trace powers proportionally to the planned
// per-power budgets, recording the running estimate at each checkpoint.
ExperimentResult run_experiment(const CliqueComplex& cx, const ExperimentConfig& cfg);

// rows "run_id,sample_count,estimate"; floats at 6 significant digits;
// byte-identical for identical configs, whatever the worker count
void write_trace_csv(std::ostream& os, const ExperimentResult& r);

nlohmann::json summary_json(const ExperimentResult& r);

nlohmann::json inspect_json(const Graph& g, const std::string& spec, int k);

// one BoundReport row per algorithm at the given accuracy target
std::string bounds_csv(const std::vector<BoundReport>& reports);

std::string format_sig(double v);    // 6 significant digits

}  // namespace bne
