#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bne/experiment.hpp"

namespace {

constexpr bne::Algorithm kAllAlgorithms[] = {
    bne::Algorithm::qbne_chebyshev,
    bne::Algorithm::cbne_power,
    bne::Algorithm::cbne_chebyshev,
    bne::Algorithm::qbne_power,
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bne::IoError("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw bne::IoError("write failed: " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
    }
}

bne::Algorithm parse_algorithm(const std::string& name) {
    const auto a = bne::algorithm_from_name(name);
    if (!a) {
        throw bne::ConfigError(
            "unknown algorithm '" + name +
            "' (expected qbne-chebyshev, cbne-power, cbne-chebyshev or qbne-power)");
    }
    return *a;
}

void cmd_inspect(const std::string& spec, int k, const std::string& out_path) {
    const bne::Graph g = bne::parse_graph_spec(spec);
    emit(out_path, bne::inspect_json(g, spec, k).dump(2) + "\n");
}

void cmd_bounds(const std::string& spec, int k, double epsilon, double eta,
                std::optional<double> delta, std::optional<double> one_norm,
                const std::string& out_path) {
    const bne::Graph g = bne::parse_graph_spec(spec);
    const bne::ComplexProfile prof = bne::profile(g, k);
    bne::BneParams params;
    params.epsilon = epsilon;
    params.eta = eta;
    params.delta = delta.value_or(prof.delta);
    params.one_norm = one_norm ? one_norm : std::optional<double>(prof.one_norm_H);
    std::vector<bne::BoundReport> reports;
    for (const auto a : kAllAlgorithms) reports.push_back(bne::bound(a, params));
    emit(out_path, bne::bounds_csv(reports));
}

// runs one experiment and writes PREFIX.csv (traces) + PREFIX.json (summary)
void execute_run(const bne::ExperimentConfig& cfg, const std::string& prefix) {
    const bne::Graph g = bne::parse_graph_spec(cfg.graph_spec);
    const bne::CliqueComplex cx(g, cfg.k);
    const bne::ExperimentResult res = bne::run_experiment(cx, cfg);
    std::ostringstream csv;
    bne::write_trace_csv(csv, res);
    write_file(prefix + ".csv", csv.str());
    write_file(prefix + ".json", bne::summary_json(res).dump(2) + "\n");
}

void cmd_bench(bne::ExperimentConfig base, const std::string& dir) {
    struct Cell {
        const char* spec;
        int k;
        const char* tag;
    };
    constexpr Cell kGrid[] = {
        {"multipartite:2x3", 1, "2x3-k1"},
        {"multipartite:2x4", 1, "2x4-k1"},
        {"multipartite:3x3", 2, "3x3-k2"},
        {"multipartite:3x4", 2, "3x4-k2"},
    };
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw bne::IoError("cannot create directory " + dir + ": " + ec.message());
    for (const auto& cell : kGrid) {
        for (const auto a : kAllAlgorithms) {
            bne::ExperimentConfig cfg = base;
            cfg.graph_spec = cell.spec;
            cfg.k = cell.k;
            cfg.algorithm = a;
            const std::string prefix =
                dir + "/" + bne::algorithm_name(a) + "-" + cell.tag;
            std::cerr << "bench: " << bne::algorithm_name(a) << " on " << cell.spec
                      << " k=" << cell.k << " -> " << prefix << ".csv\n";
            execute_run(cfg, prefix);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo and exact estimation of normalised Betti numbers "
                 "of clique complexes"};
    app.require_subcommand(1);

    std::string graph_spec, out_path, algorithm_name_arg;
    int k = 1;
    double epsilon = 0.1, eta = 0.1;
    std::optional<double> delta_opt, one_norm_opt;
    std::uint64_t seed = 0, max_samples = 1000000;
    int runs = 10, workers = 1;

    const std::string graph_help =
        "graph spec: 'multipartite:CxM' or a path to an edge-list file "
        "(one 'u v' pair per line, 0-based)";

    auto add_accuracy = [&](CLI::App* cmd) {
        cmd->add_option("--epsilon", epsilon, "additive accuracy target")
            ->capture_default_str();
        cmd->add_option("--eta", eta, "failure probability bound")
            ->capture_default_str();
    };
    auto add_overrides = [&](CLI::App* cmd) {
        cmd->add_option("--delta", delta_opt,
                        "spectral gap lower bound (default: exact oracle value)");
        cmd->add_option("--one-norm", one_norm_opt,
                        "walk operator row 1-norm bound (default: oracle value)");
    };
    auto add_run_flags = [&](CLI::App* cmd) {
        add_accuracy(cmd);
        add_overrides(cmd);
        cmd->add_option("--seed", seed, "base seed for the per-sample RNG streams")
            ->envname("BNE_SEED")
            ->capture_default_str();
        cmd->add_option("--runs", runs, "independent repetitions")
            ->capture_default_str();
        cmd->add_option("--max-samples", max_samples,
                        "total sample budget per run (checkpoint axis)")
            ->capture_default_str();
        cmd->add_option("--workers", workers, "worker threads (output is identical "
                        "for any value)")
            ->capture_default_str();
    };

    auto* inspect = app.add_subcommand(
        "inspect", "exact spectral profile of a clique complex (JSON)");
    inspect->add_option("--graph", graph_spec, graph_help)->required();
    inspect->add_option("--k", k, "simplex dimension")->capture_default_str();
    inspect->add_option("--out", out_path, "output file (default: stdout)");

    auto* bounds = app.add_subcommand(
        "bounds", "theoretical sample/step-count bounds for all four algorithms (CSV)");
    bounds->add_option("--graph", graph_spec, graph_help)->required();
    bounds->add_option("--k", k, "simplex dimension")->capture_default_str();
    add_accuracy(bounds);
    add_overrides(bounds);
    bounds->add_option("--out", out_path, "output file (default: stdout)");

    auto* run = app.add_subcommand(
        "run", "convergence experiment; writes OUT.csv traces and OUT.json summary");
    run->add_option("--graph", graph_spec, graph_help)->required();
    run->add_option("--k", k, "simplex dimension")->capture_default_str();
    run->add_option("--algorithm", algorithm_name_arg,
                    "qbne-chebyshev | cbne-power | cbne-chebyshev | qbne-power")
        ->required();
    add_run_flags(run);
    run->add_option("--out", out_path, "output path prefix")->required();

    auto* bench = app.add_subcommand(
        "bench", "all four algorithms on the four benchmark graphs, into --out DIR");
    add_run_flags(bench);
    bench->add_option("--out", out_path, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are configuration errors
    }

    try {
        if (inspect->parsed()) {
            cmd_inspect(graph_spec, k, out_path);
        } else if (bounds->parsed()) {
            cmd_bounds(graph_spec, k, epsilon, eta, delta_opt, one_norm_opt, out_path);
        } else {
            bne::ExperimentConfig cfg;
            cfg.graph_spec = graph_spec;
            cfg.k = k;
            cfg.epsilon = epsilon;
            cfg.eta = eta;
            cfg.delta = delta_opt;
            cfg.one_norm = one_norm_opt;
            cfg.base_seed = seed;
            cfg.runs = runs;
            cfg.max_samples = max_samples;
            cfg.workers = workers;
            if (run->parsed()) {
                cfg.algorithm = parse_algorithm(algorithm_name_arg);
                execute_run(cfg, out_path);
            } else {
                cmd_bench(cfg, out_path);
            }
        }
    } catch (const bne::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bne::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // remaining runtime errors come from file handling (open/parse I/O)
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
