// maxcon: command-line front end for max-consensus analysis.
//
// Exit codes: 0 success / consensus reached, 1 no consensus,
// 2 input error, 3 fault detected.

#include "maxcon/consensus.hpp"
#include "maxcon/error.hpp"
#include "maxcon/generators.hpp"
#include "maxcon/graph.hpp"
#include "maxcon/io.hpp"
#include "maxcon/mortality.hpp"
#include "maxcon/random.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace maxcon;

constexpr int kExitOk = 0;
constexpr int kExitNoConsensus = 1;
constexpr int kExitInputError = 2;
constexpr int kExitFault = 3;

Digraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    try {
        return read_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

StateVector initial_state(const std::vector<std::string>& tokens, std::optional<std::uint64_t> random_seed,
                          std::size_t n) {
    if (random_seed) {
        if (!tokens.empty()) throw std::invalid_argument("--init and --random are mutually exclusive");
        Rng rng(*random_seed);
        return distinct_initial_values(n, rng);
    }
    if (tokens.empty()) throw std::invalid_argument("an initial condition is required (--init or --random)");
    StateVector x;
    for (const auto& t : tokens) x.push_back(parse_extended_real(t));
    if (x.size() != n) {
        throw DimensionError("initial condition has " + std::to_string(x.size()) + " values, graph has " +
                             std::to_string(n) + " nodes");
    }
    if (!all_finite(x)) throw std::invalid_argument("initial values must be finite");
    return x;
}

void print_trace(const Trace& trace, bool json) {
    if (json) {
        std::cout << trace_to_json(trace).dump() << '\n';
    } else {
        std::cout << format_trace(trace);
    }
    if (trace.converged_at) {
        std::cerr << "consensus " << to_string(trace.states[*trace.converged_at].front()) << " at k="
                  << *trace.converged_at << '\n';
    } else {
        std::cerr << "no consensus after " << trace.states.size() - 1 << " steps\n";
    }
}

int cmd_analyze(const std::string& path) {
    const Digraph g = load_graph(path);
    const AdjMatrix a = adjacency(g);
    const Diameter d = diameter(g);
    const auto verdict = converges_all_inits_fixed(a);
    const auto exponent = min_zero_exponent(a);

    Json out;
    out["n"] = g.size();
    out["strongly_connected"] = d.is_finite();
    out["diameter"] = d.is_finite() ? Json(*d.value) : Json("inf");
    out["min_zero_exponent"] = exponent ? Json(*exponent) : Json(nullptr);
    out["converges_all_inits"] = verdict.converges_for_all_inits;
    out["steps"] = verdict.steps ? Json(*verdict.steps) : Json(nullptr);
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_simulate(const std::string& path, const std::vector<std::string>& init,
                 std::optional<std::uint64_t> random_seed, std::optional<std::size_t> max_steps, bool json) {
    const Digraph g = load_graph(path);
    const StateVector x0 = initial_state(init, random_seed, g.size());
    const Trace trace = run_fixed(adjacency(g), x0, max_steps.value_or(g.size()));
    print_trace(trace, json);
    return trace.converged_at ? kExitOk : kExitNoConsensus;
}

int cmd_switching(const std::string& path, const std::vector<std::string>& init,
                  std::optional<std::uint64_t> random_seed, bool json) {
    const auto schedule = schedule_from_json(read_json_file(path), std::filesystem::path(path).parent_path());
    const StateVector x0 = initial_state(init, random_seed, schedule.dimension());
    const Trace trace = run_switching(schedule, x0);
    print_trace(trace, json);
    return is_consensus(trace.states.back()) ? kExitOk : kExitNoConsensus;
}

int cmd_mortality(const std::string& path) {
    const auto pool = pool_from_json(read_json_file(path), std::filesystem::path(path).parent_path());
    std::cout << mortality_result_to_json(mortality_witness(pool)).dump() << '\n';
    return kExitOk;
}

struct GenerateOptions {
    std::string family;
    std::optional<std::size_t> n;
    double p = 0.0;
    std::size_t k = 2;
    double beta = 0.0;
    std::size_t m = 1;
    std::uint64_t seed = 0;
    std::string spec_file;
    std::string output;
    bool dot = false;
    std::optional<std::size_t> summary_samples;
};

int cmd_generate(const GenerateOptions& opt) {
    GenSpec spec;
    if (!opt.spec_file.empty()) {
        spec = genspec_from_json(read_json_file(opt.spec_file));
    } else {
        if (opt.family.empty() || !opt.n) throw std::invalid_argument("generate needs --family and --n (or --spec)");
        spec.family = parse_family(opt.family);
        spec.n = *opt.n;
        spec.p = opt.p;
        spec.k = opt.k;
        spec.beta = opt.beta;
        spec.m = opt.m;
        spec.seed = opt.seed;
        spec.validate();
    }

    std::string text;
    if (opt.summary_samples) {
        Json out = diameter_summary_to_json(measure_diameter_distribution(spec, *opt.summary_samples));
        out["family"] = to_string(spec.family);
        out["n"] = spec.n;
        out["seed"] = spec.seed;
        out["rng"] = kRngAlgorithm;
        text = out.dump() + "\n";
    } else {
        const Digraph g = generate(spec);
        if (opt.dot) {
            text = to_dot(g);
        } else {
            text = "# family=" + to_string(spec.family) + " n=" + std::to_string(spec.n) +
                   " seed=" + std::to_string(spec.seed) + " rng=" + kRngAlgorithm + "\n" + format_edge_list(g);
        }
    }
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw ParseError(0, "cannot write " + opt.output);
        out << text;
    }
    return kExitOk;
}

int cmd_faultscan(const std::string& path, std::size_t expected_steps, std::optional<std::size_t> trials,
                  std::uint64_t seed, bool json) {
    const Digraph g = load_graph(path);
    const FaultReport report = fault_check(adjacency(g), expected_steps, trials.value_or(g.size()), seed);
    if (json) {
        std::cout << fault_report_to_json(report, expected_steps).dump() << '\n';
    } else if (report.fault) {
        std::cout << "FAULT " << report.failed_trials << "/" << report.trials
                  << " trials missed consensus within " << expected_steps << " steps (first with maximum at node "
                  << *report.first_failed_argmax + 1 << ")\n";
    } else {
        std::cout << "CLEAN " << report.trials << " trials reached consensus within " << expected_steps
                  << " steps\n";
    }
    return report.fault ? kExitFault : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-consensus analysis over directed networks in the max-plus semiring"};
    app.require_subcommand(1, 1);

    std::string file;
    std::vector<std::string> init;
    std::optional<std::uint64_t> random_seed;
    std::optional<std::size_t> max_steps;
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "Connectivity, diameter and convergence verdict of a graph");
    analyze->add_option("graph", file, "Edge-list file")->required();
    analyze->add_flag("--json", json, "Machine-readable output (always JSON)");

    auto* simulate = app.add_subcommand("simulate", "Run the protocol on a fixed graph");
    simulate->add_option("graph", file, "Edge-list file")->required();
    auto* sim_init = simulate->add_option("--init", init, "Initial values, one per node")->expected(1, -1);
    simulate->add_option("--random", random_seed, "Random distinct initial values from this seed")->excludes(sim_init);
    simulate->add_option("--max-steps", max_steps, "Round limit (default n)");
    simulate->add_flag("--json", json, "Emit the trace as JSON");

    auto* switching = app.add_subcommand("switching", "Run the protocol under a switching schedule");
    switching->add_option("schedule", file, "Schedule JSON file")->required();
    auto* sw_init = switching->add_option("--init", init, "Initial values, one per node")->expected(1, -1);
    switching->add_option("--random", random_seed, "Random distinct initial values from this seed")->excludes(sw_init);
    switching->add_flag("--json", json, "Emit the trace as JSON");

    auto* mortality = app.add_subcommand("mortality", "Decide mortality of a matrix pool and print a witness");
    mortality->add_option("pool", file, "Pool JSON file")->required();
    mortality->add_flag("--json", json, "Machine-readable output (always JSON)");

    GenerateOptions gen;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a graph from a seeded network family");
    generate_cmd->add_option("--family", gen.family, "complete|cycle|path|star_in|erdos_renyi|watts_strogatz|barabasi_albert");
    generate_cmd->add_option("--n", gen.n, "Node count");
    generate_cmd->add_option("--p", gen.p, "Edge probability (erdos_renyi)");
    generate_cmd->add_option("--k", gen.k, "Even lattice degree (watts_strogatz)");
    generate_cmd->add_option("--beta", gen.beta, "Rewiring probability (watts_strogatz)");
    generate_cmd->add_option("--m", gen.m, "Attachment count (barabasi_albert)");
    generate_cmd->add_option("--seed", gen.seed, "64-bit unsigned seed");
    generate_cmd->add_option("--spec", gen.spec_file, "Generator spec JSON file (replaces the flags above)");
    generate_cmd->add_option("-o,--output", gen.output, "Write to this file instead of stdout");
    generate_cmd->add_flag("--dot", gen.dot, "Emit Graphviz DOT instead of an edge list");
    generate_cmd->add_option("--summary", gen.summary_samples, "Report diameter statistics over this many samples");
    generate_cmd->add_flag("--json", json, "Accepted for uniformity; --summary output is JSON");

    std::size_t expected_steps = 0;
    std::optional<std::size_t> trials;
    std::uint64_t seed = 0;
    auto* faultscan = app.add_subcommand("faultscan", "Detect faults by timed max-consensus rounds");
    faultscan->add_option("graph", file, "Edge-list file")->required();
    faultscan->add_option("--expected-steps", expected_steps, "Rounds a healthy network needs")->required();
    faultscan->add_option("--trials", trials, "Number of trials (default n)");
    faultscan->add_option("--seed", seed, "64-bit unsigned seed");
    faultscan->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*analyze) return cmd_analyze(file);
        if (*simulate) return cmd_simulate(file, init, random_seed, max_steps, json);
        if (*switching) return cmd_switching(file, init, random_seed, json);
        if (*mortality) return cmd_mortality(file);
        if (*generate_cmd) return cmd_generate(gen);
        if (*faultscan) return cmd_faultscan(file, expected_steps, trials, seed, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
