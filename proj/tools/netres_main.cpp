// netres: generate, measure and attack networks from the command line.
//
// Exit codes: 0 success, 1 runtime/data error, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netres/attacks.hpp"
#include "netres/generators.hpp"
#include "netres/harness.hpp"
#include "netres/ingest.hpp"
#include "netres/metrics.hpp"
#include "netres/rng.hpp"

namespace fs = std::filesystem;
using namespace netres;

namespace {

std::string fmt6(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

FileFormat format_from_flag(const std::string& flag) {
    if (flag == "auto") return FileFormat::Auto;
    if (flag == "edgelist" || flag == "snap") return FileFormat::EdgeList;
    if (flag == "pajek" || flag == "net") return FileFormat::Pajek;
    if (flag == "gml") return FileFormat::Gml;
    throw CLI::ValidationError("--format", "unknown format '" + flag + "'");
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failure on '" + path.string() + "'");
}

std::vector<double> parse_checkpoints(const std::string& list, double step) {
    std::vector<double> checkpoints;
    if (!list.empty()) {
        std::stringstream stream(list);
        std::string item;
        while (std::getline(stream, item, ',')) {
            try {
                checkpoints.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw std::runtime_error("bad checkpoint '" + item + "' in --checkpoints");
            }
        }
    } else {
        if (step <= 0.0 || step > 1.0) {
            throw std::runtime_error("--step must lie in (0,1]");
        }
        for (std::size_t k = 0; double(k) * step < 1.0 - 1e-9; ++k) {
            checkpoints.push_back(double(k) * step);
        }
    }
    return checkpoints;
}

struct GenerateArgs {
    std::string model;
    std::uint32_t nodes = 0;
    std::size_t edges = 0;
    double beta = kDefaultRewiringBeta;
    double p_triad = kDefaultTriadProbability;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_generate(const GenerateArgs& args) {
    GeneratorSpec spec;
    spec.model = model_from_name(args.model);
    spec.nodes = args.nodes;
    spec.target_edges = args.edges;
    spec.beta = args.beta;
    spec.p_triad = args.p_triad;
    spec.seed = args.seed;
    Graph g = generate(spec);
    auto out = open_output(args.out);
    write_canonical(g, nullptr, out);
    finish_output(out, args.out);
    std::cerr << "generated " << model_name(spec.model) << ": n=" << g.active_nodes()
              << " m=" << g.active_edges() << " -> " << args.out << "\n";
    return 0;
}

struct StatsArgs {
    std::string in;
    std::string format = "auto";
    bool no_apl = false;
    std::size_t apl_samples = 0;
    std::uint64_t apl_seed = 0;
    bool exclude_low_degree = false;
    std::string degree_hist;
};

int cmd_stats(const StatsArgs& args) {
    IngestResult ingested = load_graph(args.in, format_from_flag(args.format));
    StatsOptions options;
    options.compute_apl = !args.no_apl;
    options.apl_samples = args.apl_samples;
    options.apl_seed = args.apl_seed;
    options.low_degree = args.exclude_low_degree ? LowDegreeClustering::Exclude
                                                 : LowDegreeClustering::CountAsZero;
    NetworkStats stats = compute_stats(ingested.graph, options);
    std::cout << "n " << stats.nodes << "\n";
    std::cout << "m " << stats.edges << "\n";
    std::cout << "edge_node_ratio " << fmt6(stats.edge_node_ratio) << "\n";
    std::cout << "max_degree " << stats.max_degree << "\n";
    std::cout << "clustering_coefficient " << fmt6(stats.clustering_coefficient) << "\n";
    if (stats.average_path_length) {
        std::cout << "apl " << fmt6(*stats.average_path_length) << "\n";
    }
    if (stats.apl_standard_error) {
        std::cout << "apl_standard_error " << fmt6(*stats.apl_standard_error) << "\n";
    }
    if (!args.degree_hist.empty()) {
        auto out = open_output(args.degree_hist);
        out << "# degree count\n";
        for (const auto& [degree, count] : stats.degree_histogram) {
            out << degree << ' ' << count << "\n";
        }
        finish_output(out, args.degree_hist);
    }
    return 0;
}

struct AttackArgs {
    std::string in;
    std::string format = "auto";
    std::string strategy;
    std::uint64_t seed = 0;
    bool recompute = false;
    bool randomize_ties = false;
    std::string degree_basis = "current";
    std::string checkpoints;
    double step = 0.1;
    bool no_apl = false;
    std::size_t apl_samples = 0;
    std::string out;
    std::string plan_out;
};

int cmd_attack(const AttackArgs& args) {
    IngestResult ingested = load_graph(args.in, format_from_flag(args.format));
    PlanOptions plan_options;
    plan_options.recompute = args.recompute;
    plan_options.tie_break = args.randomize_ties ? TieBreak::SeededShuffle : TieBreak::ById;
    plan_options.degree_basis =
        args.degree_basis == "initial" ? DegreeBasis::Initial : DegreeBasis::Current;
    AttackKind kind = attack_kind_from_name(args.strategy);
    AttackPlan plan = make_plan(ingested.graph, kind, args.seed, plan_options);

    if (!args.plan_out.empty()) {
        auto out = open_output(args.plan_out);
        write_plan(plan, out);
        finish_output(out, args.plan_out);
    }

    ExecuteOptions exec;
    exec.compute_apl = !args.no_apl;
    exec.apl_samples = args.apl_samples;
    exec.apl_seed = mix_seed(args.seed, 0x0a91);
    std::vector<double> checkpoints = parse_checkpoints(args.checkpoints, args.step);
    ResilienceSeries series = execute(ingested.graph, plan, checkpoints, exec);

    auto out = open_output(args.out);
    if (series.fallback_onset) {
        out << "# fallback_onset=" << fmt6(*series.fallback_onset) << "\n";
    }
    out << "frac_removed,lcc_frac,apl\n";
    for (const SeriesPoint& p : series.points) {
        out << fmt6(p.fraction_removed) << ',' << fmt6(p.lcc_fraction) << ',';
        if (p.apl) out << fmt6(*p.apl);
        out << "\n";
    }
    finish_output(out, args.out);
    std::cerr << "attack " << attack_kind_name(kind) << " on " << args.in << " -> " << args.out
              << "\n";
    return 0;
}

struct SweepArgs {
    std::string config;
    std::string out_dir;
    unsigned jobs = 1;
};

int cmd_sweep(const SweepArgs& args) {
    ExperimentConfig config = load_config_file(args.config);
    fs::create_directories(args.out_dir);
    std::cerr << "sweep: " << config.sources.size() << " sources x "
              << config.strategies.size() << " strategies x " << config.replicas
              << " replicas\n";
    ExperimentResult result = run_experiment(config, args.jobs);

    const fs::path raw_path = fs::path(args.out_dir) / "raw.csv";
    const fs::path agg_path = fs::path(args.out_dir) / "aggregate.csv";
    const fs::path summary_path = fs::path(args.out_dir) / "summary.json";
    {
        auto out = open_output(raw_path);
        write_raw_csv(result, out);
        finish_output(out, raw_path);
    }
    {
        auto out = open_output(agg_path);
        write_aggregate_csv(result, out);
        finish_output(out, agg_path);
    }
    {
        auto out = open_output(summary_path);
        write_summary_json(result, out);
        finish_output(out, summary_path);
    }
    std::cerr << "sweep: wrote " << raw_path.string() << ", " << agg_path.string() << ", "
              << summary_path.string() << "\n";
    return 0;
}

struct ConvertArgs {
    std::string in;
    std::string format = "auto";
    std::string out;
};

int cmd_convert(const ConvertArgs& args) {
    IngestResult ingested = load_graph(args.in, format_from_flag(args.format));
    auto out = open_output(args.out);
    write_canonical(ingested.graph, &ingested.labels, out);
    finish_output(out, args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network resilience toolkit: generators, attack strategies, metrics"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "generate a synthetic network");
    generate->add_option("--model", generate_args.model,
                         "random | small-world | scale-free | small-world-scale-free")
        ->required();
    generate->add_option("--nodes", generate_args.nodes, "node count")->required();
    generate->add_option("--edges", generate_args.edges, "target edge count")->required();
    generate->add_option("--beta", generate_args.beta, "small-world rewiring probability");
    generate->add_option("--p-triad", generate_args.p_triad,
                         "Holme-Kim triad-formation probability");
    generate->add_option("--seed", generate_args.seed, "RNG seed (default 0)");
    generate->add_option("--out", generate_args.out, "output edge-list path")->required();

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "network statistics of a graph file");
    stats->add_option("--in", stats_args.in, "input graph file")->required();
    stats->add_option("--format", stats_args.format, "auto | edgelist | pajek | gml");
    stats->add_flag("--no-apl", stats_args.no_apl, "skip average path length");
    stats->add_option("--apl-samples", stats_args.apl_samples,
                      "estimate APL from this many BFS sources (0 = exact)");
    stats->add_option("--apl-seed", stats_args.apl_seed, "seed for APL sampling");
    stats->add_flag("--clustering-exclude-low-degree", stats_args.exclude_low_degree,
                    "average local clustering over degree>=2 nodes only");
    stats->add_option("--degree-hist", stats_args.degree_hist,
                      "write the degree histogram to this path");

    AttackArgs attack_args;
    auto* attack = app.add_subcommand("attack", "run one attack strategy over checkpoints");
    attack->add_option("--in", attack_args.in, "input graph file")->required();
    attack->add_option("--format", attack_args.format, "auto | edgelist | pajek | gml");
    attack->add_option("--strategy", attack_args.strategy,
                       "targeted-nodes | random-nodes | almost-random-nodes | targeted-edges "
                       "| random-edges | almost-random-edges")
        ->required();
    attack->add_option("--seed", attack_args.seed, "RNG seed (default 0)");
    attack->add_flag("--recompute", attack_args.recompute,
                     "re-rank targeted nodes after every removal");
    attack->add_flag("--randomize-ties", attack_args.randomize_ties,
                     "break targeted-order ties by a seeded shuffle instead of id");
    attack->add_option("--degree-basis", attack_args.degree_basis,
                       "almost-random threshold basis: current | initial");
    attack->add_option("--checkpoints", attack_args.checkpoints,
                       "comma-separated fractions (default 0,0.1,...,0.9)");
    attack->add_option("--step", attack_args.step, "checkpoint step when --checkpoints unset");
    attack->add_flag("--no-apl", attack_args.no_apl, "skip average path length");
    attack->add_option("--apl-samples", attack_args.apl_samples,
                       "estimate APL from this many BFS sources (0 = exact)");
    attack->add_option("--out", attack_args.out, "output CSV path")->required();
    attack->add_option("--plan-out", attack_args.plan_out, "also write the removal schedule");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "full experiment sweep from a JSON config");
    sweep->add_option("--config", sweep_args.config, "experiment config JSON")->required();
    sweep->add_option("--out-dir", sweep_args.out_dir, "output directory")->required();
    sweep->add_option("--jobs", sweep_args.jobs, "parallel workers (default 1)");

    ConvertArgs convert_args;
    auto* convert = app.add_subcommand("convert", "transcode a graph to canonical edge list");
    convert->add_option("--in", convert_args.in, "input graph file")->required();
    convert->add_option("--format", convert_args.format, "auto | edgelist | pajek | gml");
    convert->add_option("--out", convert_args.out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(generate_args);
        if (stats->parsed()) return cmd_stats(stats_args);
        if (attack->parsed()) return cmd_attack(attack_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (convert->parsed()) return cmd_convert(convert_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
