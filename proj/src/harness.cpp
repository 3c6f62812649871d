#include "netres/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "netres/ingest.hpp"
#include "netres/metrics.hpp"
#include "netres/rng.hpp"

namespace netres {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string text = "invalid experiment config:";
    for (const auto& p : problems) {
        text += "\n  - " + p;
    }
    return text;
}

// %.6g: six significant digits, stable across runs
std::string fmt6(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

std::string StrategySpec::label() const {
    std::string text = attack_kind_name(kind);
    if (recompute && kind == AttackKind::TargetedNodes) text += "+recompute";
    return text;
}

std::vector<double> default_checkpoints() {
    std::vector<double> f;
    for (int i = 0; i < 10; ++i) f.push_back(double(i) / 10.0);
    return f;
}

namespace {

using nlohmann::json;

GeneratorSpec parse_generator(const json& spec, const std::string& where,
                              std::vector<std::string>& problems) {
    GeneratorSpec gen;
    if (!spec.contains("model") || !spec["model"].is_string()) {
        problems.push_back(where + ": generator needs a string 'model'");
    } else {
        try {
            gen.model = model_from_name(spec["model"].get<std::string>());
        } catch (const std::exception& e) {
            problems.push_back(where + ": " + e.what());
        }
    }
    if (!spec.contains("nodes") || !spec["nodes"].is_number_unsigned()) {
        problems.push_back(where + ": generator needs an unsigned 'nodes'");
    } else {
        gen.nodes = spec["nodes"].get<std::uint32_t>();
        if (gen.nodes < 2) problems.push_back(where + ": nodes must be >= 2");
    }
    if (!spec.contains("edges") || !spec["edges"].is_number_unsigned()) {
        problems.push_back(where + ": generator needs an unsigned 'edges'");
    } else {
        gen.target_edges = spec["edges"].get<std::size_t>();
    }
    if (spec.contains("beta")) {
        if (!spec["beta"].is_number()) {
            problems.push_back(where + ": beta must be a number");
        } else {
            gen.beta = spec["beta"].get<double>();
            if (gen.beta < 0.0 || gen.beta > 1.0) {
                problems.push_back(where + ": beta must lie in [0,1]");
            }
        }
    }
    if (spec.contains("p_triad")) {
        if (!spec["p_triad"].is_number()) {
            problems.push_back(where + ": p_triad must be a number");
        } else {
            gen.p_triad = spec["p_triad"].get<double>();
            if (gen.p_triad < 0.0 || gen.p_triad > 1.0) {
                problems.push_back(where + ": p_triad must lie in [0,1]");
            }
        }
    }
    return gen;
}

}  // namespace

ExperimentConfig load_config(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("JSON parse failure: ") + e.what()});
    }

    ExperimentConfig config;
    std::vector<std::string> problems;

    if (!doc.contains("sources") || !doc["sources"].is_array() || doc["sources"].empty()) {
        problems.push_back("'sources' must be a non-empty array");
    } else {
        std::size_t i = 0;
        for (const auto& entry : doc["sources"]) {
            const std::string where = "sources[" + std::to_string(i++) + "]";
            SourceSpec source;
            if (!entry.contains("name") || !entry["name"].is_string() ||
                entry["name"].get<std::string>().empty()) {
                problems.push_back(where + ": needs a non-empty string 'name'");
            } else {
                source.name = entry["name"].get<std::string>();
            }
            const bool has_path = entry.contains("path");
            const bool has_gen = entry.contains("generator");
            if (has_path == has_gen) {
                problems.push_back(where + ": needs exactly one of 'path' or 'generator'");
            } else if (has_path) {
                if (!entry["path"].is_string()) {
                    problems.push_back(where + ": 'path' must be a string");
                } else {
                    source.origin = std::filesystem::path(entry["path"].get<std::string>());
                }
            } else {
                source.origin = parse_generator(entry["generator"], where, problems);
            }
            config.sources.push_back(std::move(source));
        }
    }

    if (!doc.contains("strategies") || !doc["strategies"].is_array() ||
        doc["strategies"].empty()) {
        problems.push_back("'strategies' must be a non-empty array");
    } else {
        std::size_t i = 0;
        for (const auto& entry : doc["strategies"]) {
            const std::string where = "strategies[" + std::to_string(i++) + "]";
            StrategySpec strategy;
            try {
                if (entry.is_string()) {
                    strategy.kind = attack_kind_from_name(entry.get<std::string>());
                } else if (entry.is_object() && entry.contains("kind") &&
                           entry["kind"].is_string()) {
                    strategy.kind = attack_kind_from_name(entry["kind"].get<std::string>());
                    if (entry.contains("recompute")) {
                        if (!entry["recompute"].is_boolean()) {
                            problems.push_back(where + ": 'recompute' must be a boolean");
                        } else {
                            strategy.recompute = entry["recompute"].get<bool>();
                        }
                    }
                } else {
                    problems.push_back(where + ": must be a strategy name or {kind, recompute}");
                }
            } catch (const std::exception& e) {
                problems.push_back(where + ": " + e.what());
            }
            config.strategies.push_back(strategy);
        }
    }

    if (doc.contains("replicas")) {
        if (!doc["replicas"].is_number_unsigned() || doc["replicas"].get<std::uint64_t>() == 0) {
            problems.push_back("'replicas' must be a positive integer");
        } else {
            config.replicas = doc["replicas"].get<std::uint32_t>();
        }
    }
    if (doc.contains("base_seed")) {
        if (!doc["base_seed"].is_number_unsigned()) {
            problems.push_back("'base_seed' must be an unsigned integer");
        } else {
            config.base_seed = doc["base_seed"].get<std::uint64_t>();
        }
    }
    if (doc.contains("checkpoints")) {
        if (!doc["checkpoints"].is_array() || doc["checkpoints"].empty()) {
            problems.push_back("'checkpoints' must be a non-empty array of fractions");
        } else {
            config.checkpoints.clear();
            for (const auto& v : doc["checkpoints"]) {
                if (!v.is_number()) {
                    problems.push_back("'checkpoints' entries must be numbers");
                    break;
                }
                config.checkpoints.push_back(v.get<double>());
            }
            for (std::size_t i = 0; i < config.checkpoints.size(); ++i) {
                if (config.checkpoints[i] < 0.0 || config.checkpoints[i] > 1.0) {
                    problems.push_back("checkpoint " + fmt6(config.checkpoints[i]) +
                                       " outside [0,1]");
                }
                if (i > 0 && config.checkpoints[i] <= config.checkpoints[i - 1]) {
                    problems.push_back("checkpoints must be strictly increasing");
                    break;
                }
            }
        }
    }
    if (doc.contains("apl_enabled")) {
        if (!doc["apl_enabled"].is_boolean()) {
            problems.push_back("'apl_enabled' must be a boolean");
        } else {
            config.apl_enabled = doc["apl_enabled"].get<bool>();
        }
    }
    if (doc.contains("apl_samples")) {
        if (!doc["apl_samples"].is_number_unsigned()) {
            problems.push_back("'apl_samples' must be an unsigned integer");
        } else {
            config.apl_samples = doc["apl_samples"].get<std::size_t>();
        }
    }

    if (!problems.empty()) throw ConfigError(std::move(problems));
    return config;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
    ExperimentConfig config = load_config(in);
    // relative file sources resolve against the config's own directory
    const std::filesystem::path base = path.parent_path();
    for (SourceSpec& source : config.sources) {
        if (auto* file = std::get_if<std::filesystem::path>(&source.origin)) {
            if (file->is_relative() && !base.empty()) *file = base / *file;
        }
    }
    return config;
}

namespace {

// Seed salts for deriving independent sub-streams from a replica seed.
constexpr std::uint64_t kPlanSalt = 0xa11ac;
constexpr std::uint64_t kAplSalt = 0x0a91;

struct SourceGraphs {
    // file sources are ingested once and shared; generated sources get one
    // graph per replica
    std::vector<std::optional<Graph>> shared;
};

Graph materialize(const SourceSpec& source, const std::optional<Graph>& shared,
                  std::uint64_t replica_seed) {
    if (source.is_generated()) {
        GeneratorSpec spec = std::get<GeneratorSpec>(source.origin);
        spec.seed = replica_seed;
        return generate(spec);
    }
    return *shared;  // copy; executions mutate their own working copy anyway
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned jobs) {
    if (config.sources.empty() || config.strategies.empty() || config.replicas == 0) {
        throw ConfigError({"experiment needs sources, strategies and replicas >= 1"});
    }

    ExperimentResult result;
    result.config = config;

    SourceGraphs graphs;
    graphs.shared.resize(config.sources.size());
    for (std::size_t s = 0; s < config.sources.size(); ++s) {
        const SourceSpec& source = config.sources[s];
        if (!source.is_generated()) {
            try {
                graphs.shared[s] = load_graph(std::get<std::filesystem::path>(source.origin)).graph;
            } catch (const std::exception& e) {
                throw std::runtime_error("source '" + source.name + "': " + e.what());
            }
        } else {
            result.generated_networks += config.replicas;
        }
    }

    const std::size_t n_sources = config.sources.size();
    const std::size_t n_strategies = config.strategies.size();
    const std::size_t n_replicas = config.replicas;
    result.runs.resize(n_sources * n_strategies * n_replicas);

    auto run_slot = [&](std::size_t s, std::size_t st, std::uint32_t r) -> ReplicaRun& {
        return result.runs[(s * n_strategies + st) * n_replicas + r];
    };

    // one task per (source, replica): the graph instance is built once and
    // every strategy runs against it
    struct Task {
        std::size_t source;
        std::uint32_t replica;
    };
    std::vector<Task> tasks;
    tasks.reserve(n_sources * n_replicas);
    for (std::size_t s = 0; s < n_sources; ++s) {
        for (std::uint32_t r = 0; r < n_replicas; ++r) tasks.push_back({s, r});
    }

    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> failed{false};
    std::string failure_message;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t index = next_task.fetch_add(1);
            if (index >= tasks.size() || failed.load()) return;
            const Task task = tasks[index];
            const SourceSpec& source = config.sources[task.source];
            const std::uint64_t replica_seed = config.base_seed + task.replica;
            try {
                const Graph graph =
                    materialize(source, graphs.shared[task.source], replica_seed);
                for (std::size_t st = 0; st < n_strategies; ++st) {
                    const StrategySpec& strategy = config.strategies[st];
                    PlanOptions plan_options;
                    plan_options.recompute = strategy.recompute;
                    const std::uint64_t plan_seed =
                        mix_seed(replica_seed, kPlanSalt + st);
                    AttackPlan plan = make_plan(graph, strategy.kind, plan_seed, plan_options);
                    ExecuteOptions exec;
                    exec.compute_apl = config.apl_enabled;
                    exec.apl_samples = config.apl_samples;
                    exec.apl_seed = mix_seed(plan_seed, kAplSalt);
                    ReplicaRun& slot = run_slot(task.source, st, task.replica);
                    slot.source_index = task.source;
                    slot.strategy_index = st;
                    slot.replica = task.replica;
                    slot.series = execute(graph, plan, config.checkpoints, exec);
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failed.exchange(true)) {
                    failure_message = "source '" + source.name + "' replica " +
                                      std::to_string(task.replica) + ": " + e.what();
                }
                return;
            }
        }
    };

    const unsigned thread_count = std::max(1u, jobs);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < thread_count; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failed.load()) throw std::runtime_error(failure_message);

    // aggregate in fixed (source, strategy) order
    for (std::size_t s = 0; s < n_sources; ++s) {
        for (std::size_t st = 0; st < n_strategies; ++st) {
            AggregateSeries agg;
            agg.source_index = s;
            agg.strategy_index = st;
            const std::size_t n_points = config.checkpoints.size();
            for (std::size_t p = 0; p < n_points; ++p) {
                AggregatePoint point;
                point.fraction_removed = config.checkpoints[p];
                double lcc_sum = 0.0, apl_sum = 0.0;
                for (std::uint32_t r = 0; r < n_replicas; ++r) {
                    const SeriesPoint& sp = run_slot(s, st, r).series.points[p];
                    lcc_sum += sp.lcc_fraction;
                    if (sp.apl) {
                        apl_sum += *sp.apl;
                        ++point.apl_defined;
                    }
                }
                point.lcc_mean = lcc_sum / double(n_replicas);
                double lcc_var = 0.0, apl_var = 0.0;
                for (std::uint32_t r = 0; r < n_replicas; ++r) {
                    const SeriesPoint& sp = run_slot(s, st, r).series.points[p];
                    const double d = sp.lcc_fraction - point.lcc_mean;
                    lcc_var += d * d;
                }
                point.lcc_std = std::sqrt(lcc_var / double(n_replicas));
                if (point.apl_defined > 0) {
                    const double apl_mean = apl_sum / double(point.apl_defined);
                    for (std::uint32_t r = 0; r < n_replicas; ++r) {
                        const SeriesPoint& sp = run_slot(s, st, r).series.points[p];
                        if (sp.apl) {
                            const double d = *sp.apl - apl_mean;
                            apl_var += d * d;
                        }
                    }
                    point.apl_mean = apl_mean;
                    point.apl_std = std::sqrt(apl_var / double(point.apl_defined));
                }
                agg.points.push_back(point);
            }
            double onset_sum = 0.0;
            for (std::uint32_t r = 0; r < n_replicas; ++r) {
                const auto& onset = run_slot(s, st, r).series.fallback_onset;
                if (onset) {
                    onset_sum += *onset;
                    ++agg.fallback_replicas;
                }
            }
            if (agg.fallback_replicas > 0) {
                agg.fallback_onset_mean = onset_sum / double(agg.fallback_replicas);
            }
            agg.breakdown_fraction = percolation_breakdown(agg.points);
            result.aggregates.push_back(std::move(agg));
        }
    }
    return result;
}

std::optional<double> percolation_breakdown(const ResilienceSeries& series) {
    for (const SeriesPoint& p : series.points) {
        if (p.lcc_fraction < 0.10) return p.fraction_removed;
    }
    return std::nullopt;
}

std::optional<double> percolation_breakdown(const std::vector<AggregatePoint>& points) {
    for (const AggregatePoint& p : points) {
        if (p.lcc_mean < 0.10) return p.fraction_removed;
    }
    return std::nullopt;
}

void write_raw_csv(const ExperimentResult& result, std::ostream& out) {
    out << "source,strategy,replica,frac_removed,lcc_frac,apl\n";
    for (const ReplicaRun& run : result.runs) {
        const std::string& source = result.config.sources[run.source_index].name;
        const std::string strategy = result.config.strategies[run.strategy_index].label();
        for (const SeriesPoint& p : run.series.points) {
            out << source << ',' << strategy << ',' << run.replica << ','
                << fmt6(p.fraction_removed) << ',' << fmt6(p.lcc_fraction) << ',';
            if (p.apl) out << fmt6(*p.apl);
            out << "\n";
        }
    }
}

void write_aggregate_csv(const ExperimentResult& result, std::ostream& out) {
    out << "source,strategy,frac_removed,lcc_frac_mean,lcc_frac_std,apl_mean,apl_std,"
           "apl_defined\n";
    for (const AggregateSeries& agg : result.aggregates) {
        const std::string& source = result.config.sources[agg.source_index].name;
        const std::string strategy = result.config.strategies[agg.strategy_index].label();
        for (const AggregatePoint& p : agg.points) {
            out << source << ',' << strategy << ',' << fmt6(p.fraction_removed) << ','
                << fmt6(p.lcc_mean) << ',' << fmt6(p.lcc_std) << ',';
            if (p.apl_mean) out << fmt6(*p.apl_mean);
            out << ',';
            if (p.apl_std) out << fmt6(*p.apl_std);
            out << ',' << p.apl_defined << "\n";
        }
    }
}

void emit_csv(const ExperimentResult& result, std::ostream& out) {
    write_raw_csv(result, out);
    out << "\n";
    write_aggregate_csv(result, out);
}

void write_summary_json(const ExperimentResult& result, std::ostream& out) {
    using nlohmann::json;
    json doc;
    doc["generated_networks"] = result.generated_networks;
    doc["replicas"] = result.config.replicas;
    doc["base_seed"] = result.config.base_seed;
    json breakdowns = json::array();
    for (const AggregateSeries& agg : result.aggregates) {
        json entry;
        entry["source"] = result.config.sources[agg.source_index].name;
        entry["strategy"] = result.config.strategies[agg.strategy_index].label();
        if (agg.breakdown_fraction) {
            entry["breakdown_fraction"] = *agg.breakdown_fraction;
        } else {
            entry["breakdown_fraction"] = nullptr;
        }
        if (agg.fallback_onset_mean) {
            entry["fallback_onset_mean"] = *agg.fallback_onset_mean;
            entry["fallback_replicas"] = agg.fallback_replicas;
        }
        breakdowns.push_back(std::move(entry));
    }
    doc["breakdowns"] = std::move(breakdowns);
    out << doc.dump(2) << "\n";
}

}  // namespace netres
