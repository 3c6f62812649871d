#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netres/attacks.hpp"
#include "netres/generators.hpp"
#include "netres/graph.hpp"

namespace netres {

/// Configuration problems, all collected before reporting.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// A named graph source: either a file to ingest or a generator spec whose
/// seed is filled in per replica.
struct SourceSpec {
    std::string name;
    std::variant<std::filesystem::path, GeneratorSpec> origin;

    bool is_generated() const { return std::holds_alternative<GeneratorSpec>(origin); }
};

struct StrategySpec {
    AttackKind kind = AttackKind::RandomNodes;
    bool recompute = false;

    std::string label() const;
};

std::vector<double> default_checkpoints();  // 0.0, 0.1, ..., 0.9

struct ExperimentConfig {
    std::vector<SourceSpec> sources;
    std::vector<StrategySpec> strategies;
    std::uint32_t replicas = 1;
    std::uint64_t base_seed = 0;
    std::vector<double> checkpoints = default_checkpoints();
    bool apl_enabled = true;
    std::size_t apl_samples = 0;  // 0 = exact
};

/// Parses the JSON mirror of ExperimentConfig; reports every validation
/// problem at once via ConfigError.
ExperimentConfig load_config(std::istream& in);
ExperimentConfig load_config_file(const std::filesystem::path& path);

struct ReplicaRun {
    std::size_t source_index = 0;
    std::size_t strategy_index = 0;
    std::uint32_t replica = 0;
    ResilienceSeries series;
};

struct AggregatePoint {
    double fraction_removed = 0.0;
    double lcc_mean = 0.0;
    double lcc_std = 0.0;
    std::optional<double> apl_mean;  // over replicas whose APL was defined
    std::optional<double> apl_std;
    std::size_t apl_defined = 0;
};

struct AggregateSeries {
    std::size_t source_index = 0;
    std::size_t strategy_index = 0;
    std::vector<AggregatePoint> points;
    std::optional<double> breakdown_fraction;  // on the mean curve
    std::optional<double> fallback_onset_mean;
    std::size_t fallback_replicas = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ReplicaRun> runs;             // ordered (source, strategy, replica)
    std::vector<AggregateSeries> aggregates;  // ordered (source, strategy)
    std::size_t generated_networks = 0;       // generator sources x replicas
};

/// Runs the full sweep: every (source, strategy, replica) combination over
/// the configured checkpoints. Replica r of a generated source is built with
/// seed base_seed + r; file sources are ingested once. Deterministic for a
/// given config, independent of `jobs`.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned jobs = 1);

/// Smallest checkpoint fraction at which the LCC fraction drops below 10%
/// of the original nodes; absent if it never does.
std::optional<double> percolation_breakdown(const ResilienceSeries& series);
std::optional<double> percolation_breakdown(const std::vector<AggregatePoint>& points);

/// CSV with 6-significant-digit values and a fixed row order, so identical
/// configs yield byte-identical files.
void write_raw_csv(const ExperimentResult& result, std::ostream& out);
void write_aggregate_csv(const ExperimentResult& result, std::ostream& out);
/// Raw table, blank line, aggregate table.
void emit_csv(const ExperimentResult& result, std::ostream& out);

/// Companion summary: generated-network count plus breakdown fraction and
/// fallback onset per (source, strategy).
void write_summary_json(const ExperimentResult& result, std::ostream& out);

}  // namespace netres
