#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "netres/graph.hpp"

namespace netres {

/// How nodes of degree < 2 enter the averaged local clustering coefficient.
enum class LowDegreeClustering {
    CountAsZero,  // default: they contribute a local coefficient of 0
    Exclude,      // average only over nodes of degree >= 2
};

struct NetworkStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double edge_node_ratio = 0.0;
    std::size_t max_degree = 0;
    double clustering_coefficient = 0.0;
    std::optional<double> average_path_length;   // absent when disconnected or n < 2
    std::optional<double> apl_standard_error;    // set when APL was sampled
    std::map<std::size_t, std::size_t> degree_histogram;
};

struct StatsOptions {
    bool compute_apl = true;
    /// 0 = exact APL (BFS from every node); otherwise number of BFS source
    /// samples for the estimated APL.
    std::size_t apl_samples = 0;
    std::uint64_t apl_seed = 0;
    LowDegreeClustering low_degree = LowDegreeClustering::CountAsZero;
};

/// |largest component| / original_nodes; 0 when no active node remains.
double lcc_fraction(const Graph& g, std::size_t original_nodes);

/// Mean shortest-path length over all unordered node pairs of a connected
/// component (unit edge lengths, BFS from every member). The component must
/// be connected and contain at least 2 nodes.
double average_path_length(const Graph& g, std::span<const NodeId> component);

struct SampledApl {
    double estimate = 0.0;
    /// Standard error of the estimate: stddev of per-source means / sqrt(s).
    double standard_error = 0.0;
    std::size_t sources = 0;
};

/// APL estimated from BFS over `sources` distinct seeded sample nodes instead
/// of all of them. Falls back to the exact computation when sources >= |component|.
SampledApl average_path_length_sampled(const Graph& g, std::span<const NodeId> component,
                                       std::size_t sources, std::uint64_t seed);

/// Watts-Strogatz-style averaged local clustering coefficient,
/// mean over nodes of 2*tri(u) / (deg(u)*(deg(u)-1)). Empty graph -> 0.
double clustering_coefficient(const Graph& g,
                              LowDegreeClustering policy = LowDegreeClustering::CountAsZero);

NetworkStats compute_stats(const Graph& g, const StatsOptions& options = {});

}  // namespace netres
