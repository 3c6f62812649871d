#include "netres/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "netres/rng.hpp"

namespace netres {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// BFS distances from source; dist must be sized to node_capacity and is
// reset here. Returns the number of reached nodes (source included) and the
// sum of distances to them.
struct BfsResult {
    std::size_t reached = 0;
    std::uint64_t distance_sum = 0;
};

BfsResult bfs_distances(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                        std::vector<NodeId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    BfsResult result;
    std::size_t head = 0;
    while (head < queue.size()) {
        NodeId u = queue[head++];
        ++result.reached;
        result.distance_sum += dist[u];
        for (NodeId w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return result;
}

void check_component(const Graph& g, std::span<const NodeId> component) {
    if (component.size() < 2) {
        throw std::invalid_argument("average_path_length: component must have >= 2 nodes");
    }
    for (NodeId u : component) {
        if (!g.is_active(u)) {
            throw std::invalid_argument("average_path_length: component contains inactive node " +
                                        std::to_string(u));
        }
    }
}

}  // namespace

double lcc_fraction(const Graph& g, std::size_t original_nodes) {
    if (original_nodes == 0) {
        throw std::invalid_argument("lcc_fraction: original node count must be positive");
    }
    if (g.active_nodes() == 0) return 0.0;
    return double(g.largest_component().size()) / double(original_nodes);
}

double average_path_length(const Graph& g, std::span<const NodeId> component) {
    check_component(g, component);
    std::vector<std::uint32_t> dist(g.node_capacity());
    std::vector<NodeId> queue;
    queue.reserve(component.size());

    std::uint64_t total = 0;
    for (std::size_t i = 0; i < component.size(); ++i) {
        BfsResult r = bfs_distances(g, component[i], dist, queue);
        if (r.reached != component.size()) {
            throw std::invalid_argument("average_path_length: component is not connected");
        }
        total += r.distance_sum;
    }
    // total counts each unordered pair twice
    const double pairs = double(component.size()) * double(component.size() - 1);
    return double(total) / pairs;
}

SampledApl average_path_length_sampled(const Graph& g, std::span<const NodeId> component,
                                       std::size_t sources, std::uint64_t seed) {
    if (sources == 0) {
        throw std::invalid_argument("average_path_length_sampled: need at least one source");
    }
    if (sources >= component.size()) {
        return SampledApl{average_path_length(g, component), 0.0, component.size()};
    }
    check_component(g, component);

    // seeded partial Fisher-Yates pick of distinct sources
    std::vector<NodeId> pool(component.begin(), component.end());
    Rng rng(seed);
    for (std::size_t i = 0; i < sources; ++i) {
        std::size_t j = i + std::size_t(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }

    std::vector<std::uint32_t> dist(g.node_capacity());
    std::vector<NodeId> queue;
    std::vector<double> per_source(sources);
    for (std::size_t i = 0; i < sources; ++i) {
        BfsResult r = bfs_distances(g, pool[i], dist, queue);
        if (r.reached != component.size()) {
            throw std::invalid_argument("average_path_length_sampled: component is not connected");
        }
        per_source[i] = double(r.distance_sum) / double(component.size() - 1);
    }

    double mean = 0.0;
    for (double v : per_source) mean += v;
    mean /= double(sources);
    double var = 0.0;
    for (double v : per_source) var += (v - mean) * (v - mean);
    var = sources > 1 ? var / double(sources - 1) : 0.0;
    return SampledApl{mean, std::sqrt(var / double(sources)), sources};
}

double clustering_coefficient(const Graph& g, LowDegreeClustering policy) {
    if (g.active_nodes() == 0) return 0.0;
    double sum = 0.0;
    std::size_t counted = 0;
    for (NodeId u : g.active_node_ids()) {
        auto adj_u = g.neighbors(u);
        const std::size_t deg = adj_u.size();
        if (deg < 2) {
            if (policy == LowDegreeClustering::CountAsZero) ++counted;
            continue;
        }
        // sum over neighbors v of |adj(u) ∩ adj(v)| counts each closed triad
        // at u twice
        std::uint64_t closed_twice = 0;
        for (NodeId v : adj_u) {
            auto adj_v = g.neighbors(v);
            auto a = adj_u.begin();
            auto b = adj_v.begin();
            while (a != adj_u.end() && b != adj_v.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++closed_twice;
                    ++a;
                    ++b;
                }
            }
        }
        sum += double(closed_twice) / (double(deg) * double(deg - 1));
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / double(counted);
}

NetworkStats compute_stats(const Graph& g, const StatsOptions& options) {
    NetworkStats stats;
    stats.nodes = g.active_nodes();
    stats.edges = g.active_edges();
    stats.edge_node_ratio = stats.nodes == 0 ? 0.0 : double(stats.edges) / double(stats.nodes);
    for (NodeId u : g.active_node_ids()) {
        const std::size_t deg = g.degree(u);
        stats.max_degree = std::max(stats.max_degree, deg);
        ++stats.degree_histogram[deg];
    }
    stats.clustering_coefficient = clustering_coefficient(g, options.low_degree);

    if (options.compute_apl && stats.nodes >= 2) {
        auto components = g.connected_components();
        if (components.size() == 1) {
            const auto& comp = components.front();
            if (options.apl_samples > 0 && options.apl_samples < comp.size()) {
                SampledApl s = average_path_length_sampled(g, comp, options.apl_samples,
                                                           options.apl_seed);
                stats.average_path_length = s.estimate;
                stats.apl_standard_error = s.standard_error;
            } else {
                stats.average_path_length = average_path_length(g, comp);
            }
        }
    }
    return stats;
}

}  // namespace netres
