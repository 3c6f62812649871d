// Brute-force reference implementations, independent of the library's
// algorithms: reachability by Warshall closure, all-pairs distances by
// Floyd-Warshall, greedy max-degree dismantling and naive clustering all
// work on a dense adjacency matrix.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "netres/graph.hpp"
#include "netres/rng.hpp"

namespace oracle {

struct DenseGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::uint8_t>> adj;
    std::vector<std::uint8_t> active;

    explicit DenseGraph(std::size_t nodes)
        : n(nodes), adj(nodes, std::vector<std::uint8_t>(nodes, 0)), active(nodes, 1) {}

    static DenseGraph from(const netres::Graph& g) {
        DenseGraph d(g.node_capacity());
        for (netres::NodeId u = 0; u < g.node_capacity(); ++u) {
            d.active[u] = g.is_active(u) ? 1 : 0;
        }
        for (const netres::EdgeKey& e : g.edges()) {
            d.adj[e.u][e.v] = d.adj[e.v][e.u] = 1;
        }
        return d;
    }

    void remove_node(std::size_t u) {
        active[u] = 0;
        for (std::size_t w = 0; w < n; ++w) adj[u][w] = adj[w][u] = 0;
    }

    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < n; ++w) d += adj[u][w];
        return d;
    }
};

// Connected components via Warshall transitive closure, returned in the same
// order convention as the library (size descending, ties by smallest member).
inline std::vector<std::vector<netres::NodeId>> components(const DenseGraph& g) {
    std::vector<std::vector<std::uint8_t>> reach = g.adj;
    for (std::size_t i = 0; i < g.n; ++i) reach[i][i] = g.active[i];
    for (std::size_t k = 0; k < g.n; ++k) {
        for (std::size_t i = 0; i < g.n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < g.n; ++j) {
                if (reach[k][j]) reach[i][j] = 1;
            }
        }
    }
    std::vector<std::vector<netres::NodeId>> comps;
    std::vector<std::uint8_t> assigned(g.n, 0);
    for (std::size_t i = 0; i < g.n; ++i) {
        if (!g.active[i] || assigned[i]) continue;
        std::vector<netres::NodeId> members;
        for (std::size_t j = 0; j < g.n; ++j) {
            if (reach[i][j]) {
                members.push_back(netres::NodeId(j));
                assigned[j] = 1;
            }
        }
        comps.push_back(std::move(members));
    }
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<netres::NodeId>& a, const std::vector<netres::NodeId>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return comps;
}

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

inline std::vector<std::vector<std::uint32_t>> all_pairs_distances(const DenseGraph& g) {
    std::vector<std::vector<std::uint32_t>> dist(g.n, std::vector<std::uint32_t>(g.n, kInf));
    for (std::size_t i = 0; i < g.n; ++i) {
        if (g.active[i]) dist[i][i] = 0;
        for (std::size_t j = 0; j < g.n; ++j) {
            if (g.adj[i][j]) dist[i][j] = 1;
        }
    }
    for (std::size_t k = 0; k < g.n; ++k) {
        for (std::size_t i = 0; i < g.n; ++i) {
            for (std::size_t j = 0; j < g.n; ++j) {
                if (dist[i][k] + dist[k][j] < dist[i][j]) {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }
    return dist;
}

// Mean distance over ordered pairs within `members` (must be mutually
// reachable), computed from the Floyd-Warshall matrix.
inline double apl(const DenseGraph& g, const std::vector<netres::NodeId>& members) {
    const auto dist = all_pairs_distances(g);
    std::uint64_t total = 0;
    for (netres::NodeId a : members) {
        for (netres::NodeId b : members) {
            if (a != b) total += dist[a][b];
        }
    }
    return double(total) / (double(members.size()) * double(members.size() - 1));
}

// Greedy dismantling order: current max degree first, ties by smallest id.
inline std::vector<netres::NodeId> greedy_targeted(DenseGraph g) {
    std::vector<netres::NodeId> order;
    for (;;) {
        std::size_t best = g.n;
        std::size_t best_degree = 0;
        for (std::size_t u = 0; u < g.n; ++u) {
            if (!g.active[u]) continue;
            const std::size_t d = g.degree(u);
            if (best == g.n || d > best_degree) {
                best = u;
                best_degree = d;
            }
        }
        if (best == g.n) break;
        order.push_back(netres::NodeId(best));
        g.remove_node(best);
    }
    return order;
}

// Naive averaged local clustering over active nodes (degree<2 counts as 0).
inline double clustering(const DenseGraph& g) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t u = 0; u < g.n; ++u) {
        if (!g.active[u]) continue;
        ++counted;
        std::vector<std::size_t> nbrs;
        for (std::size_t w = 0; w < g.n; ++w) {
            if (g.adj[u][w]) nbrs.push_back(w);
        }
        if (nbrs.size() < 2) continue;
        std::size_t closed = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.adj[nbrs[i]][nbrs[j]]) ++closed;
            }
        }
        sum += 2.0 * double(closed) / (double(nbrs.size()) * double(nbrs.size() - 1));
    }
    return counted == 0 ? 0.0 : sum / double(counted);
}

// Random simple graph on 1..max_nodes nodes with a random density.
inline netres::Graph random_graph(netres::Rng& rng, std::uint32_t max_nodes = 12) {
    const std::uint32_t n = 1 + std::uint32_t(rng.below(max_nodes));
    netres::Graph g(n);
    const double p = rng.uniform01();
    for (netres::NodeId u = 0; u < n; ++u) {
        for (netres::NodeId v = u + 1; v < n; ++v) {
            if (rng.chance(p)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace oracle
