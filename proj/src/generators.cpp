#include "netres/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "netres/rng.hpp"

namespace netres {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
    }
}

std::size_t max_edges(std::uint32_t n) {
    return std::size_t(n) * (n - 1) / 2;
}

std::size_t edges_per_node(std::uint32_t nodes, std::size_t target_edges) {
    return std::size_t(std::llround(double(target_edges) / double(nodes)));
}

}  // namespace

const char* model_name(GeneratorModel model) {
    switch (model) {
        case GeneratorModel::Random: return "random";
        case GeneratorModel::SmallWorld: return "small-world";
        case GeneratorModel::ScaleFree: return "scale-free";
        case GeneratorModel::SmallWorldScaleFree: return "small-world-scale-free";
    }
    return "?";
}

GeneratorModel model_from_name(const std::string& name) {
    if (name == "random") return GeneratorModel::Random;
    if (name == "small-world") return GeneratorModel::SmallWorld;
    if (name == "scale-free") return GeneratorModel::ScaleFree;
    if (name == "small-world-scale-free") return GeneratorModel::SmallWorldScaleFree;
    throw std::invalid_argument("unknown generator model '" + name + "'");
}

Graph gen_random(std::uint32_t nodes, std::size_t edges, std::uint64_t seed) {
    if (nodes < 2) throw std::invalid_argument("gen_random: need at least 2 nodes");
    if (edges > max_edges(nodes)) {
        throw std::invalid_argument("gen_random: " + std::to_string(edges) +
                                    " edges do not fit in " + std::to_string(nodes) + " nodes");
    }
    Graph g(nodes);
    Rng rng(seed);
    std::size_t placed = 0;
    while (placed < edges) {
        NodeId u = NodeId(rng.below(nodes));
        NodeId v = NodeId(rng.below(nodes - 1));
        if (v >= u) ++v;  // uniform pair without the diagonal
        if (g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++placed;
    }
    return g;
}

Graph gen_small_world(std::uint32_t nodes, std::size_t target_edges, double beta,
                      std::uint64_t seed) {
    if (nodes < 2) throw std::invalid_argument("gen_small_world: need at least 2 nodes");
    check_probability(beta, "gen_small_world: beta");
    const std::size_t k = 2 * edges_per_node(nodes, target_edges);
    if (k < 2) {
        throw std::invalid_argument("gen_small_world: target edge count gives lattice degree 0");
    }
    if (k >= nodes) {
        throw std::invalid_argument("gen_small_world: lattice degree " + std::to_string(k) +
                                    " infeasible for " + std::to_string(nodes) + " nodes");
    }

    Graph g(nodes);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId i = 0; i < nodes; ++i) {
            g.add_edge(i, NodeId((i + j) % nodes));
        }
    }

    if (beta == 0.0) return g;

    Rng rng(seed);
    // Watts-Strogatz pass: clockwise lattice edges in ring order, one round
    // per lattice offset; the near endpoint stays fixed on a rewire.
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId i = 0; i < nodes; ++i) {
            if (!rng.chance(beta)) continue;
            NodeId old_target = NodeId((i + j) % nodes);
            if (g.degree(i) == nodes - 1) continue;  // no spare endpoint exists
            NodeId fresh;
            do {
                fresh = NodeId(rng.below(nodes));
            } while (fresh == i || g.has_edge(i, fresh));
            g.remove_edge(i, old_target);
            g.add_edge(i, fresh);
        }
    }
    return g;
}

namespace {

// Shared growth loop for the BA and Holme-Kim models. `chances` holds every
// node once per unit of degree, so a uniform index draw is a
// degree-proportional node draw.
Graph grow_preferential(std::uint32_t nodes, std::size_t target_edges, double p_triad,
                        bool triad_formation, std::uint64_t seed) {
    const std::size_t m_per = edges_per_node(nodes, target_edges);
    if (m_per < 1) {
        throw std::invalid_argument("scale-free growth: target edge count gives 0 edges per node");
    }
    if (nodes <= m_per) {
        throw std::invalid_argument("scale-free growth: need more than " + std::to_string(m_per) +
                                    " nodes");
    }

    Graph g(nodes);
    Rng rng(seed);
    const NodeId clique = NodeId(m_per) + 1;
    std::vector<NodeId> chances;
    chances.reserve(2 * (max_edges(clique) + (nodes - clique) * m_per));
    for (NodeId i = 0; i < clique; ++i) {
        for (NodeId j = i + 1; j < clique; ++j) g.add_edge(i, j);
        for (std::size_t c = 0; c + 1 < clique; ++c) chances.push_back(i);
    }

    std::vector<NodeId> linked;  // targets of the node under construction
    linked.reserve(m_per);
    std::vector<NodeId> candidates;
    auto already_linked = [&](NodeId w) {
        return std::find(linked.begin(), linked.end(), w) != linked.end();
    };

    for (NodeId t = clique; t < nodes; ++t) {
        linked.clear();
        NodeId last_pa = 0;  // target of the most recent preferential step
        for (std::size_t e = 0; e < m_per; ++e) {
            NodeId target = NodeId(-1);
            if (triad_formation && e > 0 && rng.chance(p_triad)) {
                // triad formation: an unlinked neighbor of the node the last
                // preferential step attached to
                candidates.clear();
                for (NodeId w : g.neighbors(last_pa)) {
                    if (w != t && !already_linked(w)) candidates.push_back(w);
                }
                if (!candidates.empty()) {
                    target = candidates[rng.below(candidates.size())];
                }
            }
            if (target == NodeId(-1)) {
                do {
                    target = chances[rng.below(chances.size())];
                } while (already_linked(target));
                last_pa = target;
            }
            g.add_edge(t, target);
            linked.push_back(target);
        }
        for (NodeId w : linked) chances.push_back(w);
        for (std::size_t c = 0; c < m_per; ++c) chances.push_back(t);
    }
    return g;
}

}  // namespace

Graph gen_scale_free(std::uint32_t nodes, std::size_t target_edges, std::uint64_t seed) {
    return grow_preferential(nodes, target_edges, 0.0, false, seed);
}

Graph gen_holme_kim(std::uint32_t nodes, std::size_t target_edges, double p_triad,
                    std::uint64_t seed) {
    check_probability(p_triad, "gen_holme_kim: p_triad");
    return grow_preferential(nodes, target_edges, p_triad, true, seed);
}

Graph generate(const GeneratorSpec& spec) {
    if (spec.nodes < 2) throw std::invalid_argument("generator spec: need at least 2 nodes");
    if (spec.target_edges > max_edges(spec.nodes)) {
        throw std::invalid_argument("generator spec: target edge count exceeds simple-graph maximum");
    }
    switch (spec.model) {
        case GeneratorModel::Random:
            return gen_random(spec.nodes, spec.target_edges, spec.seed);
        case GeneratorModel::SmallWorld:
            return gen_small_world(spec.nodes, spec.target_edges, spec.beta, spec.seed);
        case GeneratorModel::ScaleFree:
            return gen_scale_free(spec.nodes, spec.target_edges, spec.seed);
        case GeneratorModel::SmallWorldScaleFree:
            return gen_holme_kim(spec.nodes, spec.target_edges, spec.p_triad, spec.seed);
    }
    throw std::invalid_argument("generator spec: unknown model");
}

}  // namespace netres
