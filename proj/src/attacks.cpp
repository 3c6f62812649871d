#include "netres/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "netres/metrics.hpp"
#include "netres/rng.hpp"

namespace netres {

const char* attack_kind_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::TargetedNodes: return "targeted-nodes";
        case AttackKind::RandomNodes: return "random-nodes";
        case AttackKind::AlmostRandomNodes: return "almost-random-nodes";
        case AttackKind::TargetedEdges: return "targeted-edges";
        case AttackKind::RandomEdges: return "random-edges";
        case AttackKind::AlmostRandomEdges: return "almost-random-edges";
    }
    return "?";
}

AttackKind attack_kind_from_name(const std::string& name) {
    for (AttackKind kind :
         {AttackKind::TargetedNodes, AttackKind::RandomNodes, AttackKind::AlmostRandomNodes,
          AttackKind::TargetedEdges, AttackKind::RandomEdges, AttackKind::AlmostRandomEdges}) {
        if (name == attack_kind_name(kind)) return kind;
    }
    throw std::invalid_argument("unknown attack strategy '" + name + "'");
}

bool attack_targets_edges(AttackKind kind) {
    return kind == AttackKind::TargetedEdges || kind == AttackKind::RandomEdges ||
           kind == AttackKind::AlmostRandomEdges;
}

namespace {

// Priority position per node for tie-breaking: identity for ById, a seeded
// permutation rank for SeededShuffle.
std::vector<std::size_t> tie_rank(const Graph& g, TieBreak tie_break, std::uint64_t seed) {
    std::vector<std::size_t> rank(g.node_capacity());
    for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
    if (tie_break == TieBreak::SeededShuffle) {
        std::vector<std::size_t> order(rank.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        Rng rng(mix_seed(seed, 0x7165));
        rng.shuffle(order);
        for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
    }
    return rank;
}

}  // namespace

AttackPlan plan_targeted_nodes(const Graph& g, bool recompute, std::uint64_t seed,
                               TieBreak tie_break) {
    if (g.active_nodes() == 0) {
        throw std::invalid_argument("plan_targeted_nodes: graph has no active nodes");
    }
    AttackPlan plan;
    plan.kind = AttackKind::TargetedNodes;
    plan.seed = seed;
    plan.recompute = recompute;
    const std::vector<std::size_t> rank = tie_rank(g, tie_break, seed);

    if (!recompute) {
        plan.nodes = g.active_node_ids();
        std::stable_sort(plan.nodes.begin(), plan.nodes.end(), [&](NodeId a, NodeId b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return rank[a] < rank[b];
        });
        return plan;
    }

    // greedy: re-select the current max-degree node after each removal
    Graph work = g;
    plan.nodes.reserve(work.active_nodes());
    while (work.active_nodes() > 0) {
        NodeId best = NodeId(-1);
        std::size_t best_degree = 0;
        for (NodeId u : work.active_node_ids()) {
            const std::size_t d = work.degree(u);
            if (best == NodeId(-1) || d > best_degree ||
                (d == best_degree && rank[u] < rank[best])) {
                best = u;
                best_degree = d;
            }
        }
        plan.nodes.push_back(best);
        work.remove_node(best);
    }
    return plan;
}

AttackPlan plan_targeted_edges(const Graph& g, std::uint64_t seed, TieBreak tie_break) {
    if (g.active_edges() == 0) {
        throw std::invalid_argument("plan_targeted_edges: graph has no edges");
    }
    AttackPlan plan;
    plan.kind = AttackKind::TargetedEdges;
    plan.seed = seed;
    plan.edges = g.edges();

    std::vector<std::size_t> rank;
    if (tie_break == TieBreak::SeededShuffle) {
        Rng rng(mix_seed(seed, 0x7165));
        rank.resize(plan.edges.size());
        std::vector<std::size_t> order(rank.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);
        for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
    }

    std::vector<std::size_t> weight(plan.edges.size());
    for (std::size_t i = 0; i < plan.edges.size(); ++i) {
        weight[i] = g.degree(plan.edges[i].u) + g.degree(plan.edges[i].v);
    }
    std::vector<std::size_t> index(plan.edges.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
        if (weight[a] != weight[b]) return weight[a] > weight[b];
        if (!rank.empty()) return rank[a] < rank[b];
        return plan.edges[a] < plan.edges[b];
    });
    std::vector<EdgeKey> ordered(plan.edges.size());
    for (std::size_t i = 0; i < index.size(); ++i) ordered[i] = plan.edges[index[i]];
    plan.edges = std::move(ordered);
    return plan;
}

AttackPlan plan_random_nodes(const Graph& g, std::uint64_t seed) {
    if (g.active_nodes() == 0) {
        throw std::invalid_argument("plan_random_nodes: graph has no active nodes");
    }
    AttackPlan plan;
    plan.kind = AttackKind::RandomNodes;
    plan.seed = seed;
    plan.nodes = g.active_node_ids();
    Rng rng(seed);
    rng.shuffle(plan.nodes);
    return plan;
}

AttackPlan plan_random_edges(const Graph& g, std::uint64_t seed) {
    if (g.active_edges() == 0) {
        throw std::invalid_argument("plan_random_edges: graph has no edges");
    }
    AttackPlan plan;
    plan.kind = AttackKind::RandomEdges;
    plan.seed = seed;
    plan.edges = g.edges();
    Rng rng(seed);
    rng.shuffle(plan.edges);
    return plan;
}

AttackPlan plan_almost_random_nodes(const Graph& g, std::uint64_t seed, DegreeBasis basis) {
    AttackPlan plan;
    plan.kind = AttackKind::AlmostRandomNodes;
    plan.seed = seed;

    Graph work = g;
    std::vector<std::size_t> initial_degree(g.node_capacity(), 0);
    for (NodeId u : g.active_node_ids()) initial_degree[u] = g.degree(u);
    auto eligible = [&](NodeId u) {
        const std::size_t d =
            basis == DegreeBasis::Current ? work.degree(u) : initial_degree[u];
        return d >= 2;
    };

    Rng rng(seed);
    // Eligibility is monotone under removals (degrees only fall), so stale
    // pool entries can be dropped for good when a draw lands on them.
    std::vector<NodeId> pool = g.active_node_ids();
    while (!pool.empty()) {
        const std::size_t i = std::size_t(rng.below(pool.size()));
        const NodeId u = pool[i];
        if (!work.is_active(u) || !eligible(u)) {
            pool[i] = pool.back();
            pool.pop_back();
            continue;
        }
        plan.nodes.push_back(u);
        work.remove_node(u);
        pool[i] = pool.back();
        pool.pop_back();
    }
    if (work.active_nodes() > 0) {
        plan.fallback_onset = plan.nodes.size();
        std::vector<NodeId> rest = work.active_node_ids();
        while (!rest.empty()) {
            const std::size_t i = std::size_t(rng.below(rest.size()));
            plan.nodes.push_back(rest[i]);
            rest[i] = rest.back();
            rest.pop_back();
        }
    }
    return plan;
}

AttackPlan plan_almost_random_edges(const Graph& g, std::uint64_t seed, DegreeBasis basis) {
    AttackPlan plan;
    plan.kind = AttackKind::AlmostRandomEdges;
    plan.seed = seed;

    Graph work = g;
    std::vector<std::size_t> initial_degree(g.node_capacity(), 0);
    for (NodeId u : g.active_node_ids()) initial_degree[u] = g.degree(u);
    auto eligible = [&](const EdgeKey& e) {
        if (basis == DegreeBasis::Current) {
            return work.degree(e.u) >= 2 && work.degree(e.v) >= 2;
        }
        return initial_degree[e.u] >= 2 && initial_degree[e.v] >= 2;
    };

    Rng rng(seed);
    std::vector<EdgeKey> pool = g.edges();
    std::size_t removed = 0;
    while (!pool.empty()) {
        const std::size_t i = std::size_t(rng.below(pool.size()));
        const EdgeKey e = pool[i];
        if (!work.has_edge(e.u, e.v) || !eligible(e)) {
            pool[i] = pool.back();
            pool.pop_back();
            continue;
        }
        plan.edges.push_back(e);
        work.remove_edge(e);
        ++removed;
        pool[i] = pool.back();
        pool.pop_back();
    }
    if (removed < g.active_edges()) {
        plan.fallback_onset = plan.edges.size();
        std::vector<EdgeKey> rest = work.edges();
        while (!rest.empty()) {
            const std::size_t i = std::size_t(rng.below(rest.size()));
            plan.edges.push_back(rest[i]);
            rest[i] = rest.back();
            rest.pop_back();
        }
    }
    return plan;
}

AttackPlan make_plan(const Graph& g, AttackKind kind, std::uint64_t seed,
                     const PlanOptions& options) {
    switch (kind) {
        case AttackKind::TargetedNodes:
            return plan_targeted_nodes(g, options.recompute, seed, options.tie_break);
        case AttackKind::RandomNodes:
            return plan_random_nodes(g, seed);
        case AttackKind::AlmostRandomNodes:
            return plan_almost_random_nodes(g, seed, options.degree_basis);
        case AttackKind::TargetedEdges:
            return plan_targeted_edges(g, seed, options.tie_break);
        case AttackKind::RandomEdges:
            return plan_random_edges(g, seed);
        case AttackKind::AlmostRandomEdges:
            return plan_almost_random_edges(g, seed, options.degree_basis);
    }
    throw std::invalid_argument("make_plan: unknown attack kind");
}

ResilienceSeries execute(const Graph& g, const AttackPlan& plan,
                         std::span<const double> checkpoints, const ExecuteOptions& options) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 0.0 || checkpoints[i] > 1.0) {
            throw std::invalid_argument("execute: checkpoint out of [0,1]");
        }
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw std::invalid_argument("execute: checkpoints must be strictly increasing");
        }
    }
    const bool on_edges = attack_targets_edges(plan.kind);
    const std::size_t original_nodes = g.active_nodes();
    const std::size_t total = on_edges ? g.active_edges() : g.active_nodes();
    if (plan.size() != total) {
        throw std::invalid_argument("execute: plan covers " + std::to_string(plan.size()) +
                                    " elements but the graph has " + std::to_string(total));
    }

    ResilienceSeries series;
    series.kind = plan.kind;
    if (plan.fallback_onset) {
        series.fallback_onset = double(*plan.fallback_onset) / double(total);
    }

    Graph work = g;
    std::size_t removed = 0;
    for (double f : checkpoints) {
        const std::size_t want = std::size_t(std::llround(f * double(total)));
        while (removed < want) {
            if (on_edges) {
                work.remove_edge(plan.edges[removed]);
            } else {
                work.remove_node(plan.nodes[removed]);
            }
            ++removed;
        }
        SeriesPoint point;
        point.fraction_removed = f;
        if (work.active_nodes() == 0) {
            point.lcc_fraction = 0.0;
        } else {
            const std::vector<NodeId> lcc = work.largest_component();
            point.lcc_fraction = double(lcc.size()) / double(original_nodes);
            if (options.compute_apl && lcc.size() >= 2) {
                if (options.apl_samples > 0 && options.apl_samples < lcc.size()) {
                    point.apl = average_path_length_sampled(work, lcc, options.apl_samples,
                                                            mix_seed(options.apl_seed, removed))
                                    .estimate;
                } else {
                    point.apl = average_path_length(work, lcc);
                }
            }
        }
        series.points.push_back(point);
    }
    return series;
}

void write_plan(const AttackPlan& plan, std::ostream& out) {
    out << "# kind=" << attack_kind_name(plan.kind) << " seed=" << plan.seed
        << " recompute=" << (plan.recompute ? 1 : 0);
    if (plan.fallback_onset) out << " fallback_onset_index=" << *plan.fallback_onset;
    out << "\n";
    if (attack_targets_edges(plan.kind)) {
        for (const EdgeKey& e : plan.edges) out << e.u << ' ' << e.v << "\n";
    } else {
        for (NodeId u : plan.nodes) out << u << "\n";
    }
}

}  // namespace netres
