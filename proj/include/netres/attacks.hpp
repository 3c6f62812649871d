#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netres/graph.hpp"

namespace netres {

enum class AttackKind {
    TargetedNodes,
    RandomNodes,
    AlmostRandomNodes,
    TargetedEdges,
    RandomEdges,
    AlmostRandomEdges,
};

const char* attack_kind_name(AttackKind kind);
AttackKind attack_kind_from_name(const std::string& name);  // throws on unknown name
bool attack_targets_edges(AttackKind kind);

/// Tie handling for the targeted orderings.
enum class TieBreak {
    ById,           // deterministic: ascending node id / lexicographic edge key
    SeededShuffle,  // seeded shuffle first, for sensitivity checks
};

/// Degree threshold basis for the almost-random strategies.
enum class DegreeBasis {
    Current,  // degrees re-read on the partially dismantled graph
    Initial,  // degrees frozen at plan-construction time
};

/// Deterministic, seeded removal schedule. Exactly one of `nodes`/`edges` is
/// populated, matching the kind. The schedule covers the whole initial
/// node/edge set.
struct AttackPlan {
    AttackKind kind = AttackKind::RandomNodes;
    std::uint64_t seed = 0;
    bool recompute = false;
    std::vector<NodeId> nodes;
    std::vector<EdgeKey> edges;
    /// First schedule index at which an almost-random strategy ran out of
    /// eligible items and fell back to uniform picks.
    std::optional<std::size_t> fallback_onset;

    std::size_t size() const { return attack_targets_edges(kind) ? edges.size() : nodes.size(); }
};

/// Nodes in decreasing order of degree. With recompute=false the order uses
/// the initial degrees; with recompute=true the current highest-degree node
/// is re-selected after every removal. Ties break by ascending id.
AttackPlan plan_targeted_nodes(const Graph& g, bool recompute, std::uint64_t seed,
                               TieBreak tie_break = TieBreak::ById);

/// Edges in decreasing order of W(e_uv) = deg(u) + deg(v) on the initial
/// degrees; ties break by ascending (u, v).
AttackPlan plan_targeted_edges(const Graph& g, std::uint64_t seed,
                               TieBreak tie_break = TieBreak::ById);

/// Uniform random permutation of all nodes (resp. edges).
AttackPlan plan_random_nodes(const Graph& g, std::uint64_t seed);
AttackPlan plan_random_edges(const Graph& g, std::uint64_t seed);

/// At each step a uniform pick among nodes of degree >= 2 (on the basis
/// graph); once none remain, uniform picks among the rest, with the onset
/// recorded in the plan.
AttackPlan plan_almost_random_nodes(const Graph& g, std::uint64_t seed,
                                    DegreeBasis basis = DegreeBasis::Current);

/// Same scheme over edges whose both endpoints have degree >= 2.
AttackPlan plan_almost_random_edges(const Graph& g, std::uint64_t seed,
                                    DegreeBasis basis = DegreeBasis::Current);

struct PlanOptions {
    bool recompute = false;
    TieBreak tie_break = TieBreak::ById;
    DegreeBasis degree_basis = DegreeBasis::Current;
};

AttackPlan make_plan(const Graph& g, AttackKind kind, std::uint64_t seed,
                     const PlanOptions& options = {});

struct SeriesPoint {
    double fraction_removed = 0.0;
    double lcc_fraction = 0.0;             // relative to the original node count
    std::optional<double> apl;             // absent when the LCC has < 2 nodes
};

/// Checkpointed degradation measurements for one attack run.
struct ResilienceSeries {
    AttackKind kind = AttackKind::RandomNodes;
    std::vector<SeriesPoint> points;
    /// Fraction removed when the almost-random fallback began, if it did.
    std::optional<double> fallback_onset;
};

struct ExecuteOptions {
    bool compute_apl = true;
    std::size_t apl_samples = 0;  // 0 = exact
    std::uint64_t apl_seed = 0;
};

/// Replays the plan on a private copy of the graph. At each checkpoint
/// fraction f, round(f * N) elements have been removed — N being the
/// original node or edge count per the plan kind — and the LCC fraction
/// (relative to the original node count) plus the LCC's average path length
/// are recorded. Checkpoints must be strictly increasing within [0, 1].
ResilienceSeries execute(const Graph& g, const AttackPlan& plan,
                         std::span<const double> checkpoints,
                         const ExecuteOptions& options = {});

/// Plan audit format: '#'-comment header, then one element per line
/// (node id, or "u v" for edges).
void write_plan(const AttackPlan& plan, std::ostream& out);

}  // namespace netres
