#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace netres {

/// Dense node index, stable for the lifetime of a Graph. Removed nodes keep
/// their id but are flagged inactive.
using NodeId = std::uint32_t;

/// Canonical undirected edge: u < v always.
struct EdgeKey {
    NodeId u = 0;
    NodeId v = 0;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Orders the endpoints; throws std::invalid_argument on a self-loop.
EdgeKey make_edge_key(NodeId a, NodeId b);

/// Mutable simple undirected graph over node ids [0, n). Built for
/// deletion-heavy attack simulation: nodes are tombstoned on removal (ids in
/// a removal schedule stay valid for a whole run), adjacency lists are kept
/// sorted, and connectivity is recomputed by full traversal on demand.
///
/// Invariants maintained at all times:
///   - symmetry: v in adj(u) iff u in adj(v)
///   - simplicity: no self-loops, no parallel edges
///   - active_edges() == half the degree sum over active nodes
///
/// Single-writer: a Graph may move between threads, and concurrent reads are
/// fine once mutation has quiesced, but it must not be mutated concurrently.
class Graph {
public:
    explicit Graph(std::size_t node_count);

    /// Number of node ids ever allocated, including removed ones.
    std::size_t node_capacity() const noexcept { return adjacency_.size(); }
    std::size_t active_nodes() const noexcept { return n_active_; }
    std::size_t active_edges() const noexcept { return m_active_; }

    bool is_active(NodeId u) const noexcept;
    bool has_edge(NodeId a, NodeId b) const;

    /// Current degree of an active node; throws on inactive/out-of-range ids.
    std::size_t degree(NodeId u) const;

    /// Sorted neighbor list; invalidated by any mutation.
    std::span<const NodeId> neighbors(NodeId u) const;

    /// Inserts the edge if absent (idempotent). Self-loops and inactive
    /// endpoints are rejected.
    void add_edge(NodeId a, NodeId b);

    /// Removes a present edge; both endpoints stay active even at degree 0.
    /// Removing an absent edge throws.
    void remove_edge(NodeId a, NodeId b);
    void remove_edge(const EdgeKey& e) { remove_edge(e.u, e.v); }

    /// Tombstones a node and drops all incident edges. Removing an already
    /// inactive node throws (a double removal signals a planner bug).
    void remove_node(NodeId u);

    /// Active node ids, ascending.
    std::vector<NodeId> active_node_ids() const;

    /// All present edges in canonical (u, v) order, ascending.
    std::vector<EdgeKey> edges() const;

    /// Partition of active nodes into maximal connected sets. Components are
    /// sorted by size descending, ties by smallest member id; members are
    /// ascending. Empty graph yields an empty list.
    std::vector<std::vector<NodeId>> connected_components() const;

    /// Node set of the largest component; throws on an empty graph.
    std::vector<NodeId> largest_component() const;

private:
    void check_active(NodeId u, const char* what) const;

    std::vector<std::vector<NodeId>> adjacency_;  // sorted per node
    std::vector<std::uint8_t> active_;
    std::size_t n_active_ = 0;
    std::size_t m_active_ = 0;
};

}  // namespace netres
