#include "netres/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netres {

EdgeKey make_edge_key(NodeId a, NodeId b) {
    if (a == b) {
        throw std::invalid_argument("self-loop (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") is not a valid edge");
    }
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

Graph::Graph(std::size_t node_count)
    : adjacency_(node_count), active_(node_count, 1), n_active_(node_count) {}

bool Graph::is_active(NodeId u) const noexcept {
    return u < active_.size() && active_[u];
}

void Graph::check_active(NodeId u, const char* what) const {
    if (u >= active_.size()) {
        throw std::invalid_argument(std::string(what) + ": node id " +
                                    std::to_string(u) + " out of range");
    }
    if (!active_[u]) {
        throw std::invalid_argument(std::string(what) + ": node " +
                                    std::to_string(u) + " is not active");
    }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    if (a >= active_.size() || b >= active_.size() || a == b) return false;
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::size_t Graph::degree(NodeId u) const {
    check_active(u, "degree");
    return adjacency_[u].size();
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
    check_active(u, "neighbors");
    return adjacency_[u];
}

void Graph::add_edge(NodeId a, NodeId b) {
    if (a == b) {
        throw std::invalid_argument("add_edge: self-loop on node " + std::to_string(a));
    }
    check_active(a, "add_edge");
    check_active(b, "add_edge");
    auto& adj_a = adjacency_[a];
    auto pos = std::lower_bound(adj_a.begin(), adj_a.end(), b);
    if (pos != adj_a.end() && *pos == b) return;  // already present
    adj_a.insert(pos, b);
    auto& adj_b = adjacency_[b];
    adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
    ++m_active_;
}

void Graph::remove_edge(NodeId a, NodeId b) {
    check_active(a, "remove_edge");
    check_active(b, "remove_edge");
    auto& adj_a = adjacency_[a];
    auto pos = std::lower_bound(adj_a.begin(), adj_a.end(), b);
    if (pos == adj_a.end() || *pos != b) {
        throw std::invalid_argument("remove_edge: edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") is not present");
    }
    adj_a.erase(pos);
    auto& adj_b = adjacency_[b];
    adj_b.erase(std::lower_bound(adj_b.begin(), adj_b.end(), a));
    --m_active_;
}

void Graph::remove_node(NodeId u) {
    check_active(u, "remove_node");
    auto& adj = adjacency_[u];
    for (NodeId w : adj) {
        auto& adj_w = adjacency_[w];
        adj_w.erase(std::lower_bound(adj_w.begin(), adj_w.end(), u));
    }
    m_active_ -= adj.size();
    adj.clear();
    adj.shrink_to_fit();
    active_[u] = 0;
    --n_active_;
}

std::vector<NodeId> Graph::active_node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(n_active_);
    for (NodeId u = 0; u < active_.size(); ++u) {
        if (active_[u]) ids.push_back(u);
    }
    return ids;
}

std::vector<EdgeKey> Graph::edges() const {
    std::vector<EdgeKey> out;
    out.reserve(m_active_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) out.push_back(EdgeKey{u, v});
        }
    }
    return out;
}

std::vector<std::vector<NodeId>> Graph::connected_components() const {
    std::vector<std::vector<NodeId>> components;
    std::vector<std::uint8_t> seen(active_.size(), 0);
    std::vector<NodeId> queue;
    for (NodeId start = 0; start < active_.size(); ++start) {
        if (!active_[start] || seen[start]) continue;
        std::vector<NodeId> members;
        queue.clear();
        queue.push_back(start);
        seen[start] = 1;
        while (!queue.empty()) {
            NodeId u = queue.back();
            queue.pop_back();
            members.push_back(u);
            for (NodeId w : adjacency_[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    std::sort(components.begin(), components.end(),
              [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return components;
}

std::vector<NodeId> Graph::largest_component() const {
    if (n_active_ == 0) {
        throw std::invalid_argument("largest_component: graph has no active nodes");
    }
    return connected_components().front();
}

}  // namespace netres
