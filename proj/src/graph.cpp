#include "cnet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cnet {

void WeightedGraph::check_node(NodeId u) const {
    if (u >= adjacency_.size()) {
        throw std::invalid_argument("invalid node id " + std::to_string(u) +
                                    " (graph has " + std::to_string(adjacency_.size()) +
                                    " nodes)");
    }
}

void WeightedGraph::add_edge(NodeId u, NodeId v, std::uint64_t weight) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw std::invalid_argument("self-loop rejected at node " + std::to_string(u));
    }
    if (weight < 1) {
        throw std::invalid_argument("edge weight must be >= 1");
    }

    auto insert_half = [](std::vector<Neighbor>& list, NodeId to, std::uint64_t w) {
        auto it = std::lower_bound(list.begin(), list.end(), to,
                                   [](const Neighbor& n, NodeId id) { return n.id < id; });
        if (it != list.end() && it->id == to) {
            it->weight += w;
            return false;
        }
        list.insert(it, Neighbor{to, w});
        return true;
    };

    const bool created = insert_half(adjacency_[u], v, weight);
    insert_half(adjacency_[v], u, weight);
    if (created) ++edge_count_;
}

bool WeightedGraph::has_edge(NodeId u, NodeId v) const {
    return edge_weight(u, v) != 0;
}

std::uint64_t WeightedGraph::edge_weight(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& n, NodeId id) { return n.id < id; });
    if (it != list.end() && it->id == v) return it->weight;
    return 0;
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeId u) const {
    check_node(u);
    return adjacency_[u];
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (const Neighbor& n : adjacency_[u]) {
            if (n.id > u) out.push_back(Edge{u, n.id, n.weight});
        }
    }
    return out;
}

Subgraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes) {
    std::vector<NodeId> members(nodes.begin(), nodes.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (NodeId u : members) {
        if (u >= g.node_count()) {
            throw std::invalid_argument("induced_subgraph: unknown node id " + std::to_string(u));
        }
    }

    std::vector<NodeId> new_id(g.node_count(), static_cast<NodeId>(-1));
    for (NodeId i = 0; i < members.size(); ++i) new_id[members[i]] = i;

    Subgraph out{WeightedGraph(members.size()), members};
    for (NodeId u : members) {
        for (const Neighbor& n : g.neighbors(u)) {
            if (n.id > u && new_id[n.id] != static_cast<NodeId>(-1)) {
                out.graph.add_edge(new_id[u], new_id[n.id], n.weight);
            }
        }
    }
    return out;
}

}  // namespace cnet
