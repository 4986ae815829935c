#ifndef CNET_GRAPH_HPP
#define CNET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cnet {

// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

struct Neighbor {
    NodeId id;
    std::uint64_t weight;
};

// Undirected edge in canonical form (u < v).
struct Edge {
    NodeId u;
    NodeId v;
    std::uint64_t weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph with positive integer edge weights.
//
// Mutable only through add_edge during construction; every analysis
// routine takes the graph by const reference, so a fully built graph can
// be shared across threads freely.
//
// Invariants kept by construction:
//  - no self-loops,
//  - at most one edge per unordered node pair (repeat insertions
//    accumulate into the weight),
//  - adjacency lists are symmetric and sorted by neighbor id.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Adds weight w to the edge {u, v}, creating it if absent.
    // Throws std::invalid_argument on u == v, invalid ids, or w < 1.
    void add_edge(NodeId u, NodeId v, std::uint64_t weight);

    bool has_edge(NodeId u, NodeId v) const;

    // Weight of {u, v}, or 0 when the edge is absent.
    std::uint64_t edge_weight(NodeId u, NodeId v) const;

    // Neighbors of u with weights, sorted by neighbor id.
    std::span<const Neighbor> neighbors(NodeId u) const;

    std::size_t degree(NodeId u) const { return neighbors(u).size(); }

    // All edges in canonical order: u < v, sorted by (u, v).
    std::vector<Edge> edges() const;

private:
    void check_node(NodeId u) const;

    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct Subgraph {
    WeightedGraph graph;
    // new dense id -> id in the parent graph
    std::vector<NodeId> original_ids;
};

// Subgraph induced by `nodes` (duplicates ignored), with re-densified ids.
// Throws std::invalid_argument on ids outside the parent graph.
Subgraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes);

}  // namespace cnet

#endif
