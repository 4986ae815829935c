#ifndef CNET_TESTS_SUPPORT_HPP
#define CNET_TESTS_SUPPORT_HPP

#include <cstdint>

#include "cnet/graph.hpp"
#include "cnet/rng.hpp"

namespace cnet::testing {

// Random graph on n nodes: each pair gets an edge with probability
// edge_prob, weights uniform in [1, max_weight]. Isolated nodes allowed.
inline WeightedGraph random_graph(Rng& rng, std::size_t n, double edge_prob,
                                  std::uint64_t max_weight = 4) {
    WeightedGraph g(n);
    for (NodeId u = 0; u + 1 < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.chance(edge_prob)) g.add_edge(u, v, 1 + rng.below(max_weight));
        }
    }
    return g;
}

// Path 0-1-2-...-(n-1) with unit weights.
inline WeightedGraph path_graph(std::size_t n) {
    WeightedGraph g(n);
    for (NodeId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1, 1);
    return g;
}

// Complete graph with unit weights.
inline WeightedGraph complete_graph(std::size_t n) {
    WeightedGraph g(n);
    for (NodeId u = 0; u + 1 < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
    }
    return g;
}

// Star: node 0 joined to 1..n-1 with unit weights.
inline WeightedGraph star_graph(std::size_t n) {
    WeightedGraph g(n);
    for (NodeId v = 1; v < n; ++v) g.add_edge(0, v, 1);
    return g;
}

// Cycle 0-1-...-(n-1)-0 with unit weights.
inline WeightedGraph cycle_graph(std::size_t n) {
    WeightedGraph g(n);
    for (NodeId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1, 1);
    if (n > 2) g.add_edge(static_cast<NodeId>(n - 1), 0, 1);
    return g;
}

}  // namespace cnet::testing

#endif
