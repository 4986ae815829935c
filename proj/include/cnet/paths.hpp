#ifndef CNET_PATHS_HPP
#define CNET_PATHS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cnet/graph.hpp"
#include "cnet/histogram.hpp"

namespace cnet {

// Cost of traversing an edge of weight w in weighted shortest paths.
// WeightAsCost sums the raw weights; InverseWeightCost treats strong ties
// as short (cost 1/w).
enum class WeightMode {
    WeightAsCost,
    InverseWeightCost,
};

struct PathLengthDistribution {
    // Shortest-path length of every connected unordered pair.
    Histogram histogram;
    std::uint64_t pair_count = 0;         // connected pairs (== histogram total)
    std::uint64_t unreachable_pairs = 0;  // cross-component pairs
};

struct ComponentsReport {
    std::vector<std::uint32_t> component_ids;  // per-node label
    std::size_t component_count = 0;
    std::vector<std::size_t> sizes;  // indexed by component label
};

// BFS hop counts from source; nullopt for unreachable nodes.
std::vector<std::optional<std::uint64_t>> shortest_paths_unweighted(const WeightedGraph& g,
                                                                    NodeId source);

// Minimum-cost distances from source under the given mode; nullopt when
// unreachable. Costs are nonnegative (weights are >= 1), so this is a
// plain priority-queue Dijkstra.
std::vector<std::optional<double>> shortest_paths_weighted(const WeightedGraph& g, NodeId source,
                                                           WeightMode mode);

// Histogram of shortest-path lengths over all unordered node pairs.
// Weighted lengths use WeightAsCost, whose integer costs bin directly;
// InverseWeightCost produces fractional lengths and is rejected here
// (histograms hold integer values only). Requires N >= 2.
PathLengthDistribution path_length_distribution(const WeightedGraph& g, bool weighted,
                                                WeightMode mode = WeightMode::WeightAsCost);

// Maximum finite shortest-path length within the largest connected
// component. Requires N >= 2. Integer-valued except in inverse mode.
double diameter(const WeightedGraph& g, bool weighted,
                WeightMode mode = WeightMode::WeightAsCost);

// Partition of the nodes into maximal connected sets. Labels are assigned
// in order of the smallest node id in each component.
ComponentsReport connected_components(const WeightedGraph& g);

// Edges whose removal increases the number of connected components,
// in canonical order.
std::vector<Edge> bridges(const WeightedGraph& g);

}  // namespace cnet

#endif
