#ifndef CNET_METRICS_HPP
#define CNET_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cnet/graph.hpp"
#include "cnet/histogram.hpp"

namespace cnet {

struct ClusteringReport {
    std::vector<double> per_node;  // C_i in [0, 1]; 0 when degree(i) < 2
    double average = 0.0;
};

// Least-squares line fit of log(p) vs log(value).
struct PowerLawFit {
    double gamma = 0.0;  // -slope; the exponent of p ~ value^(-gamma)
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Number of edges incident to u (weights ignored).
std::size_t degree(const WeightedGraph& g, NodeId u);

// Sum of weights of edges incident to u (weighted degree).
std::uint64_t strength(const WeightedGraph& g, NodeId u);

// 2E / N. Throws on an empty graph.
double average_degree(const WeightedGraph& g);

// bins[k] = number of nodes with degree k. Throws on an empty graph.
Histogram degree_distribution(const WeightedGraph& g);

// bins[w] = number of edges with weight w. Empty graph -> empty histogram.
Histogram weight_distribution(const WeightedGraph& g);

// bins[s] = number of nodes with strength s. Throws on an empty graph.
Histogram strength_distribution(const WeightedGraph& g);

// Per-node clustering coefficient C_i = 2 L_i / (k_i (k_i - 1)), where L_i
// is the number of edges among the neighbors of i, plus the arithmetic
// mean over all nodes. Nodes with degree < 2 get C_i = 0 and are included
// in the average. Throws on an empty graph.
ClusteringReport clustering(const WeightedGraph& g);

// ln(N) / ln(<k>), the logarithmic estimate of the average distance.
// Requires node_count >= 2 and avg_degree > 1; throws otherwise.
double small_world_estimate(std::size_t node_count, double avg_degree);

// Ordinary least squares on (log value, log probability) over the bins
// with value >= 1. Requires at least two such bins; throws otherwise.
PowerLawFit fit_power_law(const Histogram& h);

}  // namespace cnet

#endif
