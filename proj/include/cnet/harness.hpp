#ifndef CNET_HARNESS_HPP
#define CNET_HARNESS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "cnet/generators.hpp"
#include "cnet/graph.hpp"

namespace cnet {

// The headline statistics of one network.
struct NetworkSummary {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::uint64_t max_weight = 0;            // largest edge weight (0 if no edges)
    std::uint64_t max_weight_frequency = 0;  // edge count of the modal weight
    double average_degree = 0.0;
    std::uint64_t max_shortest_path = 0;  // unweighted, largest component
    std::size_t component_count = 0;
};

// degree -> probability. Real-valued because ensemble averaging mixes the
// replicas' normalized histograms.
using DegreeProbabilities = std::map<std::uint64_t, double>;

// Averaged statistics of `replicas` independently seeded runs of one spec.
struct EnsembleResult {
    GeneratorSpec spec;
    std::size_t replicas = 0;
    double mean_edge_count = 0.0;
    double mean_average_degree = 0.0;
    // Per-degree mean of the replicas' normalized degree distributions;
    // degrees absent in a replica contribute 0 to that replica's term.
    DegreeProbabilities mean_degree_distribution;
};

struct DistributionDistance {
    double total_variation = 0.0;  // in [0, 1]
    double chi_square = 0.0;       // symmetric form, sum (a-b)^2 / (a+b)
    double max_abs_diff = 0.0;
};

struct ComparisonReport {
    NetworkSummary reference_summary;
    DegreeProbabilities reference_distribution;
    std::vector<EnsembleResult> ensembles;
    std::vector<DistributionDistance> distances;  // parallel to ensembles
};

// All summary statistics of one graph. Throws on an empty graph.
NetworkSummary summarize(const WeightedGraph& g);

// Degree distribution as a probability map.
DegreeProbabilities normalized_degree_distribution(const WeightedGraph& g);

// Generates `replicas` graphs with per-replica seeds derive_seed(spec.seed, i)
// and averages edge count, average degree, and the degree distribution.
EnsembleResult run_ensemble(const GeneratorSpec& spec, std::size_t replicas);

// The five-model comparison set, parameterized from the reference graph:
// G-ER with l = E, WS with k = floor(2E/N) (even-normalized) and p = 0.5,
// N-WS with the same k and p = 0.25, BA with m = 2 and m = 3. Model i gets
// seed derive_seed(base_seed, i).
std::vector<GeneratorSpec> default_comparison_specs(const WeightedGraph& reference,
                                                    std::uint64_t base_seed);

// Distance between two probability maps over the union of their supports.
DistributionDistance distribution_distance(const DegreeProbabilities& a,
                                           const DegreeProbabilities& b);

// Ensembles for every spec plus their distances from the reference
// distribution. Throws when the reference is empty or specs is empty.
ComparisonReport compare(const WeightedGraph& reference, const std::vector<GeneratorSpec>& specs,
                         std::size_t replicas);

}  // namespace cnet

#endif
