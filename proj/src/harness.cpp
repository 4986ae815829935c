#include "cnet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cnet/metrics.hpp"
#include "cnet/paths.hpp"
#include "cnet/rng.hpp"

namespace cnet {

NetworkSummary summarize(const WeightedGraph& g) {
    if (g.node_count() == 0) {
        throw std::invalid_argument("summarize: graph has no nodes");
    }
    NetworkSummary s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();

    const Histogram weights = weight_distribution(g);
    s.max_weight = weights.max_value();
    s.max_weight_frequency = weights.max_count();

    s.average_degree = average_degree(g);
    s.component_count = connected_components(g).component_count;
    if (g.node_count() >= 2) {
        s.max_shortest_path =
            static_cast<std::uint64_t>(diameter(g, /*weighted=*/false));
    }
    return s;
}

DegreeProbabilities normalized_degree_distribution(const WeightedGraph& g) {
    DegreeProbabilities out;
    for (const auto& [value, probability] : degree_distribution(g).normalized()) {
        out[value] = probability;
    }
    return out;
}

EnsembleResult run_ensemble(const GeneratorSpec& spec, std::size_t replicas) {
    if (replicas < 1) {
        throw std::invalid_argument("run_ensemble: replicas must be >= 1");
    }
    spec.validate();

    EnsembleResult result;
    result.spec = spec;
    result.replicas = replicas;

    double edge_sum = 0.0;
    double degree_sum = 0.0;
    DegreeProbabilities probability_sums;
    for (std::size_t i = 0; i < replicas; ++i) {
        GeneratorSpec replica = spec;
        replica.seed = derive_seed(spec.seed, i);
        const WeightedGraph g = generate(replica);
        edge_sum += static_cast<double>(g.edge_count());
        degree_sum += average_degree(g);
        for (const auto& [value, probability] : degree_distribution(g).normalized()) {
            probability_sums[value] += probability;
        }
    }

    const auto r = static_cast<double>(replicas);
    result.mean_edge_count = edge_sum / r;
    result.mean_average_degree = degree_sum / r;
    for (const auto& [value, sum] : probability_sums) {
        result.mean_degree_distribution[value] = sum / r;
    }
    return result;
}

std::vector<GeneratorSpec> default_comparison_specs(const WeightedGraph& reference,
                                                    std::uint64_t base_seed) {
    const std::size_t n = reference.node_count();
    const std::size_t l = reference.edge_count();
    const std::size_t k = even_neighbor_count(2 * l / n);

    std::vector<GeneratorSpec> specs;
    GeneratorSpec er;
    er.model = Model::ErdosRenyiGnl;
    er.n = n;
    er.l = l;
    specs.push_back(er);

    GeneratorSpec ws;
    ws.model = Model::WattsStrogatz;
    ws.n = n;
    ws.k = k;
    ws.p = 0.5;
    specs.push_back(ws);

    GeneratorSpec nws = ws;
    nws.model = Model::NewmanWattsStrogatz;
    nws.p = 0.25;
    specs.push_back(nws);

    GeneratorSpec ba2;
    ba2.model = Model::BarabasiAlbert;
    ba2.n = n;
    ba2.m = 2;
    specs.push_back(ba2);

    GeneratorSpec ba3 = ba2;
    ba3.m = 3;
    specs.push_back(ba3);

    for (std::size_t i = 0; i < specs.size(); ++i) {
        specs[i].seed = derive_seed(base_seed, i);
    }
    return specs;
}

DistributionDistance distribution_distance(const DegreeProbabilities& a,
                                           const DegreeProbabilities& b) {
    DistributionDistance d;
    double l1 = 0.0;
    auto account = [&](double pa, double pb) {
        const double diff = std::abs(pa - pb);
        l1 += diff;
        d.max_abs_diff = std::max(d.max_abs_diff, diff);
        if (pa + pb > 0.0) d.chi_square += (pa - pb) * (pa - pb) / (pa + pb);
    };
    auto ib = b.begin();
    for (const auto& [value, pa] : a) {
        while (ib != b.end() && ib->first < value) {
            account(0.0, ib->second);
            ++ib;
        }
        if (ib != b.end() && ib->first == value) {
            account(pa, ib->second);
            ++ib;
        } else {
            account(pa, 0.0);
        }
    }
    for (; ib != b.end(); ++ib) account(0.0, ib->second);
    d.total_variation = 0.5 * l1;
    return d;
}

ComparisonReport compare(const WeightedGraph& reference, const std::vector<GeneratorSpec>& specs,
                         std::size_t replicas) {
    if (reference.node_count() == 0) {
        throw std::invalid_argument("compare: reference graph is empty");
    }
    if (specs.empty()) {
        throw std::invalid_argument("compare: nothing to compare, no generator specs");
    }

    ComparisonReport report;
    report.reference_summary = summarize(reference);
    report.reference_distribution = normalized_degree_distribution(reference);
    for (const GeneratorSpec& spec : specs) {
        report.ensembles.push_back(run_ensemble(spec, replicas));
        report.distances.push_back(distribution_distance(
            report.ensembles.back().mean_degree_distribution, report.reference_distribution));
    }
    return report;
}

}  // namespace cnet
