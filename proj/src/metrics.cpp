#include "cnet/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace cnet {

namespace {

void require_nonempty(const WeightedGraph& g, const char* what) {
    if (g.node_count() == 0) {
        throw std::invalid_argument(std::string(what) + ": graph has no nodes");
    }
}

}  // namespace

std::size_t degree(const WeightedGraph& g, NodeId u) {
    return g.neighbors(u).size();
}

std::uint64_t strength(const WeightedGraph& g, NodeId u) {
    std::uint64_t sum = 0;
    for (const Neighbor& n : g.neighbors(u)) sum += n.weight;
    return sum;
}

double average_degree(const WeightedGraph& g) {
    require_nonempty(g, "average_degree");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

Histogram degree_distribution(const WeightedGraph& g) {
    require_nonempty(g, "degree_distribution");
    Histogram h;
    for (NodeId u = 0; u < g.node_count(); ++u) h.add(degree(g, u));
    return h;
}

Histogram weight_distribution(const WeightedGraph& g) {
    Histogram h;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (const Neighbor& n : g.neighbors(u)) {
            if (n.id > u) h.add(n.weight);
        }
    }
    return h;
}

Histogram strength_distribution(const WeightedGraph& g) {
    require_nonempty(g, "strength_distribution");
    Histogram h;
    for (NodeId u = 0; u < g.node_count(); ++u) h.add(strength(g, u));
    return h;
}

ClusteringReport clustering(const WeightedGraph& g) {
    require_nonempty(g, "clustering");
    ClusteringReport report;
    report.per_node.reserve(g.node_count());

    double sum = 0.0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto ns = g.neighbors(u);
        const std::size_t k = ns.size();
        double c = 0.0;
        if (k >= 2) {
            std::size_t links = 0;
            for (std::size_t i = 0; i < ns.size(); ++i) {
                for (std::size_t j = i + 1; j < ns.size(); ++j) {
                    if (g.has_edge(ns[i].id, ns[j].id)) ++links;
                }
            }
            c = 2.0 * static_cast<double>(links) /
                (static_cast<double>(k) * static_cast<double>(k - 1));
        }
        report.per_node.push_back(c);
        sum += c;
    }
    report.average = sum / static_cast<double>(g.node_count());
    return report;
}

double small_world_estimate(std::size_t node_count, double avg_degree) {
    if (node_count < 2) {
        throw std::invalid_argument("small_world_estimate: need at least 2 nodes");
    }
    if (!(avg_degree > 1.0)) {
        throw std::invalid_argument(
            "small_world_estimate: undefined for average degree <= 1");
    }
    return std::log(static_cast<double>(node_count)) / std::log(avg_degree);
}

PowerLawFit fit_power_law(const Histogram& h) {
    std::vector<double> xs;
    std::vector<double> ys;
    const double total = static_cast<double>(h.total());
    for (const auto& [value, count] : h.bins()) {
        if (value < 1 || count < 1) continue;
        xs.push_back(std::log(static_cast<double>(value)));
        ys.push_back(std::log(static_cast<double>(count) / total));
    }
    if (xs.size() < 2) {
        throw std::invalid_argument(
            "fit_power_law: need at least 2 bins with value >= 1");
    }

    const auto n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    const double slope = sxy / sxx;  // sxx > 0: bin values are distinct
    PowerLawFit fit;
    fit.gamma = -slope;
    fit.intercept = mean_y - slope * mean_x;
    if (syy == 0.0) {
        fit.r_squared = 1.0;  // constant data, fit is exact
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double r = ys[i] - (fit.intercept + slope * xs[i]);
            ss_res += r * r;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace cnet
