#include "cnet/paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace cnet {

namespace {

constexpr std::uint64_t kUnreachedU64 = std::numeric_limits<std::uint64_t>::max();

// Integer-cost Dijkstra, cost(e) = weight(e). Exact for the path-length
// histogram; the double-valued public variant wraps this for WeightAsCost.
std::vector<std::uint64_t> dijkstra_weight_as_cost(const WeightedGraph& g, NodeId source) {
    std::vector<std::uint64_t> dist(g.node_count(), kUnreachedU64);
    using Item = std::pair<std::uint64_t, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0;
    queue.emplace(0, source);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d != dist[u]) continue;
        for (const Neighbor& n : g.neighbors(u)) {
            const std::uint64_t nd = d + n.weight;
            if (nd < dist[n.id]) {
                dist[n.id] = nd;
                queue.emplace(nd, n.id);
            }
        }
    }
    return dist;
}

std::vector<std::uint64_t> bfs_hops(const WeightedGraph& g, NodeId source) {
    std::vector<std::uint64_t> dist(g.node_count(), kUnreachedU64);
    std::queue<NodeId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop();
        for (const Neighbor& n : g.neighbors(u)) {
            if (dist[n.id] == kUnreachedU64) {
                dist[n.id] = dist[u] + 1;
                queue.push(n.id);
            }
        }
    }
    return dist;
}

void require_node(const WeightedGraph& g, NodeId u) {
    if (u >= g.node_count()) {
        throw std::invalid_argument("invalid node id " + std::to_string(u));
    }
}

}  // namespace

std::vector<std::optional<std::uint64_t>> shortest_paths_unweighted(const WeightedGraph& g,
                                                                    NodeId source) {
    require_node(g, source);
    const auto raw = bfs_hops(g, source);
    std::vector<std::optional<std::uint64_t>> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != kUnreachedU64) out[i] = raw[i];
    }
    return out;
}

std::vector<std::optional<double>> shortest_paths_weighted(const WeightedGraph& g, NodeId source,
                                                           WeightMode mode) {
    require_node(g, source);
    std::vector<std::optional<double>> out(g.node_count());

    if (mode == WeightMode::WeightAsCost) {
        const auto raw = dijkstra_weight_as_cost(g, source);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != kUnreachedU64) out[i] = static_cast<double>(raw[i]);
        }
        return out;
    }

    constexpr double kUnreached = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.node_count(), kUnreached);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d != dist[u]) continue;
        for (const Neighbor& n : g.neighbors(u)) {
            const double nd = d + 1.0 / static_cast<double>(n.weight);
            if (nd < dist[n.id]) {
                dist[n.id] = nd;
                queue.emplace(nd, n.id);
            }
        }
    }
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] != kUnreached) out[i] = dist[i];
    }
    return out;
}

PathLengthDistribution path_length_distribution(const WeightedGraph& g, bool weighted,
                                                WeightMode mode) {
    if (g.node_count() < 2) {
        throw std::invalid_argument("path_length_distribution: need at least 2 nodes");
    }
    if (weighted && mode == WeightMode::InverseWeightCost) {
        throw std::invalid_argument(
            "path_length_distribution: inverse-weight costs are fractional and cannot "
            "be binned; use weight-as-cost");
    }

    PathLengthDistribution out;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto dist = weighted ? dijkstra_weight_as_cost(g, u) : bfs_hops(g, u);
        for (NodeId v = u + 1; v < g.node_count(); ++v) {
            if (dist[v] != kUnreachedU64) {
                out.histogram.add(dist[v]);
            } else {
                ++out.unreachable_pairs;
            }
        }
    }
    out.pair_count = out.histogram.total();
    return out;
}

double diameter(const WeightedGraph& g, bool weighted, WeightMode mode) {
    if (g.node_count() < 2) {
        throw std::invalid_argument("diameter: need at least 2 nodes");
    }
    const ComponentsReport components = connected_components(g);
    std::uint32_t largest = 0;
    for (std::uint32_t c = 1; c < components.component_count; ++c) {
        if (components.sizes[c] > components.sizes[largest]) largest = c;
    }

    std::vector<NodeId> members;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (components.component_ids[u] == largest) members.push_back(u);
    }

    double best = 0.0;
    for (NodeId u : members) {
        if (weighted && mode == WeightMode::InverseWeightCost) {
            const auto dist = shortest_paths_weighted(g, u, mode);
            for (NodeId v : members) {
                if (dist[v] && *dist[v] > best) best = *dist[v];
            }
        } else {
            const auto dist = weighted ? dijkstra_weight_as_cost(g, u) : bfs_hops(g, u);
            for (NodeId v : members) {
                if (dist[v] != kUnreachedU64 && static_cast<double>(dist[v]) > best) {
                    best = static_cast<double>(dist[v]);
                }
            }
        }
    }
    return best;
}

ComponentsReport connected_components(const WeightedGraph& g) {
    ComponentsReport report;
    report.component_ids.assign(g.node_count(), std::numeric_limits<std::uint32_t>::max());

    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (report.component_ids[start] != std::numeric_limits<std::uint32_t>::max()) continue;
        const auto label = static_cast<std::uint32_t>(report.component_count);
        std::size_t size = 0;
        std::vector<NodeId> stack{start};
        report.component_ids[start] = label;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (const Neighbor& n : g.neighbors(u)) {
                if (report.component_ids[n.id] == std::numeric_limits<std::uint32_t>::max()) {
                    report.component_ids[n.id] = label;
                    stack.push_back(n.id);
                }
            }
        }
        report.sizes.push_back(size);
        ++report.component_count;
    }
    return report;
}

std::vector<Edge> bridges(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> disc(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<Edge> out;
    std::uint32_t timer = 0;

    // Iterative DFS; frames remember the position within the neighbor list.
    struct Frame {
        NodeId node;
        NodeId parent;
        std::size_t next_neighbor;
    };
    std::vector<Frame> stack;

    for (NodeId root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) continue;
        stack.push_back({root, root, 0});
        disc[root] = low[root] = timer++;

        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto ns = g.neighbors(frame.node);
            if (frame.next_neighbor < ns.size()) {
                const Neighbor n0 = ns[frame.next_neighbor++];
                if (disc[n0.id] == kUnvisited) {
                    disc[n0.id] = low[n0.id] = timer++;
                    stack.push_back({n0.id, frame.node, 0});
                } else if (n0.id != frame.parent) {
                    low[frame.node] = std::min(low[frame.node], disc[n0.id]);
                }
            } else {
                const Frame done = frame;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& up = stack.back();
                    low[up.node] = std::min(low[up.node], low[done.node]);
                    if (low[done.node] > disc[up.node]) {
                        const NodeId a = std::min(up.node, done.node);
                        const NodeId b = std::max(up.node, done.node);
                        out.push_back(Edge{a, b, g.edge_weight(a, b)});
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end(),
              [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
    return out;
}

}  // namespace cnet
