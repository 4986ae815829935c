#include "cnet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cnet/rng.hpp"

namespace cnet {

namespace {

constexpr int kMaxRedraws = 64;

std::uint64_t max_pairs(std::size_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Scratch edge set used while a generator still moves edges around; the
// finished set is materialized into a WeightedGraph in sorted order.
struct EdgeSetBuilder {
    explicit EdgeSetBuilder(std::size_t n) : degree(n, 0) {}

    static std::pair<NodeId, NodeId> key(NodeId a, NodeId b) {
        return {std::min(a, b), std::max(a, b)};
    }

    bool has(NodeId a, NodeId b) const { return edges.count(key(a, b)) != 0; }

    void add(NodeId a, NodeId b) {
        edges.insert(key(a, b));
        ++degree[a];
        ++degree[b];
    }

    void remove(NodeId a, NodeId b) {
        edges.erase(key(a, b));
        --degree[a];
        --degree[b];
    }

    WeightedGraph build(std::size_t n) const {
        WeightedGraph g(n);
        for (const auto& [u, v] : edges) g.add_edge(u, v, 1);
        return g;
    }

    std::set<std::pair<NodeId, NodeId>> edges;
    std::vector<std::uint32_t> degree;
};

// Ring lattice: node i joined to i+1 .. i+k/2 (mod n).
EdgeSetBuilder ring_lattice(std::size_t n, std::size_t half_k) {
    EdgeSetBuilder builder(n);
    for (std::size_t j = 1; j <= half_k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            builder.add(static_cast<NodeId>(i), static_cast<NodeId>((i + j) % n));
        }
    }
    return builder;
}

std::size_t checked_ring_params(std::size_t n, std::size_t k, double p) {
    if (k < 2) throw std::invalid_argument("ring lattice requires k >= 2");
    if (k >= n) throw std::invalid_argument("ring lattice requires k < n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    return even_neighbor_count(k) / 2;
}

}  // namespace

std::string model_name(Model model) {
    switch (model) {
        case Model::ErdosRenyiGnl: return "er-gnl";
        case Model::GilbertGnp: return "gnp";
        case Model::WattsStrogatz: return "ws";
        case Model::NewmanWattsStrogatz: return "nws";
        case Model::BarabasiAlbert: return "ba";
    }
    return "unknown";
}

std::optional<Model> model_from_name(std::string_view name) {
    if (name == "er-gnl") return Model::ErdosRenyiGnl;
    if (name == "gnp") return Model::GilbertGnp;
    if (name == "ws") return Model::WattsStrogatz;
    if (name == "nws") return Model::NewmanWattsStrogatz;
    if (name == "ba") return Model::BarabasiAlbert;
    return std::nullopt;
}

void GeneratorSpec::validate() const {
    if (n < 1) throw std::invalid_argument("node count must be >= 1");
    auto forbid = [&](bool set, const char* field) {
        if (set) {
            throw std::invalid_argument("model " + model_name(model) +
                                        " does not take parameter " + field);
        }
    };
    switch (model) {
        case Model::ErdosRenyiGnl:
            if (!l) throw std::invalid_argument("er-gnl requires l");
            forbid(p.has_value(), "p");
            forbid(k.has_value(), "k");
            forbid(m.has_value(), "m");
            if (*l > max_pairs(n)) {
                throw std::invalid_argument("er-gnl: l exceeds n(n-1)/2");
            }
            break;
        case Model::GilbertGnp:
            if (!p) throw std::invalid_argument("gnp requires p");
            forbid(l.has_value(), "l");
            forbid(k.has_value(), "k");
            forbid(m.has_value(), "m");
            if (!(*p >= 0.0 && *p <= 1.0)) {
                throw std::invalid_argument("gnp: p must be in [0, 1]");
            }
            break;
        case Model::WattsStrogatz:
        case Model::NewmanWattsStrogatz:
            if (!k) throw std::invalid_argument(model_name(model) + " requires k");
            if (!p) throw std::invalid_argument(model_name(model) + " requires p");
            forbid(l.has_value(), "l");
            forbid(m.has_value(), "m");
            if (*k < 2) throw std::invalid_argument("ring lattice requires k >= 2");
            if (*k >= n) throw std::invalid_argument("ring lattice requires k < n");
            if (!(*p >= 0.0 && *p <= 1.0)) {
                throw std::invalid_argument("p must be in [0, 1]");
            }
            break;
        case Model::BarabasiAlbert:
            if (!m) throw std::invalid_argument("ba requires m");
            forbid(l.has_value(), "l");
            forbid(p.has_value(), "p");
            forbid(k.has_value(), "k");
            if (*m < 1 || *m >= n) {
                throw std::invalid_argument("ba requires 1 <= m < n");
            }
            break;
    }
}

std::string GeneratorSpec::label() const {
    switch (model) {
        case Model::ErdosRenyiGnl: return "G-ER";
        case Model::GilbertGnp: return "GNP";
        case Model::WattsStrogatz: return "WS";
        case Model::NewmanWattsStrogatz: return "N-WS";
        case Model::BarabasiAlbert: return "BA" + std::to_string(m.value_or(0));
    }
    return "?";
}

WeightedGraph erdos_renyi_gnl(std::size_t n, std::size_t l, std::uint64_t seed) {
    const std::uint64_t pairs = max_pairs(n);
    if (l > pairs) {
        throw std::invalid_argument("erdos_renyi_gnl: l exceeds n(n-1)/2");
    }
    Rng rng(seed);

    // Floyd's sampling: exactly l distinct pair indices, l draws.
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = pairs - l; j < pairs; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        chosen.insert(chosen.count(t) ? j : t);
    }

    // Pair index -> (u, v), u < v, row-major over the upper triangle.
    auto row_base = [&](std::uint64_t u) {
        return u * (2 * static_cast<std::uint64_t>(n) - u - 1) / 2;
    };
    WeightedGraph g(n);
    for (const std::uint64_t index : chosen) {
        auto u = static_cast<std::uint64_t>(
            (2.0 * static_cast<double>(n) - 1.0 -
             std::sqrt((2.0 * static_cast<double>(n) - 1.0) * (2.0 * static_cast<double>(n) - 1.0) -
                       8.0 * static_cast<double>(index))) /
            2.0);
        while (u > 0 && row_base(u) > index) --u;
        while (row_base(u + 1) <= index) ++u;
        const std::uint64_t v = index - row_base(u) + u + 1;
        g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), 1);
    }
    return g;
}

WeightedGraph gilbert_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("gilbert_gnp: p must be in [0, 1]");
    }
    Rng rng(seed);
    WeightedGraph g(n);
    for (std::size_t u = 0; u + 1 < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.chance(p)) {
                g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), 1);
            }
        }
    }
    return g;
}

WeightedGraph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    const std::size_t half = checked_ring_params(n, k, p);
    Rng rng(seed);
    EdgeSetBuilder builder = ring_lattice(n, half);

    // Visit lattice edges in construction order; move the far endpoint of
    // each selected edge.
    for (std::size_t j = 1; j <= half; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!rng.chance(p)) continue;
            const auto u = static_cast<NodeId>(i);
            const auto v = static_cast<NodeId>((i + j) % n);
            if (builder.degree[u] >= n - 1) continue;  // nowhere to move it
            for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
                const auto w = static_cast<NodeId>(rng.below(n));
                if (w == u || builder.has(u, w)) continue;
                builder.remove(u, v);
                builder.add(u, w);
                break;
            }
        }
    }
    return builder.build(n);
}

WeightedGraph newman_watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    const std::size_t half = checked_ring_params(n, k, p);
    Rng rng(seed);
    EdgeSetBuilder builder = ring_lattice(n, half);

    const std::uint64_t ring_edges = static_cast<std::uint64_t>(n) * half;
    for (std::uint64_t e = 0; e < ring_edges; ++e) {
        if (!rng.chance(p)) continue;
        if (builder.edges.size() == max_pairs(n)) continue;  // already complete
        // Uniform over unordered pairs not yet connected, via rejection.
        for (int attempt = 0; attempt < kMaxRedraws * kMaxRedraws; ++attempt) {
            const auto a = static_cast<NodeId>(rng.below(n));
            const auto b = static_cast<NodeId>(rng.below(n));
            if (a == b || builder.has(a, b)) continue;
            builder.add(a, b);
            break;
        }
    }
    return builder.build(n);
}

WeightedGraph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1 || m >= n) {
        throw std::invalid_argument("barabasi_albert requires 1 <= m < n");
    }
    Rng rng(seed);
    WeightedGraph g(n);

    // One endpoint entry per incident edge; a uniform draw from this list
    // picks an existing node with probability proportional to its degree.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * (n - m) * m);

    for (std::size_t arrival = m; arrival < n; ++arrival) {
        const auto newcomer = static_cast<NodeId>(arrival);
        std::set<NodeId> targets;
        if (arrival == m) {
            // All degrees are still zero; the first arrival adopts every
            // seed node.
            for (std::size_t s = 0; s < m; ++s) targets.insert(static_cast<NodeId>(s));
        } else {
            while (targets.size() < m) {
                targets.insert(endpoints[rng.below(endpoints.size())]);
            }
        }
        for (const NodeId t : targets) {
            g.add_edge(newcomer, t, 1);
            endpoints.push_back(newcomer);
            endpoints.push_back(t);
        }
    }
    return g;
}

WeightedGraph generate(const GeneratorSpec& spec) {
    spec.validate();
    switch (spec.model) {
        case Model::ErdosRenyiGnl: return erdos_renyi_gnl(spec.n, *spec.l, spec.seed);
        case Model::GilbertGnp: return gilbert_gnp(spec.n, *spec.p, spec.seed);
        case Model::WattsStrogatz: return watts_strogatz(spec.n, *spec.k, *spec.p, spec.seed);
        case Model::NewmanWattsStrogatz:
            return newman_watts_strogatz(spec.n, *spec.k, *spec.p, spec.seed);
        case Model::BarabasiAlbert: return barabasi_albert(spec.n, *spec.m, spec.seed);
    }
    throw std::logic_error("unreachable");
}

}  // namespace cnet
