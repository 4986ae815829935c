#ifndef CNET_GENERATORS_HPP
#define CNET_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cnet/graph.hpp"

namespace cnet {

enum class Model {
    ErdosRenyiGnl,        // G(N, L): exactly L uniformly placed links
    GilbertGnp,           // G(N, p): each pair present with probability p
    WattsStrogatz,        // ring lattice + rewiring
    NewmanWattsStrogatz,  // ring lattice + shortcut addition
    BarabasiAlbert,       // growth + preferential attachment
};

// CLI names: "er-gnl", "gnp", "ws", "nws", "ba".
std::string model_name(Model model);
std::optional<Model> model_from_name(std::string_view name);

// Parameter record selecting one synthetic model. Exactly the fields the
// chosen model uses may be set; validate() enforces this.
struct GeneratorSpec {
    Model model = Model::ErdosRenyiGnl;
    std::size_t n = 0;             // node count (all models)
    std::optional<std::size_t> l;  // edge count (ER-GNL)
    std::optional<double> p;       // probability (GNP, WS rewiring, NWS addition)
    std::optional<std::size_t> k;  // ring neighbor count (WS, NWS)
    std::optional<std::size_t> m;  // links per new node (BA)
    std::uint64_t seed = 0;

    // Throws std::invalid_argument on missing, extraneous, or out-of-range
    // parameters.
    void validate() const;

    // Display label in the comparison tables: "G-ER", "GNP", "WS", "N-WS",
    // "BA2", "BA3", ...
    std::string label() const;
};

// 2 * floor(k / 2): the effective ring-lattice neighbor count.
constexpr std::size_t even_neighbor_count(std::size_t k) { return 2 * (k / 2); }

// Exactly l distinct edges drawn uniformly without replacement from all
// unordered pairs, weights 1. Requires l <= n(n-1)/2.
WeightedGraph erdos_renyi_gnl(std::size_t n, std::size_t l, std::uint64_t seed);

// Each unordered pair present independently with probability p, weights 1.
WeightedGraph gilbert_gnp(std::size_t n, double p, std::uint64_t seed);

// Ring lattice joining every node to its floor(k/2) nearest neighbors on
// each side, then each lattice edge independently rewired with probability
// p: the far endpoint moves to a uniformly drawn target that is neither
// the source nor an existing neighbor. A bounded number of redraws is
// attempted before the edge is left in place, so the edge count is exactly
// n * floor(k/2). Requires 2 <= k < n and p in [0, 1].
WeightedGraph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);

// Same ring lattice; instead of rewiring, each lattice edge triggers, with
// probability p, the addition of one shortcut between a uniformly drawn
// pair that is not yet connected. No edge is ever removed.
WeightedGraph newman_watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);

// Growth with preferential attachment: m isolated seed nodes, the first
// arrival links to all of them, and every later arrival links to m
// distinct existing nodes drawn with probability proportional to current
// degree. Total edges: (n - m) * m. Requires 1 <= m < n.
WeightedGraph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

// Validates the spec and dispatches. Identical specs (seed included)
// produce identical graphs.
WeightedGraph generate(const GeneratorSpec& spec);

}  // namespace cnet

#endif
