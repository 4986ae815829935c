// Acceptance gate: every release-blocking requirement checked in one
// binary, one line of output per criterion. Exit code = number of
// failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "cnet/edge_list.hpp"
#include "cnet/generators.hpp"
#include "cnet/harness.hpp"
#include "cnet/metrics.hpp"
#include "cnet/paths.hpp"
#include "cnet/report_io.hpp"
#include "cnet/rng.hpp"

namespace fs = std::filesystem;
using cnet::GeneratorSpec;
using cnet::Model;
using cnet::NodeId;
using cnet::WeightedGraph;

namespace {

using Problems = std::vector<std::string>;

void expect(Problems& problems, bool ok, const std::string& message) {
    if (!ok) problems.push_back(message);
}

void expect_near(Problems& problems, double actual, double target, double tolerance,
                 const std::string& label) {
    if (!(std::abs(actual - target) <= tolerance)) {
        char buffer[160];
        std::snprintf(buffer, sizeof(buffer), "%s: got %.6f, want %.6f +/- %g", label.c_str(),
                      actual, target, tolerance);
        problems.emplace_back(buffer);
    }
}

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
#ifdef _WIN32
    return status;
#else
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

cnet::ParsedGraph load_fixture(const char* name) {
    return cnet::load_edge_list(std::string(CNET_DATA_DIR) + "/" + name);
}

WeightedGraph random_test_graph(cnet::Rng& rng, std::size_t n, double edge_prob,
                                std::uint64_t max_weight) {
    WeightedGraph g(n);
    for (NodeId u = 0; u + 1 < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.chance(edge_prob)) g.add_edge(u, v, 1 + rng.below(max_weight));
        }
    }
    return g;
}

WeightedGraph unit_weight_copy(const WeightedGraph& g) {
    WeightedGraph out(g.node_count());
    for (const auto& e : g.edges()) out.add_edge(e.u, e.v, 1);
    return out;
}

WeightedGraph without_edge(const WeightedGraph& g, const cnet::Edge& cut) {
    WeightedGraph out(g.node_count());
    for (const auto& e : g.edges()) {
        if (e.u == cut.u && e.v == cut.v) continue;
        out.add_edge(e.u, e.v, e.weight);
    }
    return out;
}

std::vector<cnet::Edge> bridge_oracle(const WeightedGraph& g) {
    const std::size_t base = cnet::connected_components(g).component_count;
    std::vector<cnet::Edge> out;
    for (const auto& e : g.edges()) {
        if (cnet::connected_components(without_edge(g, e)).component_count > base) {
            out.push_back(e);
        }
    }
    return out;
}

// every invariant the corpus graphs must satisfy
void check_invariants(Problems& problems, const WeightedGraph& g, const std::string& tag) {
    const std::size_t n = g.node_count();

    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < n; ++u) degree_sum += g.degree(u);
    expect(problems, degree_sum == 2 * g.edge_count(), tag + ": degree sum != 2E");

    if (n >= 1) {
        double total = 0.0;
        for (const auto& [value, p] : cnet::degree_distribution(g).normalized()) total += p;
        expect(problems, std::abs(total - 1.0) <= 1e-12, tag + ": degree probabilities != 1");

        const auto report = cnet::clustering(g);
        for (double c : report.per_node) {
            if (c < 0.0 || c > 1.0) {
                problems.push_back(tag + ": clustering outside [0,1]");
                break;
            }
        }
    }

    const WeightedGraph unit = unit_weight_copy(g);
    for (NodeId u = 0; u < n; ++u) {
        if (cnet::strength(unit, u) != cnet::degree(unit, u)) {
            problems.push_back(tag + ": unit-weight strength != degree");
            break;
        }
    }

    for (NodeId source = 0; source < n; ++source) {
        const auto hops = cnet::shortest_paths_unweighted(unit, source);
        const auto costs =
            cnet::shortest_paths_weighted(unit, source, cnet::WeightMode::WeightAsCost);
        for (std::size_t u = 0; u < n; ++u) {
            const bool same_reach = hops[u].has_value() == costs[u].has_value();
            const bool same_value =
                !hops[u] || std::abs(double(*hops[u]) - *costs[u]) <= 1e-9;
            if (!same_reach || !same_value) {
                problems.push_back(tag + ": unit-weight shortest paths diverge from hop counts");
                source = static_cast<NodeId>(n);
                break;
            }
        }
    }

    if (cnet::bridges(g) != bridge_oracle(g)) {
        problems.push_back(tag + ": bridges disagree with the edge-removal oracle");
    }

    if (n >= 2) {
        const auto d = cnet::path_length_distribution(g, false);
        expect(problems, d.histogram.total() + d.unreachable_pairs == n * (n - 1) / 2,
               tag + ": pair accounting broken");
    }
}

struct CriterionResult {
    bool passed;
    double seconds;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_seconds,
               const std::function<void(Problems&)>& body) {
    Problems problems;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_seconds > 0 && seconds > time_limit_seconds) {
        char buffer[96];
        std::snprintf(buffer, sizeof(buffer), "runtime %.2fs exceeds limit %.0fs", seconds,
                      time_limit_seconds);
        problems.emplace_back(buffer);
    }

    if (problems.empty()) {
        std::printf("[PASS] criterion %d: %s (%.2fs)\n", id, name.c_str(), seconds);
    } else {
        ++failures;
        std::printf("[FAIL] criterion %d: %s (%.2fs)\n", id, name.c_str(), seconds);
        for (const std::string& problem : problems) {
            std::printf("       - %s\n", problem.c_str());
        }
    }
    std::fflush(stdout);
}

// one deterministic-model row: every replica must hit the exact count
void check_exact_model(Problems& problems, const GeneratorSpec& base, std::size_t want_edges,
                       double want_avg_degree, const std::string& tag) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        GeneratorSpec spec = base;
        spec.seed = cnet::derive_seed(base.seed, i);
        const WeightedGraph g = cnet::generate(spec);
        if (g.edge_count() != want_edges) {
            problems.push_back(tag + ": edge count " + std::to_string(g.edge_count()) +
                               " != " + std::to_string(want_edges) + " at replica " +
                               std::to_string(i));
            return;
        }
        if (std::abs(cnet::average_degree(g) - want_avg_degree) > 0.005) {
            problems.push_back(tag + ": average degree off at replica " + std::to_string(i));
            return;
        }
    }
}

GeneratorSpec spec_of(Model model, std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.model = model;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

}  // namespace

int main() {
    const fs::path scratch = fs::path(CNET_SCRATCH_DIR) / "acceptance";

    criterion(1, "ingestion statistics of both bundled networks", 1.0, [](Problems& problems) {
        const auto meetings = load_fixture("meetings.csv");
        const auto ms = cnet::summarize(meetings.graph);
        expect(problems, ms.node_count == 101, "meetings node count != 101");
        expect(problems, ms.edge_count == 256, "meetings edge count != 256");
        expect(problems, ms.max_weight == 10, "meetings max weight != 10");
        expect_near(problems, ms.average_degree, 5.07, 0.005, "meetings average degree");
        expect(problems, ms.max_shortest_path == 7, "meetings max shortest path != 7");

        const auto calls = load_fixture("phonecalls.csv");
        const auto cs = cnet::summarize(calls.graph);
        expect(problems, cs.node_count == 100, "phone-call node count != 100");
        expect(problems, cs.edge_count == 124, "phone-call edge count != 124");
        expect(problems, cs.max_weight == 8, "phone-call max weight != 8");
        expect_near(problems, cs.average_degree, 2.48, 0.005, "phone-call average degree");
        expect(problems, cs.max_shortest_path == 14, "phone-call max shortest path != 14");

        std::set<std::string> meeting_labels(meetings.labels.labels().begin(),
                                             meetings.labels.labels().end());
        std::size_t shared = 0;
        for (const std::string& label : calls.labels.labels()) {
            if (meeting_labels.count(label)) ++shared;
        }
        expect(problems, shared == 47,
               "shared labels = " + std::to_string(shared) + ", want 47");
    });

    criterion(2, "deterministic generator rows, phone-call parameters, 100 replicas each", 5.0,
              [](Problems& problems) {
                  GeneratorSpec er = spec_of(Model::ErdosRenyiGnl, 100, 1001);
                  er.l = 124;
                  check_exact_model(problems, er, 124, 2.48, "G-ER");

                  GeneratorSpec ws = spec_of(Model::WattsStrogatz, 100, 1002);
                  ws.k = 2;
                  ws.p = 0.5;
                  check_exact_model(problems, ws, 100, 2.00, "WS");

                  GeneratorSpec ba2 = spec_of(Model::BarabasiAlbert, 100, 1003);
                  ba2.m = 2;
                  check_exact_model(problems, ba2, 196, 3.92, "BA2");

                  GeneratorSpec ba3 = spec_of(Model::BarabasiAlbert, 100, 1004);
                  ba3.m = 3;
                  check_exact_model(problems, ba3, 291, 5.82, "BA3");
              });

    criterion(2, "deterministic generator rows, meeting parameters, 100 replicas each", 5.0,
              [](Problems& problems) {
                  GeneratorSpec er = spec_of(Model::ErdosRenyiGnl, 101, 2001);
                  er.l = 256;
                  check_exact_model(problems, er, 256, 5.07, "G-ER");

                  GeneratorSpec ws = spec_of(Model::WattsStrogatz, 101, 2002);
                  ws.k = 5;  // rounds down to 4 neighbors
                  ws.p = 0.5;
                  check_exact_model(problems, ws, 202, 4.00, "WS");

                  GeneratorSpec ba2 = spec_of(Model::BarabasiAlbert, 101, 2003);
                  ba2.m = 2;
                  check_exact_model(problems, ba2, 198, 3.92, "BA2");

                  GeneratorSpec ba3 = spec_of(Model::BarabasiAlbert, 101, 2004);
                  ba3.m = 3;
                  check_exact_model(problems, ba3, 294, 5.82, "BA3");
              });

    criterion(3, "shortcut-model mean edge counts over 100 replicas", 0.0,
              [](Problems& problems) {
                  const auto calls = load_fixture("phonecalls.csv");
                  const auto call_specs = cnet::default_comparison_specs(calls.graph, 42);
                  const auto call_nws = cnet::run_ensemble(call_specs[2], 100);
                  expect_near(problems, call_nws.mean_edge_count, 123.0, 3.0,
                              "phone-call shortcut-model mean edges");

                  const auto meetings = load_fixture("meetings.csv");
                  const auto meeting_specs = cnet::default_comparison_specs(meetings.graph, 42);
                  const auto meeting_nws = cnet::run_ensemble(meeting_specs[2], 100);
                  expect_near(problems, meeting_nws.mean_edge_count, 250.0, 4.0,
                              "meeting shortcut-model mean edges");
              });

    criterion(4, "invariant suite: 200 random graphs plus both bundled networks", 30.0,
              [](Problems& problems) {
                  cnet::Rng rng(777);
                  for (int round = 0; round < 200 && problems.size() < 8; ++round) {
                      const std::size_t n = 1 + rng.below(30);
                      const double density = 0.05 + 0.4 * rng.unit();
                      const auto g = random_test_graph(rng, n, density, 6);
                      check_invariants(problems, g, "random graph " + std::to_string(round));
                  }
                  check_invariants(problems, load_fixture("meetings.csv").graph, "meetings");
                  check_invariants(problems, load_fixture("phonecalls.csv").graph, "phone calls");
              });

    criterion(5, "generator boundary exactness", 5.0, [](Problems& problems) {
        expect(problems, cnet::gilbert_gnp(40, 0.0, 3).edge_count() == 0,
               "p=0 must yield no edges");
        expect(problems, cnet::gilbert_gnp(40, 1.0, 3).edge_count() == 40 * 39 / 2,
               "p=1 must yield the complete graph");

        const auto untouched = cnet::newman_watts_strogatz(30, 4, 0.0, 5);
        bool ring_ok = untouched.edge_count() == 60;
        for (NodeId u = 0; u < 30 && ring_ok; ++u) {
            ring_ok = untouched.has_edge(u, (u + 1) % 30) && untouched.has_edge(u, (u + 2) % 30);
        }
        expect(problems, ring_ok, "p=0 shortcut model must equal the ring lattice");

        // p=0 lattice with 4 neighbors: 3 of the 6 neighbor pairs are linked
        const auto lattice = cnet::watts_strogatz(10, 4, 0.0, 7);
        const auto report = cnet::clustering(lattice);
        for (NodeId u = 0; u < 10; ++u) {
            std::size_t triangles = 0;
            for (NodeId a = 0; a < 10; ++a) {
                for (NodeId b = a + 1; b < 10; ++b) {
                    if (a == u || b == u) continue;
                    if (lattice.has_edge(u, a) && lattice.has_edge(u, b) &&
                        lattice.has_edge(a, b)) {
                        ++triangles;
                    }
                }
            }
            const std::size_t k = lattice.degree(u);
            const double oracle = 2.0 * double(triangles) / double(k * (k - 1));
            if (std::abs(oracle - 0.5) > 1e-12 || std::abs(report.per_node[u] - 0.5) > 1e-12) {
                problems.push_back("lattice clustering != 0.5 at node " + std::to_string(u));
                break;
            }
        }
    });

    criterion(6, "degree-distribution shape at n=10000", 60.0, [](Problems& problems) {
        const auto ba = cnet::barabasi_albert(10000, 2, 31);
        const auto h = cnet::degree_distribution(ba);
        const std::uint64_t k_max = h.max_value();
        const auto fit = cnet::fit_power_law(h.restricted(2, std::max<std::uint64_t>(k_max / 10, 4)));
        expect(problems, fit.gamma >= 2.5 && fit.gamma <= 3.5,
               "growth-model exponent " + std::to_string(fit.gamma) + " outside [2.5, 3.5]");

        const auto ws = cnet::watts_strogatz(10000, 4, 0.5, 32);
        std::size_t max_degree = 0;
        for (NodeId u = 0; u < 10000; ++u) max_degree = std::max(max_degree, ws.degree(u));
        expect(problems, max_degree < 12,
               "rewired-ring max degree " + std::to_string(max_degree) + " not < 12");
    });

    criterion(7, "exact power-law exponent recovery", 0.0, [](Problems& problems) {
        cnet::Histogram square;
        for (std::uint64_t k = 1; k <= 5; ++k) square.add(k, 3600 / (k * k));
        const auto fit2 = cnet::fit_power_law(square);
        expect(problems, std::abs(fit2.gamma - 2.0) <= 1e-9, "exponent 2 not recovered to 1e-9");
        expect(problems, std::abs(fit2.r_squared - 1.0) <= 1e-12, "exponent-2 fit r^2 != 1");

        cnet::Histogram cube;
        for (std::uint64_t k = 1; k <= 8; ++k) cube.add(k, 592704000 / (k * k * k));
        const auto fit3 = cnet::fit_power_law(cube);
        expect(problems, std::abs(fit3.gamma - 3.0) <= 1e-9, "exponent 3 not recovered to 1e-9");
        expect(problems, std::abs(fit3.r_squared - 1.0) <= 1e-12, "exponent-3 fit r^2 != 1");
    });

    criterion(8, "model comparison distances positive and reproducible", 0.0,
              [](Problems& problems) {
                  for (const char* fixture : {"phonecalls.csv", "meetings.csv"}) {
                      const auto parsed = load_fixture(fixture);
                      const auto specs = cnet::default_comparison_specs(parsed.graph, 42);
                      const auto first = cnet::compare(parsed.graph, specs, 100);
                      const auto second = cnet::compare(parsed.graph, specs, 100);

                      for (std::size_t i = 0; i < first.distances.size(); ++i) {
                          if (!(first.distances[i].total_variation > 0.0)) {
                              problems.push_back(std::string(fixture) + ": model " +
                                                 first.ensembles[i].spec.label() +
                                                 " has non-positive total variation");
                          }
                      }
                      const auto bytes_a = cnet::write_comparison(first, cnet::OutputFormat::Json);
                      const auto bytes_b = cnet::write_comparison(second, cnet::OutputFormat::Json);
                      expect(problems, bytes_a == bytes_b,
                             std::string(fixture) + ": repeated comparison not identical");
                  }
              });

    criterion(9, "byte-identical CLI reruns", 0.0, [&scratch](Problems& problems) {
        const std::string cli = CNET_CLI_PATH;
        const std::string data = CNET_DATA_DIR;
        const fs::path first = scratch / "a";
        const fs::path second = scratch / "b";
        fs::remove_all(scratch);
        fs::create_directories(first);
        fs::create_directories(second);

        for (const fs::path& dir : {first, second}) {
            const int generate_code =
                run_command("\"" + cli + "\" generate --model ba --n 100 --m 2 --seed 7 -o \"" +
                            (dir / "generated.csv").string() + "\" > /dev/null");
            expect(problems, generate_code == 0, "generate exited nonzero");

            const int compare_code = run_command(
                "\"" + cli + "\" compare \"" + data + "/phonecalls.csv\" --replicas 3 --seed 5 "
                "--out \"" + dir.string() + "\" > /dev/null");
            expect(problems, compare_code == 0, "compare exited nonzero");

            const int stats_code =
                run_command("\"" + cli + "\" stats --json \"" + data + "/meetings.csv\" > \"" +
                            (dir / "stats.json").string() + "\"");
            expect(problems, stats_code == 0, "stats exited nonzero");
        }

        std::size_t checked = 0;
        for (const auto& entry : fs::directory_iterator(first)) {
            const fs::path mirrored = second / entry.path().filename();
            if (!fs::exists(mirrored)) {
                problems.push_back("missing rerun output " + mirrored.string());
                continue;
            }
            if (slurp(entry.path()) != slurp(mirrored)) {
                problems.push_back("output differs between reruns: " +
                                   entry.path().filename().string());
            }
            ++checked;
        }
        expect(problems, checked >= 10, "expected at least 10 output files to compare");
    });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
