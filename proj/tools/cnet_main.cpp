// cnet: weighted-network statistics, synthetic generators, and the
// replicated model-comparison pipeline, over CSV edge lists.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnet/edge_list.hpp"
#include "cnet/generators.hpp"
#include "cnet/harness.hpp"
#include "cnet/metrics.hpp"
#include "cnet/paths.hpp"
#include "cnet/report_io.hpp"

namespace {

namespace fs = std::filesystem;

struct StatsOptions {
    std::vector<std::string> inputs;
    bool json = false;
};

struct DistributionsOptions {
    std::string input;
    std::string out_dir;
    std::string format = "csv";
};

struct PathsOptions {
    std::string input;
    bool weighted = false;
    std::string weighted_mode;
    std::string out_dir;
    std::string format = "csv";
};

struct GenerateOptions {
    std::string model;
    std::size_t n = 0;
    std::optional<std::size_t> l;
    std::optional<double> p;
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;
    std::uint64_t seed = 0;
    std::string output;
};

struct CompareOptions {
    std::string input;
    std::size_t replicas = 100;
    std::uint64_t seed = 42;
    std::string out_dir;
    std::string format = "csv";
};

cnet::OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return cnet::OutputFormat::Csv;
    if (name == "json") return cnet::OutputFormat::Json;
    throw std::invalid_argument("unknown format `" + name + "` (expected csv or json)");
}

// --out beats CNET_OUTPUT_DIR beats the working directory.
fs::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CNET_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open `" + path.string() + "` for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing `" + path.string() + "`");
}

fs::path prepare_out_dir(const std::string& flag_value) {
    const fs::path dir = resolve_out_dir(flag_value);
    fs::create_directories(dir);
    return dir;
}

void print_summary(const std::string& name, const cnet::NetworkSummary& s) {
    std::printf("network: %s\n", name.c_str());
    std::printf("  nodes                 %zu\n", s.node_count);
    std::printf("  edges                 %zu\n", s.edge_count);
    std::printf("  max weight            %llu\n", static_cast<unsigned long long>(s.max_weight));
    std::printf("  max weight frequency  %llu\n",
                static_cast<unsigned long long>(s.max_weight_frequency));
    std::printf("  average degree        %s\n", cnet::format_real(s.average_degree).c_str());
    std::printf("  max shortest path     %llu\n",
                static_cast<unsigned long long>(s.max_shortest_path));
    std::printf("  components            %zu\n", s.component_count);
}

int run_stats(const StatsOptions& opt) {
    std::vector<cnet::ParsedGraph> parsed;
    for (const std::string& path : opt.inputs) parsed.push_back(cnet::load_edge_list(path));

    std::size_t common = 0;
    if (parsed.size() >= 2) {
        std::set<std::string> shared(parsed[0].labels.labels().begin(),
                                     parsed[0].labels.labels().end());
        for (std::size_t i = 1; i < parsed.size(); ++i) {
            std::set<std::string> next;
            for (const std::string& label : parsed[i].labels.labels()) {
                if (shared.count(label)) next.insert(label);
            }
            shared.swap(next);
        }
        common = shared.size();
    }

    if (opt.json) {
        std::string out = "{\n  \"schema_version\": 1,\n  \"networks\": [\n";
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            std::string body = cnet::write_summary(cnet::summarize(parsed[i].graph),
                                                   cnet::OutputFormat::Json);
            body.pop_back();  // trailing newline
            out += "    {\"file\": \"" + opt.inputs[i] + "\", \"summary\": " + body + "}";
            out += (i + 1 < parsed.size()) ? ",\n" : "\n";
        }
        out += "  ]";
        if (parsed.size() >= 2) out += ",\n  \"common_labels\": " + std::to_string(common);
        out += "\n}\n";
        std::fputs(out.c_str(), stdout);
        return 0;
    }

    for (std::size_t i = 0; i < parsed.size(); ++i) {
        if (i > 0) std::printf("\n");
        print_summary(opt.inputs[i], cnet::summarize(parsed[i].graph));
    }
    if (parsed.size() >= 2) {
        std::printf("\ncommon labels across %zu networks: %zu\n", parsed.size(), common);
    }
    return 0;
}

int run_distributions(const DistributionsOptions& opt) {
    const cnet::OutputFormat format = parse_format(opt.format);
    const char* ext = format == cnet::OutputFormat::Csv ? ".csv" : ".json";
    const cnet::ParsedGraph parsed = cnet::load_edge_list(opt.input);
    const fs::path dir = prepare_out_dir(opt.out_dir);
    const std::string stem = fs::path(opt.input).stem().string();

    const std::pair<const char*, cnet::Histogram> outputs[] = {
        {"degree", cnet::degree_distribution(parsed.graph)},
        {"weight", cnet::weight_distribution(parsed.graph)},
        {"strength", cnet::strength_distribution(parsed.graph)},
    };
    for (const auto& [kind, histogram] : outputs) {
        const fs::path path = dir / (stem + "_" + kind + ext);
        write_file(path, cnet::write_histogram(histogram, format));
        std::printf("wrote %s\n", path.string().c_str());
    }
    return 0;
}

int run_paths(const PathsOptions& opt) {
    const cnet::OutputFormat format = parse_format(opt.format);
    if (opt.weighted && opt.weighted_mode.empty()) {
        throw std::invalid_argument(
            "--weighted requires an explicit --weighted-mode (cost or inverse)");
    }
    if (!opt.weighted && !opt.weighted_mode.empty()) {
        throw std::invalid_argument("--weighted-mode only applies with --weighted");
    }
    cnet::WeightMode mode = cnet::WeightMode::WeightAsCost;
    if (opt.weighted) {
        if (opt.weighted_mode == "cost") {
            mode = cnet::WeightMode::WeightAsCost;
        } else if (opt.weighted_mode == "inverse") {
            mode = cnet::WeightMode::InverseWeightCost;
        } else {
            throw std::invalid_argument("unknown --weighted-mode `" + opt.weighted_mode +
                                        "` (expected cost or inverse)");
        }
    }

    const cnet::ParsedGraph parsed = cnet::load_edge_list(opt.input);
    const cnet::PathLengthDistribution distribution =
        cnet::path_length_distribution(parsed.graph, opt.weighted, mode);

    const fs::path dir = prepare_out_dir(opt.out_dir);
    const std::string stem = fs::path(opt.input).stem().string();
    const char* ext = format == cnet::OutputFormat::Csv ? ".csv" : ".json";
    const fs::path path = dir / (stem + std::string("_path_lengths") + ext);
    write_file(path, cnet::write_path_lengths(distribution, format));
    std::printf("wrote %s (connected pairs %llu, unreachable %llu)\n", path.string().c_str(),
                static_cast<unsigned long long>(distribution.pair_count),
                static_cast<unsigned long long>(distribution.unreachable_pairs));
    return 0;
}

int run_generate(const GenerateOptions& opt) {
    const std::optional<cnet::Model> model = cnet::model_from_name(opt.model);
    if (!model) {
        throw std::invalid_argument("unknown model `" + opt.model +
                                    "` (expected er-gnl, gnp, ws, nws, or ba)");
    }
    cnet::GeneratorSpec spec;
    spec.model = *model;
    spec.n = opt.n;
    spec.l = opt.l;
    spec.p = opt.p;
    spec.k = opt.k;
    spec.m = opt.m;
    spec.seed = opt.seed;
    spec.validate();

    if (spec.k && *spec.k % 2 != 0) {
        std::fprintf(stderr, "note: odd k=%zu uses the even ring count %zu\n", *spec.k,
                     cnet::even_neighbor_count(*spec.k));
    }

    const cnet::WeightedGraph g = cnet::generate(spec);
    const std::string body = cnet::write_edge_list(g);
    if (opt.output.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        write_file(opt.output, body);
        std::printf("wrote %s (%zu nodes, %zu edges)\n", opt.output.c_str(), g.node_count(),
                    g.edge_count());
    }
    return 0;
}

int run_compare(const CompareOptions& opt) {
    const cnet::OutputFormat format = parse_format(opt.format);
    const cnet::ParsedGraph parsed = cnet::load_edge_list(opt.input);
    const std::vector<cnet::GeneratorSpec> specs =
        cnet::default_comparison_specs(parsed.graph, opt.seed);
    const cnet::ComparisonReport report = cnet::compare(parsed.graph, specs, opt.replicas);

    const fs::path dir = prepare_out_dir(opt.out_dir);
    const char* ext = format == cnet::OutputFormat::Csv ? ".csv" : ".json";
    const fs::path main_path = dir / (std::string("comparison") + ext);
    write_file(main_path, cnet::write_comparison(report, format));

    if (format == cnet::OutputFormat::Csv) {
        write_file(dir / "reference_summary.csv",
                   cnet::write_summary(report.reference_summary, cnet::OutputFormat::Csv));
    }
    write_file(dir / "reference_degree_distribution.csv",
               cnet::write_distribution_series(report.reference_distribution));
    for (const cnet::EnsembleResult& ensemble : report.ensembles) {
        const fs::path series = dir / (ensemble.spec.label() + "_degree_distribution.csv");
        write_file(series, cnet::write_distribution_series(ensemble.mean_degree_distribution));
    }

    std::printf("reference: %s (%zu nodes, %zu edges, avg degree %s)\n", opt.input.c_str(),
                report.reference_summary.node_count, report.reference_summary.edge_count,
                cnet::format_real(report.reference_summary.average_degree).c_str());
    std::printf("%-6s %10s %12s %10s %10s %10s\n", "model", "mean_edges", "mean_avg_deg",
                "tv_dist", "chi2", "max_diff");
    for (std::size_t i = 0; i < report.ensembles.size(); ++i) {
        const cnet::EnsembleResult& e = report.ensembles[i];
        const cnet::DistributionDistance& d = report.distances[i];
        std::printf("%-6s %10.2f %12.4f %10.4f %10.4f %10.4f\n", e.spec.label().c_str(),
                    e.mean_edge_count, e.mean_average_degree, d.total_variation, d.chi_square,
                    d.max_abs_diff);
    }
    std::printf("wrote %s\n", main_path.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-network analysis toolkit"};
    app.require_subcommand(1);

    StatsOptions stats;
    CLI::App* stats_cmd = app.add_subcommand("stats", "summary statistics of edge-list files");
    stats_cmd->add_option("files", stats.inputs, "input edge-list CSV files")
        ->required()
        ->expected(-1);
    stats_cmd->add_flag("--json", stats.json, "emit JSON instead of text");

    DistributionsOptions distributions;
    CLI::App* distributions_cmd =
        app.add_subcommand("distributions", "degree/weight/strength histograms");
    distributions_cmd->add_option("file", distributions.input, "input edge-list CSV")->required();
    distributions_cmd->add_option("--out", distributions.out_dir, "output directory");
    distributions_cmd->add_option("--format", distributions.format, "csv or json");

    PathsOptions paths;
    CLI::App* paths_cmd = app.add_subcommand("paths", "shortest-path length distribution");
    paths_cmd->add_option("file", paths.input, "input edge-list CSV")->required();
    paths_cmd->add_flag("--weighted", paths.weighted, "use edge weights as costs");
    paths_cmd->add_option("--weighted-mode", paths.weighted_mode,
                          "cost (sum weights) or inverse (sum 1/weight)");
    paths_cmd->add_option("--out", paths.out_dir, "output directory");
    paths_cmd->add_option("--format", paths.format, "csv or json");

    GenerateOptions generate;
    CLI::App* generate_cmd = app.add_subcommand("generate", "write one synthetic network");
    generate_cmd->add_option("--model", generate.model, "er-gnl, gnp, ws, nws, or ba")->required();
    generate_cmd->add_option("--n", generate.n, "node count")->required();
    generate_cmd->add_option("--l", generate.l, "edge count (er-gnl)");
    generate_cmd->add_option("--p", generate.p, "probability (gnp, ws, nws)");
    generate_cmd->add_option("--k", generate.k, "ring neighbor count (ws, nws)");
    generate_cmd->add_option("--m", generate.m, "links per new node (ba)");
    generate_cmd->add_option("--seed", generate.seed, "RNG seed");
    generate_cmd->add_option("-o,--output", generate.output, "output file (stdout when omitted)");

    CompareOptions compare;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "compare a network against the five synthetic models");
    compare_cmd->add_option("file", compare.input, "reference edge-list CSV")->required();
    compare_cmd->add_option("--replicas", compare.replicas, "runs per model (default 100)");
    compare_cmd->add_option("--seed", compare.seed, "base RNG seed (default 42)");
    compare_cmd->add_option("--out", compare.out_dir, "output directory");
    compare_cmd->add_option("--format", compare.format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (stats_cmd->parsed()) return run_stats(stats);
        if (distributions_cmd->parsed()) return run_distributions(distributions);
        if (paths_cmd->parsed()) return run_paths(paths);
        if (generate_cmd->parsed()) return run_generate(generate);
        if (compare_cmd->parsed()) return run_compare(compare);
        return 1;
    } catch (const cnet::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
}
