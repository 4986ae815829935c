#include "cnet/report_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace cnet {

namespace {

using nlohmann::json;

json histogram_bins(const Histogram& h) {
    json bins = json::array();
    for (const auto& [value, count] : h.bins()) {
        bins.push_back(json::array({value, count}));
    }
    return bins;
}

json distribution_pairs(const DegreeProbabilities& distribution) {
    json pairs = json::array();
    for (const auto& [degree, probability] : distribution) {
        pairs.push_back(json::array({degree, probability}));
    }
    return pairs;
}

json summary_object(const NetworkSummary& s) {
    return json{
        {"nodes", s.node_count},
        {"edges", s.edge_count},
        {"max_weight", s.max_weight},
        {"max_weight_frequency", s.max_weight_frequency},
        {"average_degree", s.average_degree},
        {"max_shortest_path", s.max_shortest_path},
        {"components", s.component_count},
    };
}

json spec_params(const GeneratorSpec& spec) {
    json params{{"model", model_name(spec.model)}, {"n", spec.n}, {"seed", spec.seed}};
    if (spec.l) params["l"] = *spec.l;
    if (spec.p) params["p"] = *spec.p;
    if (spec.k) params["k"] = *spec.k;
    if (spec.m) params["m"] = *spec.m;
    return params;
}

}  // namespace

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    std::string out(buffer);
    if (out.find_first_of(".einf") == std::string::npos) out += ".0";
    return out;
}

std::string write_histogram(const Histogram& h, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json doc{{"schema_version", kSchemaVersion},
                 {"total", h.total()},
                 {"bins", histogram_bins(h)}};
        return doc.dump(2) + "\n";
    }
    std::string out = "value,count,probability\n";
    for (const auto& [value, probability] : h.normalized()) {
        out += std::to_string(value);
        out += ',';
        out += std::to_string(h.count_of(value));
        out += ',';
        out += format_real(probability);
        out += '\n';
    }
    return out;
}

std::string write_distribution_series(const DegreeProbabilities& distribution) {
    std::string out = "degree,probability\n";
    for (const auto& [degree, probability] : distribution) {
        out += std::to_string(degree);
        out += ',';
        out += format_real(probability);
        out += '\n';
    }
    return out;
}

std::string write_summary(const NetworkSummary& s, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json doc = summary_object(s);
        doc["schema_version"] = kSchemaVersion;
        return doc.dump(2) + "\n";
    }
    std::string out = "parameter,value\n";
    out += "nodes," + std::to_string(s.node_count) + "\n";
    out += "edges," + std::to_string(s.edge_count) + "\n";
    out += "max_weight," + std::to_string(s.max_weight) + "\n";
    out += "max_weight_frequency," + std::to_string(s.max_weight_frequency) + "\n";
    out += "average_degree," + format_real(s.average_degree) + "\n";
    out += "max_shortest_path," + std::to_string(s.max_shortest_path) + "\n";
    out += "components," + std::to_string(s.component_count) + "\n";
    return out;
}

std::string write_path_lengths(const PathLengthDistribution& d, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json doc{{"schema_version", kSchemaVersion},
                 {"total", d.histogram.total()},
                 {"bins", histogram_bins(d.histogram)},
                 {"pair_count", d.pair_count},
                 {"unreachable_pairs", d.unreachable_pairs}};
        return doc.dump(2) + "\n";
    }
    std::string out = "length,count,probability\n";
    for (const auto& [value, probability] : d.histogram.normalized()) {
        out += std::to_string(value);
        out += ',';
        out += std::to_string(d.histogram.count_of(value));
        out += ',';
        out += format_real(probability);
        out += '\n';
    }
    out += "# connected_pairs," + std::to_string(d.pair_count) + "\n";
    out += "# unreachable_pairs," + std::to_string(d.unreachable_pairs) + "\n";
    return out;
}

std::string write_comparison(const ComparisonReport& report, OutputFormat format) {
    if (report.ensembles.empty()) {
        throw std::invalid_argument("write_comparison: report has no ensembles");
    }
    if (format == OutputFormat::Json) {
        json models = json::array();
        for (std::size_t i = 0; i < report.ensembles.size(); ++i) {
            const EnsembleResult& e = report.ensembles[i];
            const DistributionDistance& d = report.distances[i];
            models.push_back(json{
                {"label", e.spec.label()},
                {"params", spec_params(e.spec)},
                {"replicas", e.replicas},
                {"mean_edge_count", e.mean_edge_count},
                {"mean_average_degree", e.mean_average_degree},
                {"mean_degree_distribution", distribution_pairs(e.mean_degree_distribution)},
                {"distances",
                 json{{"total_variation", d.total_variation},
                      {"chi_square", d.chi_square},
                      {"max_abs_diff", d.max_abs_diff}}},
            });
        }
        json doc{{"schema_version", kSchemaVersion},
                 {"reference",
                  json{{"summary", summary_object(report.reference_summary)},
                       {"degree_distribution", distribution_pairs(report.reference_distribution)}}},
                 {"models", models}};
        return doc.dump(2) + "\n";
    }

    std::string out =
        "model,replicas,mean_edges,mean_avg_degree,total_variation,chi_square,max_abs_diff\n";
    for (std::size_t i = 0; i < report.ensembles.size(); ++i) {
        const EnsembleResult& e = report.ensembles[i];
        const DistributionDistance& d = report.distances[i];
        out += e.spec.label();
        out += ',' + std::to_string(e.replicas);
        out += ',' + format_real(e.mean_edge_count);
        out += ',' + format_real(e.mean_average_degree);
        out += ',' + format_real(d.total_variation);
        out += ',' + format_real(d.chi_square);
        out += ',' + format_real(d.max_abs_diff);
        out += '\n';
    }
    return out;
}

}  // namespace cnet
