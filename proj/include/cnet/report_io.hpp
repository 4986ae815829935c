#ifndef CNET_REPORT_IO_HPP
#define CNET_REPORT_IO_HPP

#include <string>

#include "cnet/harness.hpp"
#include "cnet/histogram.hpp"
#include "cnet/paths.hpp"

namespace cnet {

enum class OutputFormat { Csv, Json };

// Version of the JSON document layout; every JSON writer stamps it as a
// top-level `schema_version` field.
inline constexpr int kSchemaVersion = 1;

// Probabilities and other real statistics rendered with 12 significant
// digits; integral values keep a trailing ".0" so the column stays
// visibly real-valued.
std::string format_real(double value);

// CSV: `value,count,probability` rows ascending by value.
// JSON: { schema_version, total, bins: [[value, count], ...] }.
std::string write_histogram(const Histogram& h, OutputFormat format);

// Plot-ready CSV series `degree,probability`, ascending.
std::string write_distribution_series(const DegreeProbabilities& distribution);

// CSV: `parameter,value` rows. JSON: flat object.
std::string write_summary(const NetworkSummary& s, OutputFormat format);

// CSV: `length,count,probability` rows plus trailing `# pairs` comments.
// JSON adds pair_count / unreachable_pairs fields.
std::string write_path_lengths(const PathLengthDistribution& d, OutputFormat format);

// The model table: per-model mean edges, mean average degree, and
// distances from the reference distribution. The JSON form also embeds the
// reference summary and every distribution. Throws when the report has no
// ensembles.
std::string write_comparison(const ComparisonReport& report, OutputFormat format);

}  // namespace cnet

#endif
