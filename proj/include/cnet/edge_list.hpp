#ifndef CNET_EDGE_LIST_HPP
#define CNET_EDGE_LIST_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cnet/graph.hpp"

namespace cnet {

// Input error carrying the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Bijective label <-> dense node id map. Ids follow first appearance in
// the input, so a given file always produces the same mapping.
class LabelMap {
public:
    // Returns the id of `label`, interning it if new.
    NodeId intern(const std::string& label);

    std::optional<NodeId> find(const std::string& label) const;
    const std::string& label(NodeId id) const;
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> ids_;
};

struct ParsedGraph {
    WeightedGraph graph;
    LabelMap labels;
};

// Parses CSV lines `source,target,weight`. An optional leading header
// `source,target,weight` is skipped, as are `#` comment lines and blank
// lines. Duplicate pairs accumulate weight. Throws ParseError (with the
// line number) on malformed rows, self-loops, weights < 1, and on input
// containing no edges at all.
ParsedGraph parse_edge_list(std::istream& in);

// Same, reading from a file. Throws std::runtime_error when the file
// cannot be opened.
ParsedGraph load_edge_list(const std::string& path);

// Canonical CSV: `source,target,weight` header, one row per edge in
// canonical edge order.
std::string write_edge_list(const WeightedGraph& g, const LabelMap& labels);

// Same with decimal node ids as labels.
std::string write_edge_list(const WeightedGraph& g);

}  // namespace cnet

#endif
