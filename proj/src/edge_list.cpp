#include "cnet/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace cnet {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

NodeId LabelMap::intern(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, id);
    return id;
}

std::optional<NodeId> LabelMap::find(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& LabelMap::label(NodeId id) const {
    if (id >= labels_.size()) {
        throw std::invalid_argument("LabelMap: unknown node id " + std::to_string(id));
    }
    return labels_[id];
}

ParsedGraph parse_edge_list(std::istream& in) {
    struct Record {
        NodeId u;
        NodeId v;
        std::uint64_t weight;
    };
    LabelMap labels;
    std::vector<Record> records;

    std::string line;
    std::size_t line_number = 0;
    bool seen_data_or_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        const std::vector<std::string> fields = split_fields(stripped);
        if (!seen_data_or_header) {
            seen_data_or_header = true;
            if (fields.size() == 3 && lowercase(fields[0]) == "source" &&
                lowercase(fields[1]) == "target" && lowercase(fields[2]) == "weight") {
                continue;  // header row
            }
        }

        if (fields.size() != 3) {
            throw ParseError(line_number, "expected 3 fields `source,target,weight`, got " +
                                              std::to_string(fields.size()));
        }
        const std::string& source = fields[0];
        const std::string& target = fields[1];
        if (source.empty() || target.empty()) {
            throw ParseError(line_number, "empty node label");
        }
        if (source == target) {
            throw ParseError(line_number, "self-loop on node `" + source + "`");
        }

        std::uint64_t weight = 0;
        const std::string& wf = fields[2];
        const auto [end, ec] = std::from_chars(wf.data(), wf.data() + wf.size(), weight);
        if (ec != std::errc() || end != wf.data() + wf.size()) {
            throw ParseError(line_number, "weight `" + wf + "` is not a non-negative integer");
        }
        if (weight < 1) {
            throw ParseError(line_number, "weight must be >= 1");
        }
        records.push_back({labels.intern(source), labels.intern(target), weight});
    }

    if (records.empty()) {
        throw ParseError(std::max<std::size_t>(line_number, 1), "input contains no edges");
    }

    ParsedGraph out{WeightedGraph(labels.size()), std::move(labels)};
    for (const Record& r : records) out.graph.add_edge(r.u, r.v, r.weight);
    return out;
}

ParsedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open `" + path + "` for reading");
    }
    return parse_edge_list(in);
}

std::string write_edge_list(const WeightedGraph& g, const LabelMap& labels) {
    std::string out = "source,target,weight\n";
    for (const Edge& e : g.edges()) {
        out += labels.label(e.u);
        out += ',';
        out += labels.label(e.v);
        out += ',';
        out += std::to_string(e.weight);
        out += '\n';
    }
    return out;
}

std::string write_edge_list(const WeightedGraph& g) {
    LabelMap ids;
    for (std::size_t u = 0; u < g.node_count(); ++u) ids.intern(std::to_string(u));
    return write_edge_list(g, ids);
}

}  // namespace cnet
