/*
 *   Copyright 2026 The trustlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "trustlab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace trustlab {

namespace {

constexpr std::string_view kCsvHeader = "src,dst,td,dtd";
constexpr std::string_view kNodeDirective = "#@node,";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        out.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) return out;
        line.remove_prefix(comma + 1);
    }
}

std::string quote_dot(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

TrustGraph load_edge_list(std::istream& in) {
    TrustGraph g;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_data = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.starts_with(kNodeDirective)) {
            try {
                g.add_node(trim(line.substr(kNodeDirective.size())));
            } catch (const GraphError& e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }
        if (line.front() == '#') continue;
        if (!seen_data) {
            seen_data = true;
            if (line == kCsvHeader || line == "src,dst,td,dtd,ud") continue;
        }

        const auto fields = split_commas(line);
        if (fields.size() != 4 && fields.size() != 5) {
            throw ParseError(line_no, "expected src,dst,td,dtd but found " +
                                          std::to_string(fields.size()) + " fields");
        }
        TrustTriple w;
        try {
            const double td = parse_real(fields[2]);
            const double dtd = parse_real(fields[3]);
            w = fields.size() == 5 ? TrustTriple::with_uncertainty(td, dtd, parse_real(fields[4]))
                                   : TrustTriple(td, dtd);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        try {
            const NodeIndex s = g.add_node(fields[0]);
            const NodeIndex d = g.add_node(fields[1]);
            // <0,0,1> is the absence of an edge.
            if (s != d && w.is_no_relation()) continue;
            g.add_edge(s, d, w);
        } catch (const GraphError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return g;
}

TrustGraph load_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in);
}

TrustGraph load_json_graph(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(0, "graph JSON must be an object");

    TrustGraph g;
    try {
        if (doc.contains("nodes")) {
            for (const auto& id : doc.at("nodes")) g.add_node(id.get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad nodes array: ") + e.what());
    } catch (const GraphError& e) {
        throw ParseError(0, e.what());
    }

    if (!doc.contains("edges")) return g;
    std::size_t index = 0;
    for (const auto& e : doc.at("edges")) {
        ++index;
        try {
            const TrustTriple w(e.at("td").get<double>(), e.at("dtd").get<double>());
            const NodeIndex s = g.add_node(e.at("src").get<std::string>());
            const NodeIndex d = g.add_node(e.at("dst").get<std::string>());
            if (s != d && w.is_no_relation()) continue;
            g.add_edge(s, d, w);
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(index, std::string("bad edge: ") + ex.what());
        } catch (const std::invalid_argument& ex) {
            throw ParseError(index, ex.what());
        } catch (const GraphError& ex) {
            throw ParseError(index, ex.what());
        }
    }
    return g;
}

TrustGraph load_json_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_json_graph(in);
}

TrustGraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
    if (path.extension() == ".json") return load_json_graph(in);
    return load_edge_list(in);
}

void export_graph(const TrustGraph& g, GraphFormat format, std::ostream& out) {
    switch (format) {
    case GraphFormat::csv:
        for (const auto& id : g.node_ids()) out << kNodeDirective << id << '\n';
        out << kCsvHeader << '\n';
        for (const auto& e : g.edges()) {
            out << g.node_id(e.src) << ',' << g.node_id(e.dst) << ',' << to_string(e.weight)
                << '\n';
        }
        break;
    case GraphFormat::json: {
        nlohmann::json doc;
        doc["nodes"] = nlohmann::json::array();
        for (const auto& id : g.node_ids()) doc["nodes"].push_back(id);
        doc["edges"] = nlohmann::json::array();
        for (const auto& e : g.edges()) {
            doc["edges"].push_back({{"src", g.node_id(e.src)},
                                    {"dst", g.node_id(e.dst)},
                                    {"td", e.weight.td()},
                                    {"dtd", e.weight.dtd()}});
        }
        out << doc.dump(1) << '\n';
        break;
    }
    case GraphFormat::dot:
        out << "digraph trust {\n";
        for (const auto& id : g.node_ids()) out << "  " << quote_dot(id) << ";\n";
        for (const auto& e : g.edges()) {
            out << "  " << quote_dot(g.node_id(e.src)) << " -> " << quote_dot(g.node_id(e.dst))
                << " [label=" << quote_dot(to_string(e.weight)) << "];\n";
        }
        out << "}\n";
        break;
    }
}

std::string export_graph(const TrustGraph& g, GraphFormat format) {
    std::ostringstream out;
    export_graph(g, format, out);
    return out.str();
}

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "csv") return GraphFormat::csv;
    if (name == "json") return GraphFormat::json;
    if (name == "dot") return GraphFormat::dot;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

}  // namespace trustlab
