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

/**
 * @file
 *
 * Reading and writing trust graphs.
 *
 * CSV: UTF-8, comma separated, '\n' line ends, one `src,dst,td,dtd` edge per
 * line. An optional fifth column carries ud and is checked against the unit
 * sum. A `src,dst,td,dtd` header line is optional and lines starting with '#'
 * are comments. The exporter also writes `#@node,<id>` lines, one per node in
 * index order, so that isolated nodes and the node numbering survive a round
 * trip; readers that treat them as comments lose nothing else.
 *
 * JSON: {"nodes": [ids...], "edges": [{"src", "dst", "td", "dtd"}...]}.
 *
 * DOT: export only, edge labels are "td,dtd".
 */

#ifndef TRUSTLAB_GRAPH_IO_HPP
#define TRUSTLAB_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "trustlab/trust_graph.hpp"

namespace trustlab {

enum class GraphFormat { csv, json, dot };

/// Malformed input. line() is 1-based for CSV, the edge index + 1 for JSON,
/// and 0 when no position applies.
class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

TrustGraph load_edge_list(std::istream& in);
TrustGraph load_edge_list(std::string_view text);

TrustGraph load_json_graph(std::istream& in);
TrustGraph load_json_graph(std::string_view text);

/// Picks JSON for a ".json" extension and CSV otherwise.
TrustGraph load_graph_file(const std::filesystem::path& path);

void export_graph(const TrustGraph& g, GraphFormat format, std::ostream& out);
std::string export_graph(const TrustGraph& g, GraphFormat format);

GraphFormat parse_graph_format(std::string_view name);

}  // namespace trustlab

#endif  // TRUSTLAB_GRAPH_IO_HPP
