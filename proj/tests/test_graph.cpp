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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "trustlab/graph_io.hpp"
#include "trustlab/random_graph.hpp"
#include "trustlab/trust_graph.hpp"

namespace trustlab {
namespace {

TEST(TrustGraph, RejectsInvalidEdges) {
    TrustGraph g;
    const NodeIndex a = g.add_node("a");
    const NodeIndex b = g.add_node("b");
    EXPECT_EQ(g.add_node("a"), a);
    g.add_edge(a, b, TrustTriple(0.5, 0.1));
    EXPECT_THROW(g.add_edge(a, a, TrustTriple(0.5, 0.1)), GraphError);
    EXPECT_THROW(g.add_edge(a, b, TrustTriple(0.2, 0.1)), GraphError);
    EXPECT_THROW(g.add_edge(b, a, NO_RELATION), GraphError);
    EXPECT_THROW(g.add_edge(a, 7, TrustTriple(0.2, 0.1)), GraphError);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(TrustGraph, RejectsUnrepresentableIds) {
    TrustGraph g;
    EXPECT_THROW(g.add_node(""), GraphError);
    EXPECT_THROW(g.add_node("a,b"), GraphError);
    EXPECT_THROW(g.add_node("a\nb"), GraphError);
    EXPECT_THROW(g.add_node("#a"), GraphError);
    EXPECT_THROW(g.add_node(" a"), GraphError);
    EXPECT_EQ(g.node_count(), 0u);
}

TEST(TrustGraph, AdjacencyIsSorted) {
    TrustGraph g;
    g.add_edge("x", "c", TrustTriple(0.1, 0.0));
    g.add_edge("x", "a", TrustTriple(0.2, 0.0));
    g.add_edge("b", "a", TrustTriple(0.3, 0.0));
    const NodeIndex x = *g.find_node("x");
    const NodeIndex a = *g.find_node("a");
    const auto out = g.out_edges(x);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_LT(g.edge(out[0]).dst, g.edge(out[1]).dst);
    const auto in = g.in_edges(a);
    ASSERT_EQ(in.size(), 2u);
    EXPECT_LT(g.edge(in[0]).src, g.edge(in[1]).src);
    ASSERT_TRUE(g.find_edge(x, a).has_value());
    EXPECT_EQ(g.edge(*g.find_edge(x, a)).dst, a);
    EXPECT_FALSE(g.find_edge(a, x).has_value());
}

TEST(TrustGraph, Classification) {
    EXPECT_EQ(classify(two_strategies_graph()), GraphKind::ConfirmedAcyclic);
    EXPECT_EQ(classify(one_cycle_graph()), GraphKind::General);
    EXPECT_EQ(longest_path_length(two_strategies_graph()), 3u);
    EXPECT_THROW(longest_path_length(one_cycle_graph()), GraphError);
}

TEST(RandomGraph, SameSeedSameGraph) {
    EXPECT_EQ(random_graph(30, 100, GraphKind::General, 5),
              random_graph(30, 100, GraphKind::General, 5));
    EXPECT_NE(random_graph(30, 100, GraphKind::General, 5),
              random_graph(30, 100, GraphKind::General, 6));
}

TEST(RandomGraph, ShapeAndKind) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TrustGraph dag = random_graph(15, 60, GraphKind::ConfirmedAcyclic, seed);
        EXPECT_EQ(dag.node_count(), 15u);
        EXPECT_EQ(dag.edge_count(), 60u);
        EXPECT_TRUE(is_acyclic(dag));
        const TrustGraph gen = random_graph(15, 15 * 14, GraphKind::General, seed);
        EXPECT_EQ(gen.edge_count(), 15u * 14u);
        for (const auto& e : gen.edges()) {
            if (e.id > 0) {
                const Edge& p = gen.edge(e.id - 1);
                EXPECT_LT(std::pair(p.src, p.dst), std::pair(e.src, e.dst));
            }
        }
    }
    EXPECT_THROW(random_graph(5, 11, GraphKind::ConfirmedAcyclic, 1), std::invalid_argument);
    EXPECT_THROW(random_graph(5, 21, GraphKind::General, 1), std::invalid_argument);
}

TEST(GraphIo, CsvParsesHeaderCommentsAndUncertainty) {
    const TrustGraph g = load_edge_list(
        "src,dst,td,dtd\n"
        "# a comment\n"
        "\n"
        "alice,bob,0.9,0.05\n"
        "bob,carol,0.5,0.25,0.25\n"
        "carol,dave,0,0\n");
    EXPECT_EQ(g.node_count(), 4u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edge(0).weight, TrustTriple(0.9, 0.05));
    EXPECT_TRUE(g.find_node("dave").has_value());
}

TEST(GraphIo, CsvErrorsCarryLineNumbers) {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            load_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("a,b,0.5,0.1\na,b\n"), 2u);
    EXPECT_EQ(line_of("a,b,0.7,0.6\n"), 1u);
    EXPECT_EQ(line_of("a,b,0.5,0.1\n# c\na,a,0.5,0.1\n"), 3u);
    EXPECT_EQ(line_of("a,b,0.5,0.1\na,b,0.5,0.2\n"), 2u);
    EXPECT_EQ(line_of("a,b,0.5,0.1,0.1\n"), 1u);
    EXPECT_EQ(line_of("a,b,x,0.1\n"), 1u);
}

TEST(GraphIo, RoundTripsThroughCsvAndJson) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TrustGraph g = random_graph(12, 30, GraphKind::General, seed);
        g.add_node("isolated");
        EXPECT_EQ(load_edge_list(export_graph(g, GraphFormat::csv)), g);
        EXPECT_EQ(load_json_graph(export_graph(g, GraphFormat::json)), g);
        EXPECT_EQ(export_graph(g, GraphFormat::csv), export_graph(g, GraphFormat::csv));
    }
}

TEST(GraphIo, JsonErrors) {
    EXPECT_THROW(load_json_graph("{"), ParseError);
    EXPECT_THROW(load_json_graph("[]"), ParseError);
    EXPECT_THROW(load_json_graph(R"({"nodes":["a"],"edges":[{"src":"a","dst":"a","td":0.5,"dtd":0}]})"),
                 ParseError);
    EXPECT_THROW(load_json_graph(R"({"edges":[{"src":"a","dst":"b","td":0.5}]})"), ParseError);
}

TEST(GraphIo, DotExportLabelsEdges) {
    const std::string dot = export_graph(two_strategies_graph(), GraphFormat::dot);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("0.9,0.05"), std::string::npos);
    EXPECT_THROW(parse_graph_format("xml"), std::invalid_argument);
    EXPECT_EQ(parse_graph_format("dot"), GraphFormat::dot);
}

TEST(GraphIo, LoadsFilesByExtension) {
    const auto dir = std::filesystem::temp_directory_path() / "trustlab_graph_io_test";
    std::filesystem::create_directories(dir);
    const TrustGraph g = one_cycle_graph();
    {
        std::ofstream(dir / "g.csv") << export_graph(g, GraphFormat::csv);
        std::ofstream(dir / "g.json") << export_graph(g, GraphFormat::json);
    }
    EXPECT_EQ(load_graph_file(dir / "g.csv"), g);
    EXPECT_EQ(load_graph_file(dir / "g.json"), g);
    EXPECT_THROW(load_graph_file(dir / "missing.csv"), ParseError);
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace trustlab
