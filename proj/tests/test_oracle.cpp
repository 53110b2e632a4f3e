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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "trustlab/oracle.hpp"
#include "trustlab/random_graph.hpp"

namespace trustlab {
namespace {

using oracle::enumerate_simple_paths;
using oracle::longest_path;
using oracle::longest_path_dag;
using oracle::longest_path_exhaustive;
using oracle::recursive_eval;

TEST(Oracle, TwoStrategiesRightToLeft) {
    const FixtureWeights w;
    const TrustGraph g = two_strategies_graph(w);
    const NodeIndex n1 = *g.find_node("1");
    const NodeIndex n4 = *g.find_node("4");
    const TrustTriple v = recursive_eval(g, n1, n4);
    EXPECT_NEAR(v.td(), 0.7924075, 1e-12);
    EXPECT_NEAR(v.dtd(), 0.0708, 1e-12);
    EXPECT_EQ(recursive_eval(g, n1, n4, 2), seq(w.a, w.d));
    EXPECT_EQ(recursive_eval(g, n4, n1), NO_RELATION);
    EXPECT_EQ(recursive_eval(g, n1, n1), FULL_TRUST);
}

TEST(Oracle, ChainIsSequentialComposition) {
    TrustGraph g;
    const TrustTriple x(0.3, 0.6);
    const TrustTriple y(0.8, 0.1);
    g.add_edge("a", "b", x);
    g.add_edge("b", "c", y);
    EXPECT_EQ(recursive_eval(g, 0, 2), seq(x, y));
    EXPECT_EQ(recursive_eval(g, 0, 2, 1), NO_RELATION);
    EXPECT_EQ(longest_path(g, 0, 2), 2u);
}

TEST(Oracle, RefusesCycles) {
    EXPECT_THROW(recursive_eval(one_cycle_graph(), 0, 2), GraphError);
    EXPECT_THROW(longest_path_dag(one_cycle_graph(), 0, 2), GraphError);
}

TEST(Oracle, OneCycleLongestSimplePath) {
    const TrustGraph g = one_cycle_graph();
    EXPECT_EQ(longest_path(g, 0, 2), 2u);
    EXPECT_EQ(longest_path(g, 0, 3), 3u);
    EXPECT_EQ(longest_path(g, 2, 1), 2u);
    EXPECT_EQ(longest_path(g, 1, 0), 0u);
    EXPECT_EQ(oracle::longest_path_overall(g), 3u);
}

TEST(Oracle, LongestPathMethodsAgreeOnDags) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const std::size_t n = 2 + rng.below(10);
        const TrustGraph g =
            random_graph(n, rng.below(n * (n - 1) / 2 + 1), GraphKind::ConfirmedAcyclic, seed);
        std::size_t overall = 0;
        for (NodeIndex a = 0; a < n; ++a) {
            for (NodeIndex b = 0; b < n; ++b) {
                const std::size_t dp = longest_path_dag(g, a, b);
                ASSERT_EQ(dp, longest_path_exhaustive(g, a, b));
                std::size_t by_enum = 0;
                for (const auto& p : enumerate_simple_paths(g, a, b, n).paths) {
                    by_enum = std::max(by_enum, p.size() - 1);
                }
                ASSERT_EQ(dp, a == b ? 0 : by_enum);
                overall = std::max(overall, dp);
            }
        }
        EXPECT_EQ(oracle::longest_path_overall(g), overall);
        EXPECT_EQ(longest_path_length(g), overall);
    }
}

TEST(Oracle, EnumeratesTriangleWithChord) {
    TrustGraph g;
    const TrustTriple w(0.5, 0.0);
    g.add_edge("a", "b", w);
    g.add_edge("b", "c", w);
    g.add_edge("a", "c", w);
    g.add_edge("c", "a", w);
    const auto set = enumerate_simple_paths(g, 0, 2, 5);
    ASSERT_EQ(set.paths.size(), 2u);
    EXPECT_EQ(set.paths[0], (std::vector<NodeIndex>{0, 1, 2}));
    EXPECT_EQ(set.paths[1], (std::vector<NodeIndex>{0, 2}));
    EXPECT_EQ(enumerate_simple_paths(g, 0, 2, 1).paths.size(), 1u);
    for (const auto& p : set.paths) {
        std::vector<NodeIndex> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
        EXPECT_EQ(p.front(), 0u);
        EXPECT_EQ(p.back(), 2u);
    }
}

TEST(Oracle, DisconnectedPairHasNoPaths) {
    TrustGraph g;
    g.add_edge("a", "b", TrustTriple(0.5, 0.0));
    g.add_node("c");
    EXPECT_TRUE(enumerate_simple_paths(g, 0, 2, 5).paths.empty());
    EXPECT_TRUE(oracle::edges_on_simple_paths(g, 0, 2).empty());
    EXPECT_TRUE(oracle::edges_on_walks(g, 0, 2).empty());
    EXPECT_EQ(longest_path(g, 0, 2), 0u);
}

TEST(Oracle, WalkEdgesContainPathEdges) {
    const TrustGraph g = one_cycle_graph();
    EXPECT_EQ(oracle::edges_on_simple_paths(g, 0, 2), (std::vector<EdgeId>{0, 1}));
    EXPECT_EQ(oracle::edges_on_walks(g, 0, 2), (std::vector<EdgeId>{0, 1, 2, 3}));
}

TEST(Oracle, SizeGuard) {
    const TrustGraph big = random_graph(oracle::kMaxExhaustiveNodes + 1, 30, GraphKind::General, 1);
    EXPECT_THROW(longest_path_exhaustive(big, 0, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_simple_paths(big, 0, 1, 3), std::invalid_argument);
    const TrustGraph dag =
        random_graph(oracle::kMaxExhaustiveNodes + 5, 60, GraphKind::ConfirmedAcyclic, 1);
    EXPECT_NO_THROW(oracle::longest_path_overall(dag));
}

TEST(Oracle, DepthCapIsMonotoneInCoverage) {
    const TrustGraph g = random_graph(8, 20, GraphKind::ConfirmedAcyclic, 6);
    const TrustMatrix full = oracle::recursive_eval_all(g);
    const TrustMatrix capped = oracle::recursive_eval_all(g, 8);
    EXPECT_EQ(full, capped);
    const TrustMatrix one = oracle::recursive_eval_all(g, 1);
    for (const auto& e : g.edges()) EXPECT_EQ(one.at(e.src, e.dst), e.weight);
    EXPECT_EQ(one.relation_count(), g.edge_count());
}

}  // namespace
}  // namespace trustlab
