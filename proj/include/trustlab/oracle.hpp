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
 * Brute-force references for checking the engines on small graphs.
 *
 * Nothing here shares code with the engines beyond the trust algebra: trust
 * is evaluated by recursion over predecessors, and path facts come from
 * explicit enumeration or dynamic programming over node subsets.
 */

#ifndef TRUSTLAB_ORACLE_HPP
#define TRUSTLAB_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "trustlab/trust_graph.hpp"
#include "trustlab/trust_matrix.hpp"
#include "trustlab/trust_triple.hpp"

namespace trustlab::oracle {

/// Size guard for the exponential searches.
inline constexpr std::size_t kMaxExhaustiveNodes = 20;

/// Simple paths between one pair of nodes, as node sequences.
struct PathSet {
    NodeIndex from = 0;
    NodeIndex to = 0;
    std::vector<std::vector<NodeIndex>> paths;
};

/**
 * Trust from a to b in a DAG, aggregated right to left: the direct edge (if
 * any) together with seq(trust(a, p), C[p][b]) for every predecessor p of b
 * other than a, combined with par(). With depth_cap = d only paths of at most
 * d edges count. NO_RELATION when there is no such path; FULL_TRUST when
 * a == b. Throws GraphError on a cyclic graph.
 */
TrustTriple recursive_eval(const TrustGraph& g, NodeIndex a, NodeIndex b,
                           std::optional<std::size_t> depth_cap = std::nullopt);

/// recursive_eval() for every ordered pair, as a dense matrix.
TrustMatrix recursive_eval_all(const TrustGraph& g,
                               std::optional<std::size_t> depth_cap = std::nullopt);

/// Longest simple a -> b path in edges, 0 when b is unreachable or a == b.
/// Uses the predecessor recursion on DAGs and exhaustive search otherwise;
/// the latter throws std::invalid_argument above kMaxExhaustiveNodes nodes.
std::size_t longest_path(const TrustGraph& g, NodeIndex a, NodeIndex b);

/// Predecessor recursion: lambda(a,b) = 1 for a lone edge, otherwise
/// 1 + max lambda(a,k) over predecessors k != a of b. DAG only.
std::size_t longest_path_dag(const TrustGraph& g, NodeIndex a, NodeIndex b);

/// Dynamic programming over visited-node subsets. Size guarded.
std::size_t longest_path_exhaustive(const TrustGraph& g, NodeIndex a, NodeIndex b);

/// Longest simple path anywhere in the graph. Size guarded unless acyclic.
std::size_t longest_path_overall(const TrustGraph& g);

/// All simple a -> b paths of at most max_len edges, in lexicographic order
/// of node indices. Size guarded.
PathSet enumerate_simple_paths(const TrustGraph& g, NodeIndex a, NodeIndex b,
                               std::size_t max_len);

/// Edges lying on at least one simple a -> b path, ascending. Size guarded.
std::vector<EdgeId> edges_on_simple_paths(const TrustGraph& g, NodeIndex a, NodeIndex b);

/// Edges u -> v with u reachable from a and b reachable from v, i.e. edges
/// of some a -> b walk, ascending.
std::vector<EdgeId> edges_on_walks(const TrustGraph& g, NodeIndex a, NodeIndex b);

}  // namespace trustlab::oracle

#endif  // TRUSTLAB_ORACLE_HPP
