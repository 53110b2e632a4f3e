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
 * Directed trust graphs: a node registry keyed by external string ids and a
 * list of weighted edges with dense ids 0..edge_count()-1.
 *
 * Invariants enforced on insertion: no self-loops, at most one edge per
 * ordered pair, and no NO_RELATION weights. Self trust is implicit.
 */

#ifndef TRUSTLAB_TRUST_GRAPH_HPP
#define TRUSTLAB_TRUST_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trustlab/edge_set.hpp"
#include "trustlab/trust_triple.hpp"

namespace trustlab {

using NodeIndex = std::uint32_t;

struct Edge {
    NodeIndex src;
    NodeIndex dst;
    TrustTriple weight;
    EdgeId id;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Violation of a graph invariant.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphKind { ConfirmedAcyclic, General };

class TrustGraph {
public:
    TrustGraph() = default;

    /// Registers a node, or returns the index of an existing one.
    NodeIndex add_node(std::string_view id);

    /// Throws GraphError on self-loops, duplicate pairs and NO_RELATION weights.
    EdgeId add_edge(NodeIndex src, NodeIndex dst, const TrustTriple& weight);
    EdgeId add_edge(std::string_view src, std::string_view dst, const TrustTriple& weight);

    std::size_t node_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& node_id(NodeIndex v) const { return ids_.at(v); }
    std::span<const std::string> node_ids() const noexcept { return ids_; }
    std::optional<NodeIndex> find_node(std::string_view id) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::optional<EdgeId> find_edge(NodeIndex src, NodeIndex dst) const;

    /// Outgoing edge ids of v, ascending by destination.
    std::span<const EdgeId> out_edges(NodeIndex v) const { return out_.at(v); }
    /// Incoming edge ids of v, ascending by source.
    std::span<const EdgeId> in_edges(NodeIndex v) const { return in_.at(v); }

    friend bool operator==(const TrustGraph& a, const TrustGraph& b) {
        return a.ids_ == b.ids_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

/// Nodes in an order where every edge goes forward, or nullopt on a cycle.
std::optional<std::vector<NodeIndex>> topological_order(const TrustGraph& g);

inline bool is_acyclic(const TrustGraph& g) { return topological_order(g).has_value(); }

inline GraphKind classify(const TrustGraph& g) {
    return is_acyclic(g) ? GraphKind::ConfirmedAcyclic : GraphKind::General;
}

/// Length of the longest path in a DAG, in edges. Throws GraphError on a cycle.
std::size_t longest_path_length(const TrustGraph& g);

}  // namespace trustlab

#endif  // TRUSTLAB_TRUST_GRAPH_HPP
