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

#include "trustlab/trust_graph.hpp"

#include <algorithm>
#include <limits>

namespace trustlab {

namespace {

void check_node_id(std::string_view id) {
    if (id.empty()) throw GraphError("node id must not be empty");
    if (id.find_first_of(",\n\r") != std::string_view::npos) {
        throw GraphError("node id '" + std::string(id) + "' contains a comma or line break");
    }
    if (id.front() == '#') throw GraphError("node id '" + std::string(id) + "' starts with '#'");
    auto blank = [](char c) { return c == ' ' || c == '\t'; };
    if (blank(id.front()) || blank(id.back())) {
        throw GraphError("node id '" + std::string(id) + "' has surrounding whitespace");
    }
}

}  // namespace

NodeIndex TrustGraph::add_node(std::string_view id) {
    if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
    check_node_id(id);
    if (ids_.size() >= std::numeric_limits<NodeIndex>::max()) {
        throw GraphError("too many nodes");
    }
    const auto v = static_cast<NodeIndex>(ids_.size());
    ids_.emplace_back(id);
    index_.emplace(ids_.back(), v);
    out_.emplace_back();
    in_.emplace_back();
    return v;
}

std::optional<NodeIndex> TrustGraph::find_node(std::string_view id) const {
    if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
    return std::nullopt;
}

std::optional<EdgeId> TrustGraph::find_edge(NodeIndex src, NodeIndex dst) const {
    const auto& out = out_.at(src);
    auto it = std::lower_bound(out.begin(), out.end(), dst,
                               [&](EdgeId e, NodeIndex v) { return edges_[e].dst < v; });
    if (it != out.end() && edges_[*it].dst == dst) return *it;
    return std::nullopt;
}

EdgeId TrustGraph::add_edge(NodeIndex src, NodeIndex dst, const TrustTriple& weight) {
    if (src >= ids_.size() || dst >= ids_.size()) throw GraphError("edge endpoint out of range");
    if (src == dst) throw GraphError("self-loop on '" + ids_[src] + "'");
    if (weight.is_no_relation()) {
        throw GraphError("edge '" + ids_[src] + "' -> '" + ids_[dst] +
                         "' has weight <0,0,1>, which is not an edge");
    }
    if (find_edge(src, dst)) {
        throw GraphError("duplicate edge '" + ids_[src] + "' -> '" + ids_[dst] + "'");
    }
    if (edges_.size() >= std::numeric_limits<EdgeId>::max()) throw GraphError("too many edges");

    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{src, dst, weight, id});

    auto& out = out_[src];
    out.insert(std::lower_bound(out.begin(), out.end(), dst,
                                [&](EdgeId e, NodeIndex v) { return edges_[e].dst < v; }),
               id);
    auto& in = in_[dst];
    in.insert(std::lower_bound(in.begin(), in.end(), src,
                               [&](EdgeId e, NodeIndex v) { return edges_[e].src < v; }),
              id);
    return id;
}

EdgeId TrustGraph::add_edge(std::string_view src, std::string_view dst,
                            const TrustTriple& weight) {
    if (src == dst) throw GraphError("self-loop on '" + std::string(src) + "'");
    const NodeIndex s = add_node(src);
    const NodeIndex d = add_node(dst);
    return add_edge(s, d, weight);
}

std::optional<std::vector<NodeIndex>> topological_order(const TrustGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> indegree(n);
    for (const auto& e : g.edges()) ++indegree[e.dst];

    std::vector<NodeIndex> order;
    order.reserve(n);
    for (NodeIndex v = 0; v < n; ++v) {
        if (indegree[v] == 0) order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (EdgeId e : g.out_edges(order[head])) {
            const NodeIndex w = g.edge(e).dst;
            if (--indegree[w] == 0) order.push_back(w);
        }
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

std::size_t longest_path_length(const TrustGraph& g) {
    auto order = topological_order(g);
    if (!order) throw GraphError("graph contains a directed cycle");
    std::vector<std::size_t> depth(g.node_count(), 0);
    std::size_t best = 0;
    for (NodeIndex v : *order) {
        for (EdgeId e : g.out_edges(v)) {
            const NodeIndex w = g.edge(e).dst;
            depth[w] = std::max(depth[w], depth[v] + 1);
            best = std::max(best, depth[w]);
        }
    }
    return best;
}

}  // namespace trustlab
