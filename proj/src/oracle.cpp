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

#include "trustlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace trustlab::oracle {

namespace {

constexpr std::size_t kUncapped = std::numeric_limits<std::size_t>::max();

void require_acyclic(const TrustGraph& g) {
    if (!is_acyclic(g)) throw GraphError("oracle: recursive evaluation needs an acyclic graph");
}

void require_small(const TrustGraph& g) {
    if (g.node_count() > kMaxExhaustiveNodes) {
        throw std::invalid_argument("oracle: exhaustive search limited to " +
                                    std::to_string(kMaxExhaustiveNodes) + " nodes");
    }
}

class RecursiveEvaluator {
public:
    RecursiveEvaluator(const TrustGraph& g, NodeIndex source) : g_(g), source_(source) {}

    std::optional<TrustTriple> eval(NodeIndex b, std::size_t depth) {
        if (depth == 0) return std::nullopt;
        const auto key = std::make_pair(b, depth);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<TrustTriple> terms;
        if (auto direct = g_.find_edge(source_, b)) terms.push_back(g_.edge(*direct).weight);
        const std::size_t next = depth == kUncapped ? kUncapped : depth - 1;
        for (EdgeId e : g_.in_edges(b)) {
            const Edge& edge = g_.edge(e);
            if (edge.src == source_) continue;
            if (auto sub = eval(edge.src, next)) terms.push_back(seq(*sub, edge.weight));
        }
        std::optional<TrustTriple> out;
        if (!terms.empty()) out = par(terms);
        memo_.emplace(key, out);
        return out;
    }

private:
    const TrustGraph& g_;
    NodeIndex source_;
    std::map<std::pair<NodeIndex, std::size_t>, std::optional<TrustTriple>> memo_;
};

// reach[mask] = endpoints v of simple paths that visit exactly `mask`.
// Starts from `sources` (one singleton mask per source bit).
std::vector<std::uint32_t> subset_reach(const TrustGraph& g, std::uint32_t sources) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if ((sources >> v) & 1u) reach[std::size_t{1} << v] |= 1u << v;
    }
    for (std::size_t mask = 1; mask < reach.size(); ++mask) {
        std::uint32_t ends = reach[mask];
        while (ends != 0) {
            const auto v = static_cast<NodeIndex>(std::countr_zero(ends));
            ends &= ends - 1;
            for (EdgeId e : g.out_edges(v)) {
                const NodeIndex w = g.edge(e).dst;
                if ((mask >> w) & 1u) continue;
                reach[mask | (std::size_t{1} << w)] |= 1u << w;
            }
        }
    }
    return reach;
}

void dfs_paths(const TrustGraph& g, NodeIndex v, NodeIndex target, std::size_t max_len,
               std::vector<NodeIndex>& path, std::vector<bool>& on_path, PathSet& out) {
    if (v == target) {
        out.paths.push_back(path);
        return;
    }
    if (path.size() - 1 >= max_len) return;
    for (EdgeId e : g.out_edges(v)) {
        const NodeIndex w = g.edge(e).dst;
        if (on_path[w]) continue;
        on_path[w] = true;
        path.push_back(w);
        dfs_paths(g, w, target, max_len, path, on_path, out);
        path.pop_back();
        on_path[w] = false;
    }
}

}  // namespace

TrustTriple recursive_eval(const TrustGraph& g, NodeIndex a, NodeIndex b,
                           std::optional<std::size_t> depth_cap) {
    require_acyclic(g);
    if (a >= g.node_count() || b >= g.node_count()) throw std::out_of_range("recursive_eval");
    if (a == b) return FULL_TRUST;
    RecursiveEvaluator ev(g, a);
    return ev.eval(b, depth_cap.value_or(kUncapped)).value_or(NO_RELATION);
}

TrustMatrix recursive_eval_all(const TrustGraph& g, std::optional<std::size_t> depth_cap) {
    require_acyclic(g);
    const std::size_t n = g.node_count();
    TrustMatrix out(n);
    for (NodeIndex a = 0; a < n; ++a) {
        RecursiveEvaluator ev(g, a);
        for (NodeIndex b = 0; b < n; ++b) {
            if (a == b) continue;
            if (auto v = ev.eval(b, depth_cap.value_or(kUncapped))) out.set(a, b, *v);
        }
    }
    return out;
}

std::size_t longest_path_dag(const TrustGraph& g, NodeIndex a, NodeIndex b) {
    require_acyclic(g);
    if (a >= g.node_count() || b >= g.node_count()) throw std::out_of_range("longest_path_dag");
    if (a == b) return 0;
    std::vector<std::optional<std::size_t>> memo(g.node_count());
    auto lambda = [&](auto&& self, NodeIndex v) -> std::size_t {
        if (memo[v]) return *memo[v];
        std::size_t best = g.find_edge(a, v) ? 1 : 0;
        for (EdgeId e : g.in_edges(v)) {
            const NodeIndex k = g.edge(e).src;
            if (k == a) continue;
            const std::size_t sub = self(self, k);
            if (sub > 0) best = std::max(best, sub + 1);
        }
        memo[v] = best;
        return best;
    };
    return lambda(lambda, b);
}

std::size_t longest_path_exhaustive(const TrustGraph& g, NodeIndex a, NodeIndex b) {
    require_small(g);
    if (a >= g.node_count() || b >= g.node_count()) {
        throw std::out_of_range("longest_path_exhaustive");
    }
    if (a == b) return 0;
    const auto reach = subset_reach(g, 1u << a);
    std::size_t best = 0;
    for (std::size_t mask = 1; mask < reach.size(); ++mask) {
        if ((reach[mask] >> b) & 1u) {
            best = std::max(best, static_cast<std::size_t>(std::popcount(mask)) - 1);
        }
    }
    return best;
}

std::size_t longest_path(const TrustGraph& g, NodeIndex a, NodeIndex b) {
    if (is_acyclic(g)) return longest_path_dag(g, a, b);
    return longest_path_exhaustive(g, a, b);
}

std::size_t longest_path_overall(const TrustGraph& g) {
    const std::size_t n = g.node_count();
    std::size_t best = 0;
    if (is_acyclic(g)) {
        for (NodeIndex a = 0; a < n; ++a) {
            for (NodeIndex b = 0; b < n; ++b) best = std::max(best, longest_path_dag(g, a, b));
        }
        return best;
    }
    require_small(g);
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    const auto reach = subset_reach(g, all);
    for (std::size_t mask = 1; mask < reach.size(); ++mask) {
        if (reach[mask] != 0) {
            best = std::max(best, static_cast<std::size_t>(std::popcount(mask)) - 1);
        }
    }
    return best;
}

PathSet enumerate_simple_paths(const TrustGraph& g, NodeIndex a, NodeIndex b,
                               std::size_t max_len) {
    require_small(g);
    if (a >= g.node_count() || b >= g.node_count()) {
        throw std::out_of_range("enumerate_simple_paths");
    }
    PathSet out{a, b, {}};
    std::vector<NodeIndex> path{a};
    std::vector<bool> on_path(g.node_count(), false);
    on_path[a] = true;
    dfs_paths(g, a, b, max_len, path, on_path, out);
    return out;
}

std::vector<EdgeId> edges_on_simple_paths(const TrustGraph& g, NodeIndex a, NodeIndex b) {
    const PathSet set = enumerate_simple_paths(g, a, b, g.node_count());
    std::vector<EdgeId> out;
    for (const auto& path : set.paths) {
        for (std::size_t i = 1; i < path.size(); ++i) out.push_back(*g.find_edge(path[i - 1], path[i]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeId> edges_on_walks(const TrustGraph& g, NodeIndex a, NodeIndex b) {
    const std::size_t n = g.node_count();
    auto flood = [&](NodeIndex start, bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<NodeIndex> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            for (EdgeId e : forward ? g.out_edges(v) : g.in_edges(v)) {
                const NodeIndex w = forward ? g.edge(e).dst : g.edge(e).src;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    };
    const auto from_a = flood(a, true);
    const auto to_b = flood(b, false);
    std::vector<EdgeId> out;
    for (const auto& e : g.edges()) {
        if (from_a[e.src] && to_b[e.dst]) out.push_back(e.id);
    }
    return out;
}

}  // namespace trustlab::oracle
