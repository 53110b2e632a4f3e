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

#include "trustlab/random_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace trustlab {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

TrustTriple Rng::triple() {
    while (true) {
        double td = uniform();
        double dtd = uniform();
        if (td + dtd > 1.0) {
            td = 1.0 - td;
            dtd = 1.0 - dtd;
        }
        if (td == 0.0 && dtd == 0.0) continue;
        return TrustTriple(td, dtd);
    }
}

namespace {

// Floyd's algorithm: `count` distinct values of [0, range), sorted.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t range, std::size_t count) {
    std::unordered_set<std::uint64_t> picked;
    picked.reserve(count * 2);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t j = range - count; j < range; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        const std::uint64_t v = picked.contains(t) ? j : t;
        picked.insert(v);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TrustGraph random_graph(std::size_t n, std::size_t edges, GraphKind kind, std::uint64_t seed) {
    const std::uint64_t nn = n;
    const std::uint64_t pairs =
        kind == GraphKind::General ? nn * (nn > 0 ? nn - 1 : 0) : nn * (nn > 0 ? nn - 1 : 0) / 2;
    if (edges > pairs) {
        throw std::invalid_argument("random_graph: " + std::to_string(edges) +
                                    " edges do not fit in " + std::to_string(n) + " nodes");
    }

    Rng rng(seed);
    TrustGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_node(std::to_string(v));

    std::vector<std::pair<NodeIndex, NodeIndex>> chosen;
    chosen.reserve(edges);
    if (kind == GraphKind::General) {
        for (std::uint64_t idx : sample_distinct(rng, pairs, edges)) {
            const auto src = static_cast<NodeIndex>(idx / (nn - 1));
            const auto r = static_cast<NodeIndex>(idx % (nn - 1));
            chosen.emplace_back(src, r < src ? r : r + 1);
        }
    } else {
        std::vector<NodeIndex> perm(n);
        std::iota(perm.begin(), perm.end(), NodeIndex{0});
        for (std::size_t i = n; i > 1; --i) {
            std::swap(perm[i - 1], perm[rng.below(i)]);
        }
        // Row p of the strict upper triangle holds the n-1-p pairs (p, q > p).
        std::vector<std::uint64_t> row_start(n + 1, 0);
        for (std::size_t p = 0; p < n; ++p) row_start[p + 1] = row_start[p] + (nn - 1 - p);
        for (std::uint64_t idx : sample_distinct(rng, pairs, edges)) {
            const auto it = std::upper_bound(row_start.begin(), row_start.end(), idx);
            const auto p = static_cast<std::size_t>(it - row_start.begin() - 1);
            const auto q = p + 1 + static_cast<std::size_t>(idx - row_start[p]);
            chosen.emplace_back(perm[p], perm[q]);
        }
    }

    std::sort(chosen.begin(), chosen.end());
    for (const auto& [src, dst] : chosen) g.add_edge(src, dst, rng.triple());
    return g;
}

TrustGraph one_cycle_graph(const FixtureWeights& w) {
    TrustGraph g;
    g.add_edge("1", "2", w.a);
    g.add_edge("2", "3", w.b);
    g.add_edge("3", "4", w.c);
    g.add_edge("4", "2", w.d);
    return g;
}

TrustGraph two_strategies_graph(const FixtureWeights& w) {
    TrustGraph g;
    g.add_edge("1", "2", w.a);
    g.add_edge("2", "3", w.b);
    g.add_edge("3", "4", w.c);
    g.add_edge("2", "4", w.d);
    return g;
}

}  // namespace trustlab
