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
 * Seeded random trust graphs for tests and benchmarks, plus the small
 * hand-drawn topologies used as regression fixtures.
 */

#ifndef TRUSTLAB_RANDOM_GRAPH_HPP
#define TRUSTLAB_RANDOM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "trustlab/trust_graph.hpp"

namespace trustlab {

/**
 * Deterministic random source. Built on mt19937_64, whose output sequence is
 * fixed by the standard; the derived doubles and bounded integers avoid the
 * implementation-defined standard distributions so a seed means the same
 * graph on every platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform on the simplex td + dtd <= 1, never <0,0,1>.
    TrustTriple triple();

private:
    std::mt19937_64 engine_;
};

/**
 * n nodes named "0".."n-1" and `edges` distinct edges drawn uniformly.
 *
 * General: any ordered pair without self-loops, edges <= n(n-1).
 * ConfirmedAcyclic: a random permutation fixes a topological order and
 * edges are drawn among its forward pairs, edges <= n(n-1)/2.
 *
 * Edges are numbered in ascending (src, dst) order. Weights are uniform on
 * the td + dtd <= 1 simplex. Throws std::invalid_argument when infeasible.
 */
TrustGraph random_graph(std::size_t n, std::size_t edges, GraphKind kind, std::uint64_t seed);

/// Weights of the four edges of the one-cycle and two-strategies fixtures.
struct FixtureWeights {
    TrustTriple a{0.9, 0.05};
    TrustTriple b{0.8, 0.1};
    TrustTriple c{0.7, 0.2};
    TrustTriple d{0.6, 0.3};
};

/// 1 -a-> 2 -b-> 3 -c-> 4 -d-> 2. Edge ids 0..3 are a, b, c, d.
TrustGraph one_cycle_graph(const FixtureWeights& w = {});

/// 1 -a-> 2 -b-> 3 -c-> 4 and 2 -d-> 4. Edge ids 0..3 are a, b, c, d.
TrustGraph two_strategies_graph(const FixtureWeights& w = {});

}  // namespace trustlab

#endif  // TRUSTLAB_RANDOM_GRAPH_HPP
