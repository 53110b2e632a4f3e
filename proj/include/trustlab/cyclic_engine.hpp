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
 * Matrix-powers evaluation for general (possibly cyclic) trust graphs.
 *
 * Plain matrix powers never settle on a cycle: every lap around it adds
 * another contribution. The general engine keeps, for every ordered pair
 * (i, j), the set R[i][j] of edges already used to evaluate that pair. One
 * step computes, for every pair i != j and every k != j in ascending order,
 *
 *     t = seq(prev[i][k], C[k][j])
 *
 * and when t is not NO_RELATION folds it into the new value with par() and
 * adds R_prev[i][k] and the edge k -> j to the new memory. If the new memory
 * brings no edge beyond R_prev[i][j], the pair keeps its previous value and
 * memory. Evaluation ends when a step accepts no pair.
 *
 * R starts as the singleton {i -> j} for every edge and empty elsewhere, and
 * the diagonal is FULL_TRUST with an empty memory throughout.
 */

#ifndef TRUSTLAB_CYCLIC_ENGINE_HPP
#define TRUSTLAB_CYCLIC_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "trustlab/edge_set.hpp"
#include "trustlab/eval.hpp"
#include "trustlab/trust_graph.hpp"
#include "trustlab/trust_matrix.hpp"

namespace trustlab {

/// n x n edge-id sets. The diagonal stays empty.
class EdgeMemory {
public:
    EdgeMemory() = default;
    explicit EdgeMemory(std::size_t order) : n_(order), sets_(order * order) {}

    std::size_t order() const noexcept { return n_; }
    const EdgeSet& at(std::size_t i, std::size_t j) const { return sets_.at(i * n_ + j); }
    /// Throws std::invalid_argument for a nonempty diagonal set.
    void set(std::size_t i, std::size_t j, EdgeSet s);

    friend bool operator==(const EdgeMemory&, const EdgeMemory&) = default;

private:
    std::size_t n_ = 0;
    std::vector<EdgeSet> sets_;
};

struct CyclicState {
    TrustMatrix current;        ///< Dense.
    EdgeMemory memory;
    TrustMatrix previous;
    EdgeMemory previous_memory;
    /// Index of `current` as a power: 1 before the first step.
    std::size_t iteration = 1;
    /// Row-major n*n flags; frozen pairs keep their value and memory. Empty
    /// means nothing is frozen.
    std::vector<std::uint8_t> frozen;
    /// Statistics of the step that produced `current`.
    std::size_t changed_pairs = 0;
    double max_delta = 0.0;
};

/// C^1 and R^1 for g.
CyclicState initial_state(const TrustGraph& g);

/// One iteration. Rows run on up to `threads` workers with identical output
/// for any worker count.
CyclicState step(const TrustGraph& g, CyclicState state, std::size_t threads = 1);

/// Iteration cap used when EvalOptions::max_iters is 0: one more than the
/// total capacity n(n-1)*edges of the memory, since every non-final step
/// grows some memory set. Saturates at SIZE_MAX.
std::size_t default_general_max_iters(const TrustGraph& g);

/**
 * Steps until no pair changes (Termination::fixpoint), all accepted changes
 * are within opts.epsilon when epsilon > 0 (Termination::epsilon), or
 * opts.max_iters steps ran. Never throws on a valid graph apart from option
 * validation.
 */
EvalReport evaluate_general(const TrustGraph& g, const EvalOptions& opts = {});

inline constexpr std::size_t kUnboundedLength = std::numeric_limits<std::size_t>::max();

/**
 * Early-stopped evaluation: at most max_len iterations, and any pair whose
 * td exceeds `threshold` is frozen from then on. The report is flagged
 * approximate unless a fixpoint was reached with nothing frozen. With
 * max_len = kUnboundedLength and threshold = 1 this is evaluate_general().
 * Throws std::invalid_argument when max_len is 0 or threshold is outside
 * [0, 1].
 */
EvalReport evaluate_bounded(const TrustGraph& g, std::size_t max_len, double threshold,
                            const EvalOptions& opts = {});

}  // namespace trustlab

#endif  // TRUSTLAB_CYCLIC_ENGINE_HPP
