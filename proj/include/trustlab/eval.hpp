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
 * Options and results shared by the evaluation engines.
 */

#ifndef TRUSTLAB_EVAL_HPP
#define TRUSTLAB_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trustlab/trust_matrix.hpp"

namespace trustlab {

enum class Backend { dense, sparse, automatic };

struct EvalOptions {
    /// Stop once no td or dtd moves by more than this between iterations.
    /// 0 asks for an exact fixpoint.
    double epsilon = 0.0;
    /// 0 selects the engine default.
    std::size_t max_iters = 0;
    Backend backend = Backend::automatic;
    std::size_t threads = 1;
    /// DAG engine only: every edge has dtd == 0, so run the td-only kernel.
    bool zero_distrust = false;
};

/// Throws std::invalid_argument on a negative or non-finite epsilon or zero
/// threads.
void validate(const EvalOptions& opts);

/// Matrix storage for a graph: dense when more than a quarter of the n^2
/// positions carry an edge, under Backend::automatic.
TrustMatrix::Storage choose_storage(const TrustGraph& g, Backend backend);

enum class Termination {
    fixpoint,   ///< An iteration changed nothing.
    epsilon,    ///< Every change was within EvalOptions::epsilon.
    max_iters,  ///< Iteration limit reached first.
    bounded,    ///< Bounded evaluation hit its length limit.
};

std::string_view to_string(Termination t);
Termination parse_termination(std::string_view name);

struct IterationRecord {
    double max_delta = 0.0;
    std::size_t changed_pairs = 0;
    double seconds = 0.0;

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct EvalReport {
    std::string engine;
    std::vector<std::string> node_ids;
    TrustMatrix result;
    /// Products (DAG engine) or steps (general engine) performed; equals
    /// trace.size().
    std::size_t iterations = 0;
    Termination termination = Termination::fixpoint;
    std::vector<IterationRecord> trace;
    /// Set when the result may differ from the full fixpoint.
    bool approximate = false;
    /// Row-major n*n flags of pairs frozen by the trust threshold; empty
    /// unless produced by bounded evaluation.
    std::vector<std::uint8_t> frozen;
    double total_seconds = 0.0;
};

}  // namespace trustlab

#endif  // TRUSTLAB_EVAL_HPP
