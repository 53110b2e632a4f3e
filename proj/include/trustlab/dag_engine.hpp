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
 * Matrix-powers evaluation for acyclic trust graphs.
 *
 * The trust product N = C * M replaces the usual dot product by parallel
 * aggregation of sequential compositions:
 *
 *     N[i][j] = par over k != j of seq(C[i][k], M[k][j])     (i != j)
 *     N[i][i] = FULL_TRUST
 *
 * Excluding k == j keeps the direct edge from being counted twice (once via
 * k == i, once via k == j). Terms equal to NO_RELATION are skipped and k is
 * visited in ascending order in every backend, so dense and sparse results
 * are bit-identical. On a DAG, C^d holds the trust aggregated over all paths
 * of at most d edges and C^l is a fixpoint once l reaches the longest path.
 */

#ifndef TRUSTLAB_DAG_ENGINE_HPP
#define TRUSTLAB_DAG_ENGINE_HPP

#include <cstddef>

#include "trustlab/eval.hpp"
#include "trustlab/trust_graph.hpp"
#include "trustlab/trust_matrix.hpp"

namespace trustlab {

TrustMatrix matrix_from_graph(const TrustGraph& g,
                              TrustMatrix::Storage storage = TrustMatrix::Storage::dense);

/// C * M with the output in C's storage. Throws std::invalid_argument on an
/// order mismatch. Rows are computed on up to `threads` workers; the result
/// does not depend on the worker count.
TrustMatrix product(const TrustMatrix& c, const TrustMatrix& m, std::size_t threads = 1);

/// Same as product() for matrices whose distrust degrees are all zero, on a
/// td-only kernel. Bit-identical to product() on such input. Throws
/// std::invalid_argument when a distrust degree is nonzero.
TrustMatrix product_zero_distrust(const TrustMatrix& c, const TrustMatrix& m,
                                  std::size_t threads = 1);

struct PowerState {
    TrustMatrix current;   ///< C^exponent
    std::size_t exponent = 1;
    double delta = 0.0;    ///< max change from C^(exponent-1); 0 for C^1
};

PowerState first_power(const TrustMatrix& base);
PowerState next_power(const PowerState& state, const TrustMatrix& base, std::size_t threads = 1,
                      bool zero_distrust = false);

/// C^d for d >= 1, by repeated right multiplication.
TrustMatrix matrix_power(const TrustMatrix& base, std::size_t d, std::size_t threads = 1);

/**
 * Iterates C^(d+1) = C^d * C from d = 1 until two successive powers agree
 * within opts.epsilon or opts.max_iters products were done (default: the
 * node count, which bounds the longest path). Throws GraphError when g has
 * a cycle; the general engine handles those.
 */
EvalReport evaluate_dag(const TrustGraph& g, const EvalOptions& opts = {});

}  // namespace trustlab

#endif  // TRUSTLAB_DAG_ENGINE_HPP
