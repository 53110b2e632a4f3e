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

#include "trustlab/cyclic_engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "trustlab/dag_engine.hpp"
#include "trustlab/parallel.hpp"

namespace trustlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void freeze_above(CyclicState& s, double threshold) {
    const std::size_t n = s.current.order();
    if (s.frozen.empty()) s.frozen.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = s.current.dense_row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && row[j].td() > threshold) s.frozen[i * n + j] = 1;
        }
    }
}

EvalReport run(const TrustGraph& g, const EvalOptions& opts, std::size_t max_len,
               double threshold, bool bounded) {
    validate(opts);
    const auto start = Clock::now();

    EvalReport report;
    report.engine = bounded ? "bounded" : "general";
    report.node_ids.assign(g.node_ids().begin(), g.node_ids().end());

    const std::size_t max_iters =
        opts.max_iters > 0 ? opts.max_iters : default_general_max_iters(g);
    const bool freezing = bounded && threshold < 1.0;

    CyclicState state = initial_state(g);
    if (freezing) freeze_above(state, threshold);

    bool done = false;
    while (!done) {
        if (report.iterations >= max_len) {
            report.termination = Termination::bounded;
            break;
        }
        if (report.iterations >= max_iters) {
            report.termination = Termination::max_iters;
            break;
        }
        const auto t0 = Clock::now();
        state = step(g, std::move(state), opts.threads);
        report.trace.push_back({state.max_delta, state.changed_pairs, seconds_since(t0)});
        ++report.iterations;

        if (state.changed_pairs == 0) {
            report.termination = Termination::fixpoint;
            done = true;
        } else if (opts.epsilon > 0.0 && state.max_delta <= opts.epsilon) {
            report.termination = Termination::epsilon;
            done = true;
        }
        if (freezing) freeze_above(state, threshold);
    }

    const bool any_frozen =
        std::any_of(state.frozen.begin(), state.frozen.end(), [](auto f) { return f != 0; });
    report.approximate = report.termination != Termination::fixpoint || any_frozen;
    if (bounded) {
        report.frozen = state.frozen;
        if (report.frozen.empty()) report.frozen.assign(g.node_count() * g.node_count(), 0);
    }
    report.result = std::move(state.current);
    report.total_seconds = seconds_since(start);
    return report;
}

// Upper bound on the size of any edge memory in row i: edges whose source is
// reachable from i and whose target is not i. A memory of this size is final,
// since every later candidate memory is a subset of it.
std::vector<std::size_t> memory_caps(const TrustGraph& g, std::size_t threads) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> caps(n, 0);
    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, n));
    std::vector<std::vector<std::uint8_t>> seen(workers, std::vector<std::uint8_t>(n));
    std::vector<std::vector<NodeIndex>> stack(workers);
    parallel_rows(n, threads, [&](std::size_t i, std::size_t w) {
        auto& reached = seen[w];
        auto& todo = stack[w];
        std::fill(reached.begin(), reached.end(), 0);
        reached[i] = 1;
        todo.assign(1, static_cast<NodeIndex>(i));
        std::size_t cap = 0;
        while (!todo.empty()) {
            const NodeIndex u = todo.back();
            todo.pop_back();
            for (EdgeId eid : g.out_edges(u)) {
                const NodeIndex v = g.edge(eid).dst;
                if (v != i) ++cap;
                if (!reached[v]) {
                    reached[v] = 1;
                    todo.push_back(v);
                }
            }
        }
        caps[i] = cap;
    });
    return caps;
}

}  // namespace

void EdgeMemory::set(std::size_t i, std::size_t j, EdgeSet s) {
    if (i >= n_ || j >= n_) throw std::out_of_range("EdgeMemory::set");
    if (i == j && !s.empty()) throw std::invalid_argument("edge memory diagonal must stay empty");
    sets_[i * n_ + j] = std::move(s);
}

CyclicState initial_state(const TrustGraph& g) {
    const std::size_t n = g.node_count();
    CyclicState s;
    s.current = matrix_from_graph(g, TrustMatrix::Storage::dense);
    s.memory = EdgeMemory(n);
    for (const auto& e : g.edges()) s.memory.set(e.src, e.dst, EdgeSet::singleton(e.id));
    s.previous = TrustMatrix(n);
    s.previous_memory = EdgeMemory(n);
    s.iteration = 1;
    return s;
}

CyclicState step(const TrustGraph& g, CyclicState state, std::size_t threads) {
    const std::size_t n = g.node_count();
    if (state.current.order() != n || state.memory.order() != n) {
        throw std::invalid_argument("cyclic step: state does not match the graph");
    }
    if (state.current.storage() != TrustMatrix::Storage::dense) {
        state.current = state.current.with_storage(TrustMatrix::Storage::dense);
    }
    threads = std::max<std::size_t>(1, threads);

    CyclicState next;
    next.current = TrustMatrix(n);
    next.memory = EdgeMemory(n);
    next.iteration = state.iteration + 1;
    next.frozen = state.frozen;

    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, n));
    struct Scratch {
        explicit Scratch(std::size_t universe) : builder(universe) {}
        EdgeSetBuilder builder;
        std::vector<TrustMatrix::Entry> row;
    };
    std::vector<Scratch> scratch;
    scratch.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) scratch.emplace_back(g.edge_count());
    std::vector<std::size_t> row_changed(n, 0);
    std::vector<double> row_delta(n, 0.0);

    const std::vector<std::size_t> caps = memory_caps(g, threads);
    const bool has_frozen = !state.frozen.empty();
    const TrustMatrix& prev = state.current;
    const EdgeMemory& prev_mem = state.memory;

    parallel_rows(n, threads, [&](std::size_t i, std::size_t w) {
        auto& s = scratch[w];
        s.row.clear();
        const auto prow = prev.dense_row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const TrustTriple old_value = prow[j];
            const EdgeSet& old_mem = prev_mem.at(i, j);
            auto keep = [&] {
                if (!old_value.is_no_relation()) {
                    s.row.push_back({static_cast<NodeIndex>(j), old_value});
                }
                next.memory.set(i, j, old_mem);
            };
            if ((has_frozen && state.frozen[i * n + j]) || old_mem.size() == caps[i]) {
                keep();
                continue;
            }

            ParAccumulator acc;
            bool saturated = false;
            for (EdgeId eid : g.in_edges(static_cast<NodeIndex>(j))) {
                const Edge& e = g.edge(eid);
                const TrustTriple a = e.src == i ? FULL_TRUST : prow[e.src];
                if (a.is_no_relation()) continue;
                const TrustTriple t = seq(a, e.weight);
                if (t.is_no_relation()) continue;
                acc.add(t);
                if (e.src != i && !saturated) {
                    const EdgeSet& via = prev_mem.at(i, e.src);
                    s.builder.merge(via);
                    saturated = via.size() == caps[i];
                }
                s.builder.insert(eid);
            }
            if (acc.empty()) {
                keep();
                continue;
            }
            EdgeSet mem = s.builder.build();
            if (mem.is_subset_of(old_mem)) {
                keep();
                continue;
            }
            const TrustTriple value = acc.value();
            row_delta[i] = std::max(row_delta[i], max_abs_diff(value, old_value));
            ++row_changed[i];
            if (!value.is_no_relation()) s.row.push_back({static_cast<NodeIndex>(j), value});
            next.memory.set(i, j, std::move(mem));
        }
        next.current.assign_row(i, s.row);
    });

    for (std::size_t i = 0; i < n; ++i) {
        next.changed_pairs += row_changed[i];
        next.max_delta = std::max(next.max_delta, row_delta[i]);
    }
    next.previous = std::move(state.current);
    next.previous_memory = std::move(state.memory);
    return next;
}

std::size_t default_general_max_iters(const TrustGraph& g) {
    const std::size_t n = g.node_count();
    const std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t pairs = n > 1 ? n * (n - 1) : 0;
    if (n > 1 && pairs / (n - 1) != n) return cap;
    const std::size_t edges = std::max<std::size_t>(1, g.edge_count());
    if (pairs != 0 && edges > (cap - 1) / pairs) return cap;
    return pairs * edges + 1;
}

EvalReport evaluate_general(const TrustGraph& g, const EvalOptions& opts) {
    return run(g, opts, kUnboundedLength, 1.0, false);
}

EvalReport evaluate_bounded(const TrustGraph& g, std::size_t max_len, double threshold,
                            const EvalOptions& opts) {
    if (max_len == 0) throw std::invalid_argument("bounded evaluation needs max_len >= 1");
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("threshold must lie in [0, 1]");
    }
    return run(g, opts, max_len, threshold, true);
}

}  // namespace trustlab
