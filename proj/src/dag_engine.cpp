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

#include "trustlab/dag_engine.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>
#include <vector>

#include "trustlab/parallel.hpp"

namespace trustlab {

namespace {

using Clock = std::chrono::steady_clock;
using Entry = TrustMatrix::Entry;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Visits (k, C[i][k]) for every k with a relation, including the diagonal
// k == i, in ascending k.
template <class F>
void for_each_in_row_with_diagonal(const TrustMatrix& c, std::size_t i, F&& f) {
    bool diagonal_done = false;
    c.for_each_in_row(i, [&](NodeIndex k, const TrustTriple& a) {
        if (!diagonal_done && k > i) {
            f(static_cast<NodeIndex>(i), FULL_TRUST);
            diagonal_done = true;
        }
        f(k, a);
    });
    if (!diagonal_done) f(static_cast<NodeIndex>(i), FULL_TRUST);
}

void check_orders(const TrustMatrix& c, const TrustMatrix& m) {
    if (c.order() != m.order()) {
        throw std::invalid_argument("trust product: orders " + std::to_string(c.order()) +
                                    " and " + std::to_string(m.order()) + " differ");
    }
}

}  // namespace

void validate(const EvalOptions& opts) {
    if (!(opts.epsilon >= 0.0) || opts.epsilon == std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("epsilon must be a finite value >= 0");
    }
    if (opts.threads == 0) throw std::invalid_argument("threads must be at least 1");
}

TrustMatrix::Storage choose_storage(const TrustGraph& g, Backend backend) {
    switch (backend) {
    case Backend::dense: return TrustMatrix::Storage::dense;
    case Backend::sparse: return TrustMatrix::Storage::sparse;
    case Backend::automatic: break;
    }
    const double n = static_cast<double>(g.node_count());
    const double fill = n > 0 ? static_cast<double>(g.edge_count()) / (n * n) : 0.0;
    return fill > 0.25 ? TrustMatrix::Storage::dense : TrustMatrix::Storage::sparse;
}

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::fixpoint: return "fixpoint";
    case Termination::epsilon: return "epsilon";
    case Termination::max_iters: return "max_iters";
    case Termination::bounded: return "bounded";
    }
    return "unknown";
}

Termination parse_termination(std::string_view name) {
    for (auto t : {Termination::fixpoint, Termination::epsilon, Termination::max_iters,
                   Termination::bounded}) {
        if (to_string(t) == name) return t;
    }
    throw std::invalid_argument("unknown termination '" + std::string(name) + "'");
}

TrustMatrix matrix_from_graph(const TrustGraph& g, TrustMatrix::Storage storage) {
    TrustMatrix c(g.node_count(), storage);
    std::vector<Entry> row;
    for (NodeIndex i = 0; i < g.node_count(); ++i) {
        row.clear();
        for (EdgeId e : g.out_edges(i)) {
            const auto& edge = g.edge(e);
            row.push_back({edge.dst, edge.weight});
        }
        c.assign_row(i, row);
    }
    return c;
}

TrustMatrix product(const TrustMatrix& c, const TrustMatrix& m, std::size_t threads) {
    check_orders(c, m);
    const std::size_t n = c.order();
    TrustMatrix out(n, c.storage());

    struct Scratch {
        std::vector<ParAccumulator> acc;
        std::vector<Entry> row;
    };
    std::vector<Scratch> scratch(std::max<std::size_t>(1, std::min(threads, n)));

    parallel_rows(n, threads, [&](std::size_t i, std::size_t w) {
        auto& s = scratch[w];
        s.acc.assign(n, ParAccumulator{});
        for_each_in_row_with_diagonal(c, i, [&](NodeIndex k, const TrustTriple& a) {
            m.for_each_in_row(k, [&](NodeIndex j, const TrustTriple& b) {
                if (j == i) return;
                const TrustTriple t = seq(a, b);
                if (!t.is_no_relation()) s.acc[j].add(t);
            });
        });
        s.row.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (!s.acc[j].empty()) s.row.push_back({static_cast<NodeIndex>(j), s.acc[j].value()});
        }
        out.assign_row(i, s.row);
    });
    return out;
}

TrustMatrix product_zero_distrust(const TrustMatrix& c, const TrustMatrix& m,
                                  std::size_t threads) {
    check_orders(c, m);
    auto check = [](const TrustMatrix& x) {
        for (std::size_t i = 0; i < x.order(); ++i) {
            x.for_each_in_row(i, [](NodeIndex, const TrustTriple& v) {
                if (v.dtd() != 0.0) {
                    throw std::invalid_argument("zero-distrust product on a matrix with distrust");
                }
            });
        }
    };
    check(c);
    check(m);

    const std::size_t n = c.order();
    TrustMatrix out(n, c.storage());
    struct Scratch {
        std::vector<double> td;
        std::vector<std::uint8_t> seen;
        std::vector<Entry> row;
    };
    std::vector<Scratch> scratch(std::max<std::size_t>(1, std::min(threads, n)));

    parallel_rows(n, threads, [&](std::size_t i, std::size_t w) {
        auto& s = scratch[w];
        s.td.assign(n, 0.0);
        s.seen.assign(n, 0);
        for_each_in_row_with_diagonal(c, i, [&](NodeIndex k, const TrustTriple& a) {
            const double x = a.td();
            m.for_each_in_row(k, [&](NodeIndex j, const TrustTriple& b) {
                if (j == i) return;
                const double t = x * b.td();
                if (t == 0.0) return;
                s.td[j] = s.seen[j] ? 1.0 - (1.0 - s.td[j]) * (1.0 - t) : t;
                s.seen[j] = 1;
            });
        });
        s.row.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (s.seen[j]) s.row.push_back({static_cast<NodeIndex>(j), TrustTriple::raw(s.td[j], 0.0)});
        }
        out.assign_row(i, s.row);
    });
    return out;
}

PowerState first_power(const TrustMatrix& base) { return PowerState{base, 1, 0.0}; }

PowerState next_power(const PowerState& state, const TrustMatrix& base, std::size_t threads,
                      bool zero_distrust) {
    PowerState next;
    next.current = zero_distrust ? product_zero_distrust(state.current, base, threads)
                                 : product(state.current, base, threads);
    next.exponent = state.exponent + 1;
    next.delta = max_abs_diff(next.current, state.current);
    return next;
}

TrustMatrix matrix_power(const TrustMatrix& base, std::size_t d, std::size_t threads) {
    if (d == 0) throw std::invalid_argument("matrix_power: exponent must be at least 1");
    TrustMatrix out = base;
    for (std::size_t e = 1; e < d; ++e) out = product(out, base, threads);
    return out;
}

EvalReport evaluate_dag(const TrustGraph& g, const EvalOptions& opts) {
    validate(opts);
    if (!is_acyclic(g)) {
        throw GraphError("graph contains a directed cycle; use the general engine");
    }
    if (opts.zero_distrust) {
        for (const auto& e : g.edges()) {
            if (e.weight.dtd() != 0.0) {
                throw std::invalid_argument("zero-distrust mode needs dtd == 0 on every edge");
            }
        }
    }

    const auto start = Clock::now();
    const TrustMatrix base = matrix_from_graph(g, choose_storage(g, opts.backend));
    const std::size_t max_iters =
        opts.max_iters > 0 ? opts.max_iters : std::max<std::size_t>(1, g.node_count());

    EvalReport report;
    report.engine = "dag";
    report.node_ids.assign(g.node_ids().begin(), g.node_ids().end());
    report.termination = Termination::max_iters;

    PowerState state = first_power(base);
    while (report.iterations < max_iters) {
        const auto t0 = Clock::now();
        PowerState next = next_power(state, base, opts.threads, opts.zero_distrust);
        IterationRecord rec;
        rec.max_delta = next.delta;
        rec.changed_pairs = next.delta > 0.0 ? count_changed(next.current, state.current) : 0;
        rec.seconds = seconds_since(t0);
        report.trace.push_back(rec);
        ++report.iterations;

        const bool settled = next.delta <= opts.epsilon;
        state = std::move(next);
        if (settled) {
            report.termination = state.delta == 0.0 ? Termination::fixpoint : Termination::epsilon;
            break;
        }
    }
    report.approximate = report.termination != Termination::fixpoint;
    report.result = state.current.with_storage(TrustMatrix::Storage::dense);
    report.total_seconds = seconds_since(start);
    return report;
}

}  // namespace trustlab
