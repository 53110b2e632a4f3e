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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "trustlab/cyclic_engine.hpp"
#include "trustlab/dag_engine.hpp"
#include "trustlab/random_graph.hpp"

namespace trustlab::bench {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    s.resize(std::max(width, s.size() + 1), ' ');
    return s;
}

std::size_t or_default(std::size_t v, std::size_t fallback) { return v > 0 ? v : fallback; }

json header(const BenchOptions& opts, std::size_t n, std::size_t e) {
    return json{{"suite", opts.suite}, {"seed", opts.seed}, {"threads", opts.threads},
                {"nodes", n},          {"edges", e}};
}

json run_dag(const BenchOptions& opts, std::ostream& out) {
    const std::size_t n = or_default(opts.nodes, 1000);
    const std::size_t e = or_default(opts.edges, 250000);
    const TrustGraph g = random_graph(n, e, GraphKind::ConfirmedAcyclic, opts.seed);

    EvalOptions eval;
    eval.threads = opts.threads;
    eval.backend = Backend::sparse;
    const EvalReport r = evaluate_dag(g, eval);

    out << "dag engine, " << n << " nodes, " << e << " edges, seed " << opts.seed
        << ", sparse storage\n";
    out << "power  seconds    max_delta   changed_pairs\n";
    json rows = json::array();
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
        const auto& t = r.trace[k];
        out << pad("C^" + std::to_string(k + 2), 7) << pad(fixed(t.seconds, 4), 11)
            << pad(sci(t.max_delta), 12) << t.changed_pairs << "\n";
        rows.push_back({{"power", k + 2},
                        {"seconds", t.seconds},
                        {"max_delta", t.max_delta},
                        {"changed_pairs", t.changed_pairs}});
    }
    out << "products " << r.iterations << ", termination " << to_string(r.termination)
        << ", total " << fixed(r.total_seconds, 3) << " s\n";

    json doc = header(opts, n, e);
    doc["iterations"] = rows;
    doc["products"] = r.iterations;
    doc["termination"] = to_string(r.termination);
    doc["total_seconds"] = r.total_seconds;
    return doc;
}

json run_cyclic(const BenchOptions& opts, std::ostream& out) {
    const std::size_t n = or_default(opts.nodes, 1000);
    const std::size_t e = or_default(opts.edges, 250000);
    const std::size_t steps = or_default(opts.steps, 1);
    const TrustGraph g = random_graph(n, e, GraphKind::General, opts.seed);

    out << "general engine, " << n << " nodes, " << e << " edges, seed " << opts.seed
        << ", dense storage\n";
    out << "power  seconds    max_delta   changed_pairs\n";
    json rows = json::array();
    const auto start = Clock::now();
    CyclicState s = initial_state(g);
    for (std::size_t k = 0; k < steps; ++k) {
        const auto t0 = Clock::now();
        s = step(g, std::move(s), opts.threads);
        const double secs = seconds_since(t0);
        out << pad("C^" + std::to_string(s.iteration), 7) << pad(fixed(secs, 4), 11)
            << pad(sci(s.max_delta), 12) << s.changed_pairs << "\n";
        rows.push_back({{"power", s.iteration},
                        {"seconds", secs},
                        {"max_delta", s.max_delta},
                        {"changed_pairs", s.changed_pairs}});
        if (s.changed_pairs == 0) break;
    }
    const double total = seconds_since(start);
    out << "steps " << rows.size() << ", total " << fixed(total, 3) << " s\n";

    json doc = header(opts, n, e);
    doc["iterations"] = rows;
    doc["total_seconds"] = total;
    return doc;
}

json run_bounded(const BenchOptions& opts, std::ostream& out) {
    const std::size_t n = or_default(opts.nodes, 200);
    const std::size_t e = or_default(opts.edges, n * (n - 1) / 4);
    const std::size_t graphs = or_default(opts.graphs, 10);
    constexpr double kTight = 1e-6;

    EvalOptions eval;
    eval.threads = opts.threads;

    out << "bounded vs full, " << graphs << " general graphs, " << n << " nodes, " << e
        << " edges, seeds " << opts.seed << ".." << opts.seed + graphs - 1 << "\n";
    out << "seed        full_iters  error_at_6   error_at_7\n";
    json rows = json::array();
    std::size_t tight7 = 0;
    double sum6 = 0.0;
    const auto start = Clock::now();
    for (std::size_t k = 0; k < graphs; ++k) {
        const std::uint64_t seed = opts.seed + k;
        const TrustGraph g = random_graph(n, e, GraphKind::General, seed);
        const EvalReport full = evaluate_general(g, eval);
        const double e6 = max_abs_diff(evaluate_bounded(g, 6, 1.0, eval).result, full.result);
        const double e7 = max_abs_diff(evaluate_bounded(g, 7, 1.0, eval).result, full.result);
        if (e7 <= kTight) ++tight7;
        sum6 += e6;
        out << pad(std::to_string(seed), 12) << pad(std::to_string(full.iterations), 12)
            << pad(sci(e6), 13) << sci(e7) << "\n";
        rows.push_back({{"seed", seed},
                        {"full_iterations", full.iterations},
                        {"error_at_6", e6},
                        {"error_at_7", e7}});
    }
    const double share7 = static_cast<double>(tight7) / static_cast<double>(graphs);
    const double mean6 = sum6 / static_cast<double>(graphs);
    const double total = seconds_since(start);
    out << "error at 7 <= 1e-6 on " << tight7 << "/" << graphs << " graphs ("
        << fixed(100.0 * share7, 1) << "%), mean error at 6 = " << sci(mean6) << ", total "
        << fixed(total, 2) << " s\n";

    json doc = header(opts, n, e);
    doc["graphs"] = rows;
    doc["share_tight_at_7"] = share7;
    doc["mean_error_at_6"] = mean6;
    doc["total_seconds"] = total;
    return doc;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> all{
        {"dag", "DAG engine to convergence on a 1000-node, 250000-edge DAG"},
        {"cyclic", "general engine steps on a 1000-node, 250000-edge general graph"},
        {"bounded", "bounded (6 and 7 steps) vs full fixpoint on 200-node general graphs"},
    };
    return all;
}

std::string run(const BenchOptions& opts, std::ostream& text) {
    json doc;
    if (opts.suite == "dag") {
        doc = run_dag(opts, text);
    } else if (opts.suite == "cyclic") {
        doc = run_cyclic(opts, text);
    } else if (opts.suite == "bounded") {
        doc = run_bounded(opts, text);
    } else {
        throw std::invalid_argument("unknown bench suite '" + opts.suite + "'");
    }
    return doc.dump(2) + "\n";
}

}  // namespace trustlab::bench
