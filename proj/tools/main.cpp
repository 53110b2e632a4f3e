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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "trustlab/cyclic_engine.hpp"
#include "trustlab/dag_engine.hpp"
#include "trustlab/graph_io.hpp"
#include "trustlab/oracle.hpp"
#include "trustlab/random_graph.hpp"
#include "trustlab/report_io.hpp"

namespace {

using namespace trustlab;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr std::size_t kVerifyMaxNodes = 12;
constexpr double kVerifyTolerance = 1e-12;

// Reported as exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_threads() {
    const char* env = std::getenv("TRUSTLAB_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(env, &used);
        if (used == std::string(env).size() && v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("TRUSTLAB_THREADS must be a positive integer, got '") + env +
                     "'");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
    if (!out.flush()) throw UsageError("cannot write '" + path + "'");
}

struct EvalArgs {
    std::string file;
    std::string engine = "auto";
    bool force_general = false;
    double epsilon = 0.0;
    std::size_t max_iters = 0;
    std::optional<double> threshold;
    std::optional<std::size_t> max_len;
    bool verify = false;
    std::optional<std::size_t> threads;
    std::string out;
    std::string format = "csv";
    bool no_timing = false;
};

// Largest oracle deviation over all ordered pairs.
double oracle_deviation(const TrustGraph& g, const TrustMatrix& result) {
    return max_abs_diff(oracle::recursive_eval_all(g), result);
}

int cmd_eval(const EvalArgs& args) {
    const bool bounded = args.threshold.has_value() || args.max_len.has_value();
    if (args.engine == "dag" && (args.force_general || bounded)) {
        throw UsageError("--engine dag cannot be combined with --force-general, --threshold or "
                         "--max-len");
    }
    if (args.max_len && *args.max_len == 0) throw UsageError("--max-len must be at least 1");

    const TrustGraph g = load_graph_file(args.file);
    const bool acyclic = is_acyclic(g);
    std::string engine = args.engine;
    if (args.force_general || bounded) engine = "general";
    if (engine == "auto") engine = acyclic ? "dag" : "general";
    if (engine == "dag" && !acyclic) {
        throw UsageError("'" + args.file + "' has a directed cycle; use --engine general");
    }
    if (args.verify && (!acyclic || g.node_count() > kVerifyMaxNodes)) {
        throw UsageError("--verify needs an acyclic graph with at most " +
                         std::to_string(kVerifyMaxNodes) + " nodes");
    }

    EvalOptions opts;
    opts.epsilon = args.epsilon;
    opts.max_iters = args.max_iters;
    opts.threads = args.threads.value_or(default_threads());
    validate(opts);

    EvalReport report;
    if (engine == "dag") {
        report = evaluate_dag(g, opts);
    } else if (bounded) {
        report = evaluate_bounded(g, args.max_len.value_or(kUnboundedLength),
                                  args.threshold.value_or(1.0), opts);
    } else {
        report = evaluate_general(g, opts);
    }

    std::cerr << "engine " << report.engine << ", " << report.iterations << " iterations, "
              << to_string(report.termination) << (report.approximate ? ", approximate" : "")
              << "\n";

    write_output(args.format == "json" ? report_to_json(report, !args.no_timing)
                                       : result_csv(report),
                 args.out);

    if (args.verify) {
        const double dev = oracle_deviation(g, report.result);
        if (dev > kVerifyTolerance) {
            std::cerr << "verify: result deviates from the recursive oracle by " << dev << "\n";
            return kExitMismatch;
        }
        std::cerr << "verify: matches the recursive oracle (max deviation " << dev << ")\n";
    }
    return kExitOk;
}

struct GenArgs {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::string kind;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> seed_flag;
    std::vector<std::string> weights;
    std::string out;
    std::string format = "csv";
};

int cmd_gen(const GenArgs& args) {
    if (args.seed && args.seed_flag && *args.seed != *args.seed_flag) {
        throw UsageError("conflicting seeds");
    }
    const auto seed = args.seed_flag ? args.seed_flag : args.seed;

    TrustGraph g;
    if (args.kind == "cycle-demo" || args.kind == "two-strategies") {
        if (args.nodes != 4 || args.edges != 4) {
            throw UsageError(args.kind + " has exactly 4 nodes and 4 edges");
        }
        FixtureWeights w;
        if (!args.weights.empty()) {
            if (args.weights.size() != 4) throw UsageError("--weights takes four td,dtd values");
            w.a = parse_triple(args.weights[0]);
            w.b = parse_triple(args.weights[1]);
            w.c = parse_triple(args.weights[2]);
            w.d = parse_triple(args.weights[3]);
        }
        g = args.kind == "cycle-demo" ? one_cycle_graph(w) : two_strategies_graph(w);
    } else {
        if (!seed) throw UsageError("random graphs need an explicit --seed");
        if (!args.weights.empty()) throw UsageError("--weights only applies to the fixtures");
        const GraphKind kind = args.kind == "dag" ? GraphKind::ConfirmedAcyclic : GraphKind::General;
        g = random_graph(args.nodes, args.edges, kind, *seed);
    }
    write_output(export_graph(g, parse_graph_format(args.format)), args.out);
    return kExitOk;
}

struct BenchArgs {
    bench::BenchOptions opts;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
    std::string json_out;
};

int cmd_bench(BenchArgs args) {
    if (args.opts.suite.empty()) {
        std::cout << "available suites:\n";
        for (const auto& s : bench::suites()) std::cout << "  " << s.name << "  " << s.summary << "\n";
        return kExitOk;
    }
    if (!args.seed) throw UsageError("bench needs an explicit --seed");
    args.opts.seed = *args.seed;
    args.opts.threads = args.threads.value_or(default_threads());
    const std::string doc = bench::run(args.opts, std::cout);
    if (!args.json_out.empty()) write_output(doc, args.json_out);
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"Trust evaluation on directed trust graphs by matrix powers"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate all-pairs trust of a graph file");
    eval->add_option("file", eval_args.file, "Graph file (.csv edge list or .json)")
        ->required()
        ->check(CLI::ExistingFile);
    eval->add_option("--engine", eval_args.engine, "Engine selection")
        ->check(CLI::IsMember({"auto", "dag", "general"}));
    eval->add_flag("--force-general", eval_args.force_general,
                   "Use the general engine even on acyclic graphs");
    eval->add_option("--epsilon", eval_args.epsilon, "Stop when no change exceeds this")
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--max-iters", eval_args.max_iters, "Iteration limit (0: engine default)");
    eval->add_option("--threshold", eval_args.threshold,
                     "Freeze pairs whose trust degree exceeds this (general engine)")
        ->check(CLI::Range(0.0, 1.0));
    eval->add_option("--max-len", eval_args.max_len, "Stop after this many iterations (general engine)");
    eval->add_flag("--verify", eval_args.verify,
                   "Compare with the recursive oracle (acyclic, at most 12 nodes)");
    eval->add_option("--threads", eval_args.threads, "Worker threads (default TRUSTLAB_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    eval->add_option("--out", eval_args.out, "Output file (default stdout)");
    eval->add_option("--format", eval_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    eval->add_flag("--no-timing", eval_args.no_timing, "Leave wall-clock times out of JSON output");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("nodes", gen_args.nodes, "Node count")->required();
    gen->add_option("edges", gen_args.edges, "Edge count")->required();
    gen->add_option("kind", gen_args.kind, "Graph kind")
        ->required()
        ->check(CLI::IsMember({"dag", "general", "cycle-demo", "two-strategies"}));
    gen->add_option("positional_seed", gen_args.seed, "Random seed, alternative to --seed");
    gen->add_option("--seed", gen_args.seed_flag, "Random seed");
    gen->add_option("--weights", gen_args.weights, "Fixture weights a b c d, each td,dtd")
        ->expected(4);
    gen->add_option("--out", gen_args.out, "Output file (default stdout)");
    gen->add_option("--format", gen_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "dot"}));

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run a timing suite; no suite lists them");
    bench->add_option("suite", bench_args.opts.suite, "Suite name");
    bench->add_option("--seed", bench_args.seed, "Random seed (required)");
    bench->add_option("--threads", bench_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--nodes", bench_args.opts.nodes, "Override the node count");
    bench->add_option("--edges", bench_args.opts.edges, "Override the edge count");
    bench->add_option("--graphs", bench_args.opts.graphs, "Graph count (bounded suite)");
    bench->add_option("--steps", bench_args.opts.steps, "Step count (cyclic suite)");
    bench->add_option("--json", bench_args.json_out, "Also write the results as JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_args);
        if (gen->parsed()) return cmd_gen(gen_args);
        return cmd_bench(bench_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
