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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "trustlab/random_graph.hpp"
#include "trustlab/report_io.hpp"
#include "trustlab/trust_triple.hpp"

namespace trustlab {
namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::path(TRUSTLAB_TEST_TMP) /
               ::testing::UnitTest::GetInstance()->current_test_info()->name();
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name), std::ios::binary) << text;
    }

    CliResult invoke(const std::string& args, const std::string& env = "") const {
        const std::string cmd = env + " \"" + std::string(TRUSTLAB_CLI_PATH) + "\" " + args +
                                " > \"" + path("stdout").string() + "\" 2> \"" +
                                path("stderr").string() + "\"";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(path("stdout")),
                slurp(path("stderr"))};
    }

    std::string q(const std::string& name) const { return "\"" + path(name).string() + "\""; }

private:
    fs::path dir_;
};

TEST_F(Cli, OneCycleEvaluation) {
    ASSERT_EQ(invoke("gen 4 4 cycle-demo --out " + q("g.csv")).code, 0);
    const CliResult r = invoke("eval " + q("g.csv"));
    ASSERT_EQ(r.code, 0) << r.err;
    const FixtureWeights w;
    const TrustTriple want = seq(par(w.a, seq(seq(seq(w.a, w.b), w.c), w.d)), w.b);
    std::istringstream lines(r.out);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
        if (line.rfind("1,3,", 0) == 0) {
            EXPECT_LE(max_abs_diff(parse_triple(line.substr(4)), want), 1e-12);
            found = true;
        }
    }
    EXPECT_TRUE(found) << r.out;
    EXPECT_NE(r.err.find("general"), std::string::npos);
}

TEST_F(Cli, FixtureWeightsCanBeChosen) {
    const CliResult r = invoke("gen 4 4 cycle-demo --weights 0.5,0.5 0.4,0 0.3,0.1 0.2,0.2");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1,2,0.5,0.5"), std::string::npos) << r.out;
    EXPECT_EQ(invoke("gen 5 4 cycle-demo").code, 2);
}

TEST_F(Cli, GenIsDeterministic) {
    ASSERT_EQ(invoke("gen 30 120 dag --seed 42 --out " + q("a.csv")).code, 0);
    ASSERT_EQ(invoke("gen 30 120 dag 42 --out " + q("b.csv")).code, 0);
    ASSERT_EQ(invoke("gen 30 120 dag --seed 43 --out " + q("c.csv")).code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_NE(slurp(path("a.csv")), slurp(path("c.csv")));
    EXPECT_EQ(invoke("gen 30 120 general").code, 2);
    EXPECT_EQ(invoke("gen 3 10 dag --seed 1").code, 2);
    const CliResult dot = invoke("gen 5 6 general --seed 1 --format dot");
    EXPECT_EQ(dot.code, 0);
    EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST_F(Cli, ParseErrorsExitWithTwo) {
    write("bad.csv", "a,b,0.5,0.1\na,b,0.9\n");
    const CliResult r = invoke("eval " + q("bad.csv"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_EQ(invoke("eval " + q("missing.csv")).code, 2);
    EXPECT_EQ(invoke("frobnicate").code, 2);
    EXPECT_EQ(invoke("").code, 2);
    EXPECT_EQ(invoke("--help").code, 0);
}

TEST_F(Cli, OptionConflictsExitWithTwo) {
    ASSERT_EQ(invoke("gen 4 4 two-strategies --out " + q("g.csv")).code, 0);
    EXPECT_EQ(invoke("eval " + q("g.csv") + " --engine dag --threshold 0.5").code, 2);
    EXPECT_EQ(invoke("eval " + q("g.csv") + " --engine dag --force-general").code, 2);
    EXPECT_EQ(invoke("eval " + q("g.csv") + " --max-len 0").code, 2);
    EXPECT_EQ(invoke("eval " + q("g.csv") + " --threads 0").code, 2);
    EXPECT_EQ(invoke("eval " + q("g.csv") + " --format xml").code, 2);
    EXPECT_EQ(invoke("eval " + q("g.csv"), "TRUSTLAB_THREADS=abc").code, 2);
    ASSERT_EQ(invoke("gen 4 4 cycle-demo --out " + q("c.csv")).code, 0);
    EXPECT_EQ(invoke("eval " + q("c.csv") + " --engine dag").code, 2);
    EXPECT_EQ(invoke("eval " + q("c.csv") + " --verify").code, 2);
}

TEST_F(Cli, EdgelessGraphEmitsNoPairs) {
    write("empty.csv", "#@node,a\n#@node,b\nsrc,dst,td,dtd\n");
    const CliResult r = invoke("eval " + q("empty.csv"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "src,dst,td,dtd\n");
}

TEST_F(Cli, VerifyAgainstOracle) {
    ASSERT_EQ(invoke("gen 12 30 dag --seed 3 --out " + q("g.csv")).code, 0);
    const CliResult ok = invoke("eval " + q("g.csv") + " --verify");
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_NE(ok.err.find("matches"), std::string::npos);

    // Both engines may legitimately differ on this DAG; the general engine
    // misses the longest i -> j path.
    write("six.csv",
          "i,a,0.5,0.1\na,b,0.5,0.1\nb,j,0.5,0.1\ni,b,0.5,0.1\nb,c,0.5,0.1\nc,j,0.5,0.1\n");
    EXPECT_EQ(invoke("eval " + q("six.csv") + " --verify").code, 0);
    const CliResult diff = invoke("eval " + q("six.csv") + " --force-general --verify");
    EXPECT_EQ(diff.code, 1) << diff.err;
    EXPECT_NE(diff.err.find("deviates"), std::string::npos);

    ASSERT_EQ(invoke("gen 13 30 dag --seed 3 --out " + q("big.csv")).code, 0);
    EXPECT_EQ(invoke("eval " + q("big.csv") + " --verify").code, 2);
}

TEST_F(Cli, OutputIndependentOfThreads) {
    ASSERT_EQ(invoke("gen 40 300 general --seed 9 --out " + q("g.csv")).code, 0);
    ASSERT_EQ(invoke("eval " + q("g.csv") + " --threads 1 --out " + q("t1.csv")).code, 0);
    ASSERT_EQ(invoke("eval " + q("g.csv") + " --out " + q("t8.csv"), "TRUSTLAB_THREADS=8").code, 0);
    EXPECT_EQ(slurp(path("t1.csv")), slurp(path("t8.csv")));
    EXPECT_FALSE(slurp(path("t1.csv")).empty());
}

TEST_F(Cli, JsonReportRoundTrips) {
    ASSERT_EQ(invoke("gen 20 80 general --seed 5 --out " + q("g.csv")).code, 0);
    const CliResult r =
        invoke("eval " + q("g.csv") + " --format json --no-timing --threshold 0.8 --max-len 3");
    ASSERT_EQ(r.code, 0) << r.err;
    const EvalReport report = report_from_json(r.out);
    EXPECT_EQ(report.engine, "bounded");
    EXPECT_LE(report.iterations, 3u);
    EXPECT_TRUE(report.approximate);
    EXPECT_EQ(report.trace.size(), report.iterations);
    EXPECT_EQ(r.out.find("seconds"), std::string::npos);
}

TEST_F(Cli, JsonGraphInput) {
    ASSERT_EQ(invoke("gen 10 20 dag --seed 8 --format json --out " + q("g.json")).code, 0);
    ASSERT_EQ(invoke("gen 10 20 dag --seed 8 --out " + q("g.csv")).code, 0);
    const CliResult a = invoke("eval " + q("g.json"));
    const CliResult b = invoke("eval " + q("g.csv"));
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, Bench) {
    const CliResult list = invoke("bench");
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("bounded"), std::string::npos);
    EXPECT_EQ(invoke("bench dag").code, 2);
    EXPECT_EQ(invoke("bench nosuch --seed 1").code, 2);

    const CliResult dag = invoke("bench dag --seed 1 --nodes 40 --edges 200 --json " + q("dag.json"));
    ASSERT_EQ(dag.code, 0) << dag.err;
    EXPECT_NE(dag.out.find("C^2"), std::string::npos) << dag.out;
    EXPECT_NE(slurp(path("dag.json")).find("\"total_seconds\""), std::string::npos);

    const CliResult cyc = invoke("bench cyclic --seed 1 --nodes 30 --edges 200 --steps 2");
    EXPECT_EQ(cyc.code, 0) << cyc.err;
    EXPECT_NE(cyc.out.find("C^3"), std::string::npos) << cyc.out;

    const CliResult bnd = invoke("bench bounded --seed 1 --nodes 20 --graphs 2");
    EXPECT_EQ(bnd.code, 0) << bnd.err;
    EXPECT_NE(bnd.out.find("mean error at 6"), std::string::npos) << bnd.out;
}

}  // namespace
}  // namespace trustlab
