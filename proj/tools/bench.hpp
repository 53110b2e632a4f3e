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

#ifndef TRUSTLAB_TOOLS_BENCH_HPP
#define TRUSTLAB_TOOLS_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trustlab::bench {

struct SuiteInfo {
    std::string name;
    std::string summary;
};

const std::vector<SuiteInfo>& suites();

struct BenchOptions {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    // Zero keeps the suite default.
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t graphs = 0;
    std::size_t steps = 0;
};

/// Runs one suite, prints a text table to `text` and returns the JSON
/// document. Throws std::invalid_argument for an unknown suite.
std::string run(const BenchOptions& opts, std::ostream& text);

}  // namespace trustlab::bench

#endif  // TRUSTLAB_TOOLS_BENCH_HPP
