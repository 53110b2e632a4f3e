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
 * Serialization of evaluation results.
 *
 * Result CSV: a `src,dst,td,dtd` header, then one line per ordered pair
 * i != j whose trust is not NO_RELATION, in row-major node order. Decimals
 * are shortest round-trip, so equal matrices give byte-identical files.
 *
 * Report JSON (schema "trustlab-report", version 1):
 *
 *     {"schema": "trustlab-report", "version": 1, "engine": "dag",
 *      "iterations": 3, "termination": "fixpoint", "approximate": false,
 *      "nodes": [...],
 *      "trace": [{"iteration": 1, "max_delta": .., "changed_pairs": ..,
 *                 "seconds": ..}, ...],
 *      "pairs": [{"src": .., "dst": .., "td": .., "dtd": ..}, ...],
 *      "frozen": [[src, dst], ...],          (bounded evaluation only)
 *      "total_seconds": ..}
 *
 * Timing fields are omitted when include_timing is false.
 */

#ifndef TRUSTLAB_REPORT_IO_HPP
#define TRUSTLAB_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "trustlab/eval.hpp"

namespace trustlab {

inline constexpr std::string_view kReportSchema = "trustlab-report";
inline constexpr int kReportVersion = 1;

void write_result_csv(const EvalReport& report, std::ostream& out);
std::string result_csv(const EvalReport& report);

std::string report_to_json(const EvalReport& report, bool include_timing = true);

/// Throws std::invalid_argument on malformed input or an unknown schema or
/// version.
EvalReport report_from_json(std::string_view text);

}  // namespace trustlab

#endif  // TRUSTLAB_REPORT_IO_HPP
