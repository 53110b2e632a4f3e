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

#include "trustlab/report_io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace trustlab {

using nlohmann::json;

void write_result_csv(const EvalReport& report, std::ostream& out) {
    const auto& m = report.result;
    if (report.node_ids.size() != m.order()) {
        throw std::invalid_argument("report node ids do not match the result order");
    }
    out << "src,dst,td,dtd\n";
    for (std::size_t i = 0; i < m.order(); ++i) {
        m.for_each_in_row(i, [&](NodeIndex j, const TrustTriple& v) {
            out << report.node_ids[i] << ',' << report.node_ids[j] << ',' << to_string(v) << '\n';
        });
    }
}

std::string result_csv(const EvalReport& report) {
    std::ostringstream out;
    write_result_csv(report, out);
    return out.str();
}

std::string report_to_json(const EvalReport& report, bool include_timing) {
    const auto& m = report.result;
    const std::size_t n = m.order();
    json doc;
    doc["schema"] = kReportSchema;
    doc["version"] = kReportVersion;
    doc["engine"] = report.engine;
    doc["iterations"] = report.iterations;
    doc["termination"] = to_string(report.termination);
    doc["approximate"] = report.approximate;
    doc["nodes"] = report.node_ids;

    json trace = json::array();
    for (std::size_t it = 0; it < report.trace.size(); ++it) {
        const auto& rec = report.trace[it];
        json r = {{"iteration", it + 1},
                  {"max_delta", rec.max_delta},
                  {"changed_pairs", rec.changed_pairs}};
        if (include_timing) r["seconds"] = rec.seconds;
        trace.push_back(std::move(r));
    }
    doc["trace"] = std::move(trace);

    json pairs = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        m.for_each_in_row(i, [&](NodeIndex j, const TrustTriple& v) {
            pairs.push_back({{"src", report.node_ids.at(i)},
                             {"dst", report.node_ids.at(j)},
                             {"td", v.td()},
                             {"dtd", v.dtd()}});
        });
    }
    doc["pairs"] = std::move(pairs);

    if (!report.frozen.empty()) {
        json frozen = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (report.frozen.at(i * n + j)) {
                    frozen.push_back({report.node_ids.at(i), report.node_ids.at(j)});
                }
            }
        }
        doc["frozen"] = std::move(frozen);
    }
    if (include_timing) doc["total_seconds"] = report.total_seconds;
    return doc.dump(1) + "\n";
}

EvalReport report_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("schema").get<std::string>() != kReportSchema) {
            throw std::invalid_argument("not a trustlab report");
        }
        if (doc.at("version").get<int>() != kReportVersion) {
            throw std::invalid_argument("unsupported report version " +
                                        std::to_string(doc.at("version").get<int>()));
        }
        EvalReport r;
        r.engine = doc.at("engine").get<std::string>();
        r.iterations = doc.at("iterations").get<std::size_t>();
        r.termination = parse_termination(doc.at("termination").get<std::string>());
        r.approximate = doc.at("approximate").get<bool>();
        r.node_ids = doc.at("nodes").get<std::vector<std::string>>();

        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t v = 0; v < r.node_ids.size(); ++v) index.emplace(r.node_ids[v], v);
        auto lookup = [&](const json& id) {
            auto it = index.find(id.get<std::string>());
            if (it == index.end()) throw std::invalid_argument("report names an unknown node");
            return it->second;
        };

        for (const auto& rec : doc.at("trace")) {
            r.trace.push_back({rec.at("max_delta").get<double>(),
                               rec.at("changed_pairs").get<std::size_t>(),
                               rec.value("seconds", 0.0)});
        }
        if (r.trace.size() != r.iterations) {
            throw std::invalid_argument("report trace length differs from its iteration count");
        }

        const std::size_t n = r.node_ids.size();
        r.result = TrustMatrix(n);
        for (const auto& p : doc.at("pairs")) {
            r.result.set(lookup(p.at("src")), lookup(p.at("dst")),
                         TrustTriple(p.at("td").get<double>(), p.at("dtd").get<double>()));
        }
        if (doc.contains("frozen")) {
            r.frozen.assign(n * n, 0);
            for (const auto& f : doc.at("frozen")) r.frozen[lookup(f.at(0)) * n + lookup(f.at(1))] = 1;
        }
        r.total_seconds = doc.value("total_seconds", 0.0);
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

}  // namespace trustlab
