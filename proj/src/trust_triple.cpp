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

#include "trustlab/trust_triple.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace trustlab {

TrustTriple::TrustTriple(double td, double dtd) {
    if (!std::isfinite(td) || !std::isfinite(dtd)) {
        throw std::invalid_argument("trust degrees must be finite");
    }
    if (td < 0.0 || dtd < 0.0) {
        throw std::invalid_argument("trust degrees must be non-negative");
    }
    const double sum = td + dtd;
    if (sum > 1.0 + kUnitSumSlack) {
        throw std::invalid_argument("td + dtd exceeds 1 (" + format_real(td) + " + " +
                                    format_real(dtd) + ")");
    }
    if (sum > 1.0) {
        td /= sum;
        dtd /= sum;
    }
    td_ = td;
    dtd_ = dtd;
}

TrustTriple TrustTriple::with_uncertainty(double td, double dtd, double ud) {
    TrustTriple t(td, dtd);
    if (!std::isfinite(ud) || ud < 0.0 || std::abs(td + dtd + ud - 1.0) > kUnitSumSlack) {
        throw std::invalid_argument("td + dtd + ud must equal 1");
    }
    return t;
}

TrustTriple TrustTriple::from_counts(std::uint64_t positive, std::uint64_t negative,
                                     std::uint64_t total) {
    if (total == 0) {
        throw std::invalid_argument("from_counts: total must be at least 1");
    }
    if (positive > total || negative > total - positive) {
        throw std::invalid_argument("from_counts: positive + negative exceeds total");
    }
    const auto m = static_cast<double>(total);
    return TrustTriple(static_cast<double>(positive) / m, static_cast<double>(negative) / m);
}

TrustTriple par(std::span<const TrustTriple> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("par: empty list has no parallel aggregate");
    }
    ParAccumulator acc;
    for (const auto& x : xs) acc.add(x);
    return acc.value();
}

TrustTriple seq(std::span<const TrustTriple> path) {
    TrustTriple out = FULL_TRUST;
    for (const auto& t : path) out = seq(out, t);
    return out;
}

std::string format_real(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, end);
}

std::string to_string(const TrustTriple& t) {
    return format_real(t.td()) + "," + format_real(t.dtd());
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

TrustTriple parse_triple(std::string_view text) {
    std::string_view fields[3];
    std::size_t count = 0;
    while (true) {
        const auto comma = text.find(',');
        if (count == 3) throw std::invalid_argument("trust triple has too many components");
        fields[count++] = text.substr(0, comma);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (count < 2) throw std::invalid_argument("trust triple needs at least td,dtd");
    const double td = parse_real(fields[0]);
    const double dtd = parse_real(fields[1]);
    if (count == 3) return TrustTriple::with_uncertainty(td, dtd, parse_real(fields[2]));
    return TrustTriple(td, dtd);
}

std::ostream& operator<<(std::ostream& os, const TrustTriple& t) {
    return os << '<' << format_real(t.td()) << ',' << format_real(t.dtd()) << ','
              << format_real(t.ud()) << '>';
}

}  // namespace trustlab
