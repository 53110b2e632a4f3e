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
 * Trust triples and the two trust monoids.
 *
 * A trust relationship is a point <td, dtd, ud> of the unit simplex: the
 * trust degree, the distrust degree and the uncertainty. Only td and dtd are
 * stored; the uncertainty is whatever remains.
 *
 * Two operations act on triples:
 *  - seq() composes trust along a path (a -> b -> c). Identity FULL_TRUST,
 *    absorbing element NO_RELATION.
 *  - par() combines trust over disjoint paths between the same endpoints.
 *    Identity FULL_DISTRUST.
 *
 * seq() does not distribute over par() unless every distrust degree is zero.
 */

#ifndef TRUSTLAB_TRUST_TRIPLE_HPP
#define TRUSTLAB_TRUST_TRIPLE_HPP

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace trustlab {

/// Largest amount by which td + dtd may exceed 1 on construction.
inline constexpr double kUnitSumSlack = 1e-9;

class TrustTriple {
public:
    /// NO_RELATION.
    constexpr TrustTriple() noexcept = default;

    /// Validates and normalizes. Throws std::invalid_argument when a degree is
    /// outside [0,1] or td + dtd > 1 + kUnitSumSlack.
    TrustTriple(double td, double dtd);

    /// Same as above, but also checks that ud matches 1 - td - dtd.
    static TrustTriple with_uncertainty(double td, double dtd, double ud);

    /// Builds from experience counts: positive/total, negative/total.
    static TrustTriple from_counts(std::uint64_t positive, std::uint64_t negative,
                                   std::uint64_t total);

    /// No validation. Used by the algebra on values already known to be sound.
    static constexpr TrustTriple raw(double td, double dtd) noexcept {
        TrustTriple t;
        t.td_ = td;
        t.dtd_ = dtd;
        return t;
    }

    constexpr double td() const noexcept { return td_; }
    constexpr double dtd() const noexcept { return dtd_; }
    constexpr double ud() const noexcept { return std::max(0.0, 1.0 - td_ - dtd_); }

    constexpr bool is_no_relation() const noexcept { return td_ == 0.0 && dtd_ == 0.0; }

    /// Exact componentwise equality.
    friend constexpr bool operator==(const TrustTriple&, const TrustTriple&) noexcept = default;

private:
    double td_ = 0.0;
    double dtd_ = 0.0;
};

inline constexpr TrustTriple FULL_TRUST = TrustTriple::raw(1.0, 0.0);
inline constexpr TrustTriple FULL_DISTRUST = TrustTriple::raw(0.0, 1.0);
inline constexpr TrustTriple NO_RELATION = TrustTriple::raw(0.0, 0.0);

/// Sequential aggregation: trust of a over c through a -> b -> c, where x is
/// tr(a,b) and y is tr(b,c).
constexpr TrustTriple seq(const TrustTriple& x, const TrustTriple& y) noexcept {
    return TrustTriple::raw(x.td() * y.td() + x.dtd() * y.dtd(),
                            x.dtd() * y.td() + x.td() * y.dtd());
}

/// Binary parallel aggregation.
constexpr TrustTriple par(const TrustTriple& x, const TrustTriple& y) noexcept {
    return TrustTriple::raw(1.0 - (1.0 - x.td()) * (1.0 - y.td()), x.dtd() * y.dtd());
}

/// Parallel aggregation of a nonempty list, folded left to right. A single
/// element is returned unchanged. Throws std::invalid_argument when empty.
TrustTriple par(std::span<const TrustTriple> xs);

/// Sequential aggregation along a whole path, folded left to right.
TrustTriple seq(std::span<const TrustTriple> path);

/**
 * Running parallel aggregation with an explicit empty state.
 *
 * The empty accumulator is not the "+" identity: FULL_DISTRUST would read as
 * total distrust. The first term replaces the empty state and later terms
 * fold in with par(). Callers translate an empty result into NO_RELATION.
 */
class ParAccumulator {
public:
    constexpr void add(const TrustTriple& t) noexcept {
        value_ = empty_ ? t : par(value_, t);
        empty_ = false;
    }
    constexpr bool empty() const noexcept { return empty_; }
    constexpr void reset() noexcept {
        value_ = NO_RELATION;
        empty_ = true;
    }
    /// NO_RELATION when nothing was added.
    constexpr TrustTriple value() const noexcept { return value_; }

private:
    TrustTriple value_ = NO_RELATION;
    bool empty_ = true;
};

/// Largest componentwise difference over td and dtd.
inline double max_abs_diff(const TrustTriple& a, const TrustTriple& b) noexcept {
    const double dt = a.td() > b.td() ? a.td() - b.td() : b.td() - a.td();
    const double dd = a.dtd() > b.dtd() ? a.dtd() - b.dtd() : b.dtd() - a.dtd();
    return std::max(dt, dd);
}

/// Shortest decimal form that reads back to the same double.
std::string format_real(double v);

/// "td,dtd" with shortest round-trip decimals.
std::string to_string(const TrustTriple& t);

/// Parses "td,dtd" or "td,dtd,ud". Throws std::invalid_argument.
TrustTriple parse_triple(std::string_view text);

/// Strict decimal parse of a whole field. Throws std::invalid_argument.
double parse_real(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TrustTriple& t);

}  // namespace trustlab

#endif  // TRUSTLAB_TRUST_TRIPLE_HPP
