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

#ifndef TRUSTLAB_TESTS_SUPPORT_HPP
#define TRUSTLAB_TESTS_SUPPORT_HPP

#include <cstdint>

#include "trustlab/random_graph.hpp"
#include "trustlab/trust_triple.hpp"

namespace trustlab::testing {

/// Random triple for law checks. Mixes interior points with the simplex
/// edges and corners, where rounding problems tend to show up.
inline TrustTriple any_triple(Rng& rng) {
    switch (rng.below(8)) {
    case 0: return FULL_TRUST;
    case 1: return FULL_DISTRUST;
    case 2: return NO_RELATION;
    case 3: return TrustTriple(rng.uniform(), 0.0);
    case 4: {
        const double td = rng.uniform();
        return TrustTriple(td, 1.0 - td);
    }
    default: {
        const TrustTriple t = rng.triple();
        return t;
    }
    }
}

inline bool near(const TrustTriple& a, const TrustTriple& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

inline bool is_valid(const TrustTriple& t, double tol) {
    const double sum = t.td() + t.dtd() + t.ud();
    return t.td() >= 0.0 && t.td() <= 1.0 && t.dtd() >= 0.0 && t.dtd() <= 1.0 && t.ud() >= 0.0 &&
           t.ud() <= 1.0 && sum >= 1.0 - tol && sum <= 1.0 + tol;
}

}  // namespace trustlab::testing

#endif
