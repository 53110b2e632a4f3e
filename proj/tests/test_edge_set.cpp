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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "trustlab/edge_set.hpp"
#include "trustlab/random_graph.hpp"

namespace trustlab {
namespace {

EdgeSet make(std::size_t universe, const std::vector<EdgeId>& ids) {
    EdgeSetBuilder b(universe);
    for (auto id : ids) b.insert(id);
    return b.build();
}

TEST(EdgeSet, EmptyAndSingleton) {
    const EdgeSet e;
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(e.size(), 0u);
    const EdgeSet s = EdgeSet::singleton(42);
    EXPECT_EQ(s.size(), 1u);
    EXPECT_TRUE(s.contains(42));
    EXPECT_FALSE(s.contains(41));
    EXPECT_TRUE(e.is_subset_of(s));
    EXPECT_FALSE(s.is_subset_of(e));
    EXPECT_EQ(s, make(100, {42}));
}

TEST(EdgeSet, RepresentationIsCanonical) {
    // 64 ids fit in 2 words: anything above 2 elements goes to the bitset.
    const EdgeSet small = make(64, {5, 9});
    EXPECT_FALSE(small.is_bitset());
    const EdgeSet big = make(64, {5, 9, 63});
    EXPECT_TRUE(big.is_bitset());
    EXPECT_EQ(big.to_vector(), (std::vector<EdgeId>{5, 9, 63}));
}

TEST(EdgeSetBuilder, RejectsIdsOutsideUniverse) {
    EdgeSetBuilder b(10);
    EXPECT_THROW(b.insert(10), std::out_of_range);
    EdgeSetBuilder wide(1000);
    wide.insert(999);
    EdgeSetBuilder narrow(10);
    EXPECT_THROW(narrow.merge(wide.build()), std::out_of_range);
}

TEST(EdgeSetBuilder, BuildResetsBuilder) {
    EdgeSetBuilder b(100);
    b.insert(3);
    b.insert(70);
    EXPECT_EQ(b.count(), 2u);
    EXPECT_EQ(b.build().size(), 2u);
    EXPECT_EQ(b.count(), 0u);
    EXPECT_TRUE(b.build().empty());
}

TEST(EdgeSet, MatchesStdSetUnderRandomUnions) {
    Rng rng(17);
    for (int round = 0; round < 300; ++round) {
        const std::size_t universe = 1 + rng.below(300);
        std::vector<std::set<EdgeId>> refs;
        std::vector<EdgeSet> sets;
        for (int k = 0; k < 4; ++k) {
            std::vector<EdgeId> ids;
            const std::size_t count = rng.below(universe + 1);
            for (std::size_t c = 0; c < count; ++c) {
                ids.push_back(static_cast<EdgeId>(rng.below(universe)));
            }
            refs.emplace_back(ids.begin(), ids.end());
            sets.push_back(make(universe, ids));
        }
        EdgeSetBuilder b(universe);
        std::set<EdgeId> ref_union;
        for (std::size_t k = 0; k < sets.size(); ++k) {
            ASSERT_EQ(sets[k].size(), refs[k].size());
            ASSERT_EQ(sets[k].to_vector(), std::vector<EdgeId>(refs[k].begin(), refs[k].end()));
            b.merge(sets[k]);
            ref_union.insert(refs[k].begin(), refs[k].end());
        }
        const EdgeSet u = b.build();
        ASSERT_EQ(u.to_vector(), std::vector<EdgeId>(ref_union.begin(), ref_union.end()));
        for (std::size_t k = 0; k < sets.size(); ++k) {
            ASSERT_TRUE(sets[k].is_subset_of(u));
            const bool ref_subset = std::includes(refs[0].begin(), refs[0].end(),
                                                  refs[k].begin(), refs[k].end());
            ASSERT_EQ(sets[k].is_subset_of(sets[0]), ref_subset);
            ASSERT_EQ(sets[k] == sets[0], refs[k] == refs[0]);
        }
        for (EdgeId id = 0; id < universe; ++id) {
            ASSERT_EQ(u.contains(id), ref_union.count(id) == 1);
        }
    }
}

}  // namespace
}  // namespace trustlab
