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
 * Sets of edge identifiers, used as the per-pair edge memory of the general
 * engine.
 *
 * A set is stored either as a sorted id list or as a fixed-width bitset over
 * the whole edge universe, whichever is smaller. The choice is canonical (it
 * depends only on the contents and the universe size) so two equal sets built
 * over the same universe always share a representation.
 */

#ifndef TRUSTLAB_EDGE_SET_HPP
#define TRUSTLAB_EDGE_SET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trustlab {

using EdgeId = std::uint32_t;

class EdgeSet {
public:
    EdgeSet() = default;

    static EdgeSet singleton(EdgeId id);

    bool empty() const noexcept { return count_ == 0; }
    std::size_t size() const noexcept { return count_; }
    bool contains(EdgeId id) const noexcept;
    bool is_bitset() const noexcept { return bitset_; }

    /// Ascending ids.
    std::vector<EdgeId> to_vector() const;

    bool is_subset_of(const EdgeSet& other) const noexcept;

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) noexcept {
        return a.count_ == b.count_ && a.is_subset_of(b);
    }

private:
    friend class EdgeSetBuilder;

    template <class F>
    void for_each(F&& f) const;

    // Sorted ids, or bitset words when bitset_ is set.
    std::vector<std::uint32_t> data_;
    std::uint32_t count_ = 0;
    bool bitset_ = false;
};

/**
 * Accumulates a union of edge sets and single ids over a fixed universe
 * 0..universe-1, then emits the canonical EdgeSet. Reusable: build() leaves
 * the builder empty. Not thread-safe; keep one per worker.
 */
class EdgeSetBuilder {
public:
    explicit EdgeSetBuilder(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }

    void insert(EdgeId id);
    void merge(const EdgeSet& s);

    /// Number of distinct ids inserted so far.
    std::size_t count() const noexcept;

    EdgeSet build();
    void clear();

private:
    std::size_t universe_;
    std::vector<std::uint32_t> words_;
    std::vector<std::uint32_t> touched_;
    bool all_touched_ = false;
};

}  // namespace trustlab

#endif  // TRUSTLAB_EDGE_SET_HPP
