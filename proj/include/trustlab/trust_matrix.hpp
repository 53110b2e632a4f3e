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
 * Square matrices of trust triples with a pinned FULL_TRUST diagonal.
 *
 * Two backings share one interface: dense row-major storage, and sparse rows
 * of (column, value) entries sorted by column where absent entries read as
 * NO_RELATION. Neither backing ever stores a diagonal entry other than
 * FULL_TRUST, and row iteration never reports the diagonal or NO_RELATION
 * entries, so algorithms written against for_each_in_row() visit exactly the
 * same terms in the same order whatever the backing.
 */

#ifndef TRUSTLAB_TRUST_MATRIX_HPP
#define TRUSTLAB_TRUST_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "trustlab/trust_graph.hpp"
#include "trustlab/trust_triple.hpp"

namespace trustlab {

class TrustMatrix {
public:
    enum class Storage { dense, sparse };

    struct Entry {
        NodeIndex col;
        TrustTriple value;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    TrustMatrix() = default;

    /// FULL_TRUST on the diagonal, NO_RELATION elsewhere.
    explicit TrustMatrix(std::size_t order, Storage storage = Storage::dense);

    std::size_t order() const noexcept { return n_; }
    Storage storage() const noexcept { return storage_; }

    TrustTriple at(std::size_t i, std::size_t j) const;

    /// Writes an off-diagonal entry. Throws std::out_of_range, and
    /// std::invalid_argument when asked to put anything but FULL_TRUST on the
    /// diagonal.
    void set(std::size_t i, std::size_t j, const TrustTriple& value);

    /// Replaces row i. `entries` must be sorted by column, off-diagonal and
    /// free of NO_RELATION values. Distinct rows may be assigned concurrently.
    void assign_row(std::size_t i, std::span<const Entry> entries);

    /// Calls f(col, value) for each off-diagonal entry of row i that is not
    /// NO_RELATION, in ascending column order.
    template <class F>
    void for_each_in_row(std::size_t i, F&& f) const {
        if (storage_ == Storage::dense) {
            const TrustTriple* row = dense_.data() + i * n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (j != i && !row[j].is_no_relation()) f(static_cast<NodeIndex>(j), row[j]);
            }
        } else {
            for (const auto& e : rows_[i]) f(e.col, e.value);
        }
    }

    /// Row i of a dense matrix, diagonal included. Throws std::logic_error on
    /// sparse storage.
    std::span<const TrustTriple> dense_row(std::size_t i) const;

    /// Number of off-diagonal entries that are not NO_RELATION.
    std::size_t relation_count() const;

    TrustMatrix with_storage(Storage storage) const;

    /// Same order and the same value at every position, whatever the backing.
    friend bool operator==(const TrustMatrix& a, const TrustMatrix& b);

private:
    std::size_t n_ = 0;
    Storage storage_ = Storage::dense;
    std::vector<TrustTriple> dense_;
    std::vector<std::vector<Entry>> rows_;
};

/// Largest |Δtd| or |Δdtd| over all positions. Orders must match.
double max_abs_diff(const TrustMatrix& a, const TrustMatrix& b);

/// Number of off-diagonal positions whose values differ.
std::size_t count_changed(const TrustMatrix& a, const TrustMatrix& b);

}  // namespace trustlab

#endif  // TRUSTLAB_TRUST_MATRIX_HPP
