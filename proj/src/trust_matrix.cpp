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

#include "trustlab/trust_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace trustlab {

TrustMatrix::TrustMatrix(std::size_t order, Storage storage) : n_(order), storage_(storage) {
    if (storage_ == Storage::dense) {
        dense_.assign(n_ * n_, NO_RELATION);
        for (std::size_t i = 0; i < n_; ++i) dense_[i * n_ + i] = FULL_TRUST;
    } else {
        rows_.resize(n_);
    }
}

TrustTriple TrustMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("TrustMatrix::at");
    if (i == j) return FULL_TRUST;
    if (storage_ == Storage::dense) return dense_[i * n_ + j];
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t c) { return e.col < c; });
    return it != row.end() && it->col == j ? it->value : NO_RELATION;
}

void TrustMatrix::set(std::size_t i, std::size_t j, const TrustTriple& value) {
    if (i >= n_ || j >= n_) throw std::out_of_range("TrustMatrix::set");
    if (i == j) {
        if (value != FULL_TRUST) throw std::invalid_argument("diagonal is pinned to <1,0,0>");
        return;
    }
    if (storage_ == Storage::dense) {
        dense_[i * n_ + j] = value;
        return;
    }
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t c) { return e.col < c; });
    const bool present = it != row.end() && it->col == j;
    if (value.is_no_relation()) {
        if (present) row.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        row.insert(it, Entry{static_cast<NodeIndex>(j), value});
    }
}

void TrustMatrix::assign_row(std::size_t i, std::span<const Entry> entries) {
    if (i >= n_) throw std::out_of_range("TrustMatrix::assign_row");
    if (storage_ == Storage::dense) {
        TrustTriple* row = dense_.data() + i * n_;
        std::fill(row, row + n_, NO_RELATION);
        row[i] = FULL_TRUST;
        for (const auto& e : entries) {
            if (e.col != i) row[e.col] = e.value;
        }
    } else {
        auto& row = rows_[i];
        row.clear();
        for (const auto& e : entries) {
            if (e.col != i && !e.value.is_no_relation()) row.push_back(e);
        }
    }
}

std::span<const TrustTriple> TrustMatrix::dense_row(std::size_t i) const {
    if (storage_ != Storage::dense) throw std::logic_error("dense_row on a sparse matrix");
    if (i >= n_) throw std::out_of_range("TrustMatrix::dense_row");
    return {dense_.data() + i * n_, n_};
}

std::size_t TrustMatrix::relation_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for_each_in_row(i, [&](NodeIndex, const TrustTriple&) { ++count; });
    }
    return count;
}

TrustMatrix TrustMatrix::with_storage(Storage storage) const {
    if (storage == storage_) return *this;
    TrustMatrix out(n_, storage);
    std::vector<Entry> row;
    for (std::size_t i = 0; i < n_; ++i) {
        row.clear();
        for_each_in_row(i, [&](NodeIndex j, const TrustTriple& v) { row.push_back({j, v}); });
        out.assign_row(i, row);
    }
    return out;
}

bool operator==(const TrustMatrix& a, const TrustMatrix& b) {
    if (a.n_ != b.n_) return false;
    if (a.storage_ == b.storage_) {
        return a.storage_ == TrustMatrix::Storage::dense ? a.dense_ == b.dense_ : a.rows_ == b.rows_;
    }
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t j = 0; j < a.n_; ++j) {
            if (a.at(i, j) != b.at(i, j)) return false;
        }
    }
    return true;
}

double max_abs_diff(const TrustMatrix& a, const TrustMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("max_abs_diff: order mismatch");
    double worst = 0.0;
    const std::size_t n = a.order();
    if (a.storage() == TrustMatrix::Storage::dense && b.storage() == TrustMatrix::Storage::dense) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                worst = std::max(worst, max_abs_diff(a.at(i, j), b.at(i, j)));
            }
        }
        return worst;
    }
    // Entries absent from both sides are NO_RELATION on both and contribute 0.
    for (std::size_t i = 0; i < n; ++i) {
        a.for_each_in_row(i, [&](NodeIndex j, const TrustTriple& v) {
            worst = std::max(worst, max_abs_diff(v, b.at(i, j)));
        });
        b.for_each_in_row(i, [&](NodeIndex j, const TrustTriple& v) {
            worst = std::max(worst, max_abs_diff(v, a.at(i, j)));
        });
    }
    return worst;
}

std::size_t count_changed(const TrustMatrix& a, const TrustMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("count_changed: order mismatch");
    std::size_t changed = 0;
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j) {
            if (i != j && a.at(i, j) != b.at(i, j)) ++changed;
        }
    }
    return changed;
}

}  // namespace trustlab
