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

#include "trustlab/edge_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trustlab {

namespace {

constexpr std::size_t kWordBits = 32;

bool bit_at(const std::vector<std::uint32_t>& words, EdgeId id) noexcept {
    const std::size_t w = id / kWordBits;
    return w < words.size() && ((words[w] >> (id % kWordBits)) & 1u) != 0;
}

}  // namespace

EdgeSet EdgeSet::singleton(EdgeId id) {
    EdgeSet s;
    s.data_.push_back(id);
    s.count_ = 1;
    return s;
}

template <class F>
void EdgeSet::for_each(F&& f) const {
    if (!bitset_) {
        for (auto id : data_) f(id);
        return;
    }
    for (std::size_t w = 0; w < data_.size(); ++w) {
        std::uint32_t bits = data_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            f(static_cast<EdgeId>(w * kWordBits + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
}

bool EdgeSet::contains(EdgeId id) const noexcept {
    if (bitset_) return bit_at(data_, id);
    return std::binary_search(data_.begin(), data_.end(), id);
}

std::vector<EdgeId> EdgeSet::to_vector() const {
    std::vector<EdgeId> out;
    out.reserve(count_);
    for_each([&](EdgeId id) { out.push_back(id); });
    return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const noexcept {
    if (count_ > other.count_) return false;
    if (count_ == 0) return true;
    if (!bitset_ && !other.bitset_) {
        return std::includes(other.data_.begin(), other.data_.end(), data_.begin(), data_.end());
    }
    if (bitset_ && other.bitset_) {
        const std::size_t n = std::min(data_.size(), other.data_.size());
        for (std::size_t w = 0; w < data_.size(); ++w) {
            const std::uint32_t theirs = w < n ? other.data_[w] : 0u;
            if ((data_[w] & ~theirs) != 0) return false;
        }
        return true;
    }
    bool ok = true;
    for_each([&](EdgeId id) { ok = ok && other.contains(id); });
    return ok;
}

EdgeSetBuilder::EdgeSetBuilder(std::size_t universe)
    : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0u) {}

void EdgeSetBuilder::insert(EdgeId id) {
    if (id >= universe_) throw std::out_of_range("edge id outside the edge universe");
    const std::size_t w = id / kWordBits;
    if (words_[w] == 0 && !all_touched_) {
        // Past a small fraction of the words a full scan beats sorting the list.
        if (touched_.size() * 16 >= words_.size()) {
            all_touched_ = true;
            touched_.clear();
        } else {
            touched_.push_back(static_cast<std::uint32_t>(w));
        }
    }
    words_[w] |= 1u << (id % kWordBits);
}

void EdgeSetBuilder::merge(const EdgeSet& s) {
    if (s.empty()) return;
    if (s.bitset_) {
        if (s.data_.size() > words_.size()) {
            throw std::out_of_range("edge set wider than the builder universe");
        }
        for (std::size_t w = 0; w < s.data_.size(); ++w) words_[w] |= s.data_[w];
        all_touched_ = true;
        touched_.clear();
        return;
    }
    if (s.data_.back() >= universe_) {
        throw std::out_of_range("edge id outside the edge universe");
    }
    if (!all_touched_) {
        for (auto id : s.data_) insert(id);
        return;
    }
    for (auto id : s.data_) words_[id / kWordBits] |= 1u << (id % kWordBits);
}

std::size_t EdgeSetBuilder::count() const noexcept {
    std::size_t count = 0;
    if (all_touched_) {
        for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    } else {
        for (auto w : touched_) count += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return count;
}

EdgeSet EdgeSetBuilder::build() {
    if (!all_touched_) std::sort(touched_.begin(), touched_.end());
    const std::size_t count = this->count();

    EdgeSet out;
    out.count_ = static_cast<std::uint32_t>(count);
    if (count > words_.size()) {
        out.bitset_ = true;
        out.data_ = words_;
    } else if (count > 0) {
        out.data_.reserve(count);
        auto emit = [&](std::size_t w) {
            std::uint32_t bits = words_[w];
            while (bits != 0) {
                out.data_.push_back(static_cast<EdgeId>(
                    w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        };
        if (all_touched_) {
            for (std::size_t w = 0; w < words_.size(); ++w) emit(w);
        } else {
            for (auto w : touched_) emit(w);
        }
    }
    clear();
    return out;
}

void EdgeSetBuilder::clear() {
    if (all_touched_) {
        std::fill(words_.begin(), words_.end(), 0u);
    } else {
        for (auto w : touched_) words_[w] = 0;
    }
    touched_.clear();
    all_touched_ = false;
}

}  // namespace trustlab
