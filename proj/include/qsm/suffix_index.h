// Copyright 2026 The qsm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSM_SUFFIX_INDEX_H
#define QSM_SUFFIX_INDEX_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsm/query_ledger.h"

namespace qsm {

// Ranks and text positions are 1-indexed everywhere in the public API: rank r
// names the r-th smallest suffix, position p names the suffix starting at
// text[p - 1]. Symbols are bytes ordered as unsigned values, and a proper
// prefix sorts before any of its extensions (no terminator is appended).

/// Suffix start positions listed in increasing lexicographic order.
class SuffixArray {
   public:
    SuffixArray() = default;
    /// `positions[r - 1]` is the 1-indexed start of the rank-r suffix.
    explicit SuffixArray(std::vector<std::uint32_t> positions) : positions_(std::move(positions)) {}

    std::size_t size() const { return positions_.size(); }
    std::size_t position(std::size_t rank) const { return positions_[rank - 1]; }
    std::span<const std::uint32_t> positions() const { return positions_; }

   private:
    std::vector<std::uint32_t> positions_;
};

/// lcp[i] = LCP of the rank-i and rank-(i+1) suffixes, for i in 1..n-1.
class LcpArray {
   public:
    LcpArray() = default;
    explicit LcpArray(std::vector<std::uint32_t> values) : values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    std::size_t value(std::size_t i) const { return values_[i - 1]; }
    std::span<const std::uint32_t> values() const { return values_; }

   private:
    std::vector<std::uint32_t> values_;
};

/// Sparse table answering range minima over an LcpArray in O(1).
class RmqTable {
   public:
    RmqTable() = default;
    explicit RmqTable(std::span<const std::uint32_t> values);

    /// Minimum of entries first..last (1-indexed, inclusive, first <= last).
    std::uint32_t min(std::size_t first, std::size_t last) const;
    std::size_t size() const { return size_; }

   private:
    std::size_t size_ = 0;
    // levels_[k * size_ + i] = min of values[i .. i + 2^k - 1] (0-indexed).
    std::vector<std::uint32_t> levels_;
};

/// Builds the suffix array by induced sorting (SA-IS).
///
/// Every symbol access, including accesses to the reduced strings of the
/// recursion, is charged to `ledger.classical_reads`.
/// Throws std::invalid_argument on empty text.
SuffixArray build_suffix_array(std::string_view text, QueryLedger &ledger);

/// Kasai et al. LCP construction. Throws std::invalid_argument if `sa` is not
/// a permutation of 1..|text|.
LcpArray build_lcp_array(std::string_view text, const SuffixArray &sa, QueryLedger &ledger);

RmqTable build_rmq(const LcpArray &lcp);

/// Immutable bundle of a text and the structures derived from it. Safe for
/// concurrent readers.
class TextIndex {
   public:
    /// Throws std::invalid_argument on empty text or texts of 2^32 - 1 bytes
    /// or more.
    static TextIndex build(std::string text, QueryLedger &ledger);

    std::string_view text() const { return text_; }
    std::size_t size() const { return text_.size(); }
    const SuffixArray &suffix_array() const { return sa_; }
    const LcpArray &lcp() const { return lcp_; }
    const RmqTable &rmq() const { return rmq_; }

    /// The rank-th smallest suffix.
    std::string_view suffix(std::size_t rank) const { return text().substr(sa_.position(rank) - 1); }

   private:
    std::string text_;
    SuffixArray sa_;
    LcpArray lcp_;
    RmqTable rmq_;
};

/// LCP of the rank-i and rank-j suffixes from the RMQ table; reads no symbols.
/// Throws std::invalid_argument for ranks outside 1..n.
std::size_t lcp_suf(const TextIndex &index, std::size_t i, std::size_t j);

/// Linear-scan LCP. Reference implementation for tests and oracles.
std::size_t naive_lcp(std::string_view u, std::string_view v);

namespace internal {

/// SA-IS over an integer string with symbols in [0, alphabet). Returns
/// 0-indexed suffix starts. `reads` accumulates symbol accesses.
std::vector<std::uint32_t> sais(std::span<const std::uint32_t> s, std::uint32_t alphabet, std::uint64_t &reads);

}  // namespace internal

}  // namespace qsm

#endif  // QSM_SUFFIX_INDEX_H
