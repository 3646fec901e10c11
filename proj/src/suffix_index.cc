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

#include "qsm/suffix_index.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace qsm {

namespace {

inline std::uint32_t symbol(char c) { return static_cast<unsigned char>(c); }

}  // namespace

SuffixArray build_suffix_array(std::string_view text, QueryLedger &ledger) {
    if (text.empty()) {
        throw std::invalid_argument("build_suffix_array: empty text");
    }
    if (text.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("build_suffix_array: text too long");
    }
    std::vector<std::uint32_t> s(text.size());
    std::transform(text.begin(), text.end(), s.begin(), symbol);
    std::uint64_t reads = text.size();

    std::vector<std::uint32_t> sa = internal::sais(s, 256, reads);
    for (auto &p : sa) {
        p += 1;
    }
    ledger.charge_classical(reads);
    return SuffixArray(std::move(sa));
}

LcpArray build_lcp_array(std::string_view text, const SuffixArray &sa, QueryLedger &ledger) {
    const std::size_t n = text.size();
    if (sa.size() != n) {
        throw std::invalid_argument("build_lcp_array: suffix array length " + std::to_string(sa.size()) +
                                    " does not match text length " + std::to_string(n));
    }
    std::vector<std::uint32_t> rank(n, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t r = 0; r < n; r++) {
        const std::size_t p = sa.positions()[r];
        if (p < 1 || p > n || rank[p - 1] != std::numeric_limits<std::uint32_t>::max()) {
            throw std::invalid_argument("build_lcp_array: suffix array is not a permutation");
        }
        rank[p - 1] = static_cast<std::uint32_t>(r);
    }
    if (n == 0) {
        return LcpArray();
    }

    std::vector<std::uint32_t> lcp(n - 1, 0);
    std::uint64_t compares = 0;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; i++) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa.positions()[rank[i] - 1] - 1;
        while (i + h < n && j + h < n) {
            compares++;
            if (text[i + h] != text[j + h]) {
                break;
            }
            h++;
        }
        lcp[rank[i] - 1] = static_cast<std::uint32_t>(h);
        if (h > 0) {
            h--;
        }
    }
    ledger.charge_classical(2 * compares);
    return LcpArray(std::move(lcp));
}

RmqTable::RmqTable(std::span<const std::uint32_t> values) : size_(values.size()) {
    if (size_ == 0) {
        return;
    }
    const std::size_t levels = std::bit_width(size_);
    levels_.resize(levels * size_);
    std::copy(values.begin(), values.end(), levels_.begin());
    for (std::size_t k = 1; k < levels; k++) {
        const std::size_t half = std::size_t{1} << (k - 1);
        const std::uint32_t *prev = &levels_[(k - 1) * size_];
        std::uint32_t *cur = &levels_[k * size_];
        for (std::size_t i = 0; i + 2 * half <= size_; i++) {
            cur[i] = std::min(prev[i], prev[i + half]);
        }
    }
}

std::uint32_t RmqTable::min(std::size_t first, std::size_t last) const {
    const std::size_t a = first - 1;
    const std::size_t b = last - 1;
    const std::size_t k = std::bit_width(b - a + 1) - 1;
    const std::uint32_t *level = &levels_[k * size_];
    return std::min(level[a], level[b + 1 - (std::size_t{1} << k)]);
}

RmqTable build_rmq(const LcpArray &lcp) { return RmqTable(lcp.values()); }

TextIndex TextIndex::build(std::string text, QueryLedger &ledger) {
    TextIndex index;
    index.sa_ = build_suffix_array(text, ledger);
    index.lcp_ = build_lcp_array(text, index.sa_, ledger);
    index.rmq_ = build_rmq(index.lcp_);
    index.text_ = std::move(text);
    return index;
}

std::size_t lcp_suf(const TextIndex &index, std::size_t i, std::size_t j) {
    const std::size_t n = index.size();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw std::invalid_argument("lcp_suf: rank out of range 1.." + std::to_string(n));
    }
    if (i == j) {
        return n - index.suffix_array().position(i) + 1;
    }
    if (i > j) {
        std::swap(i, j);
    }
    return index.rmq().min(i, j - 1);
}

std::size_t naive_lcp(std::string_view u, std::string_view v) {
    const std::size_t limit = std::min(u.size(), v.size());
    std::size_t k = 0;
    while (k < limit && u[k] == v[k]) {
        k++;
    }
    return k;
}

}  // namespace qsm
