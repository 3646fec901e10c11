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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qsm/suffix_index.h"

namespace qsm::internal {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

}  // namespace

// Induced sorting with an implicit sentinel past the end of `s`. Bucket
// layout per symbol c: [L-type suffixes | S-type suffixes], with l_start[c]
// the first slot of the bucket and s_start[c] the first S-type slot.
std::vector<std::uint32_t> sais(std::span<const std::uint32_t> s, std::uint32_t alphabet, std::uint64_t &reads) {
    const std::size_t n = s.size();
    auto at = [&](std::size_t i) {
        ++reads;
        return s[i];
    };
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {0};
    }
    if (n == 2) {
        if (at(0) < at(1)) {
            return {0, 1};
        }
        return {1, 0};
    }

    // is_s[i]: suffix i is smaller than suffix i + 1.
    std::vector<bool> is_s(n, false);
    for (std::size_t i = n - 1; i-- > 0;) {
        const std::uint32_t a = at(i);
        const std::uint32_t b = at(i + 1);
        is_s[i] = (a == b) ? is_s[i + 1] : (a < b);
    }

    // An S-type symbol always has a larger symbol after it, so c + 1 < alphabet.
    std::vector<std::uint32_t> l_start(alphabet + 1, 0), s_start(alphabet + 1, 0);
    for (std::size_t i = 0; i < n; i++) {
        const std::uint32_t c = at(i);
        if (!is_s[i]) {
            s_start[c]++;
        } else {
            l_start[c + 1]++;
        }
    }
    for (std::uint32_t c = 0; c < alphabet; c++) {
        s_start[c] += l_start[c];
        l_start[c + 1] += s_start[c];
    }

    std::vector<std::uint32_t> sa(n, kEmpty);
    std::vector<std::uint32_t> bucket(alphabet + 1);
    auto induce = [&](const std::vector<std::uint32_t> &lms) {
        std::fill(sa.begin(), sa.end(), kEmpty);
        std::copy(s_start.begin(), s_start.end(), bucket.begin());
        for (std::uint32_t d : lms) {
            sa[bucket[at(d)]++] = d;
        }
        std::copy(l_start.begin(), l_start.end(), bucket.begin());
        sa[bucket[at(n - 1)]++] = static_cast<std::uint32_t>(n - 1);
        for (std::size_t i = 0; i < n; i++) {
            const std::uint32_t v = sa[i];
            if (v != kEmpty && v >= 1 && !is_s[v - 1]) {
                sa[bucket[at(v - 1)]++] = v - 1;
            }
        }
        std::copy(l_start.begin(), l_start.end(), bucket.begin());
        for (std::size_t i = n; i-- > 0;) {
            const std::uint32_t v = sa[i];
            if (v != kEmpty && v >= 1 && is_s[v - 1]) {
                sa[--bucket[at(v - 1) + 1]] = v - 1;
            }
        }
    };

    std::vector<std::uint32_t> lms_id(n + 1, kEmpty);
    std::vector<std::uint32_t> lms;
    for (std::size_t i = 1; i < n; i++) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_id[i] = static_cast<std::uint32_t>(lms.size());
            lms.push_back(static_cast<std::uint32_t>(i));
        }
    }
    const std::size_t m = lms.size();

    induce(lms);
    if (m == 0) {
        return sa;
    }

    std::vector<std::uint32_t> sorted_lms;
    sorted_lms.reserve(m);
    for (std::uint32_t v : sa) {
        if (lms_id[v] != kEmpty) {
            sorted_lms.push_back(v);
        }
    }

    // Name LMS substrings; equal substrings share a name.
    std::vector<std::uint32_t> reduced(m);
    std::uint32_t name = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (std::size_t k = 1; k < m; k++) {
        std::size_t l = sorted_lms[k - 1];
        std::size_t r = sorted_lms[k];
        const std::size_t end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
        const std::size_t end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
        bool same = end_l - l == end_r - r;
        if (same) {
            while (l < end_l && at(l) == at(r)) {
                l++;
                r++;
            }
            if (l == n || r == n || at(l) != at(r)) {
                same = false;
            }
        }
        if (!same) {
            name++;
        }
        reduced[lms_id[sorted_lms[k]]] = name;
    }

    if (name + 1 < m) {
        const std::vector<std::uint32_t> reduced_sa = sais(reduced, name + 1, reads);
        for (std::size_t k = 0; k < m; k++) {
            sorted_lms[k] = lms[reduced_sa[k]];
        }
    }
    induce(sorted_lms);
    return sa;
}

}  // namespace qsm::internal
