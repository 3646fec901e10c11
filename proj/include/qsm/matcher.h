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

#ifndef QSM_MATCHER_H
#define QSM_MATCHER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsm/qlcp.h"
#include "qsm/query_ledger.h"
#include "qsm/suffix_index.h"

namespace qsm {

/// Non-empty sequence of non-empty patterns. Duplicates are kept; each
/// pattern gets its own result slot.
class Dictionary {
   public:
    /// Throws std::invalid_argument if `patterns` or any pattern is empty.
    explicit Dictionary(std::vector<std::string> patterns);

    std::size_t size() const { return patterns_.size(); }
    const std::string &operator[](std::size_t j) const { return patterns_[j]; }
    const std::vector<std::string> &patterns() const { return patterns_; }
    /// L: sum of pattern lengths.
    std::size_t total_length() const { return total_length_; }
    /// b: longest pattern length.
    std::size_t max_length() const { return max_length_; }

    friend bool operator==(const Dictionary &a, const Dictionary &b) { return a.patterns_ == b.patterns_; }

   private:
    std::vector<std::string> patterns_;
    std::size_t total_length_ = 0;
    std::size_t max_length_ = 0;
};

/// A suffix-array rank, or absent when no suffix has the pattern as prefix.
struct BorderResult {
    std::optional<std::size_t> rank;

    static BorderResult absent() { return {}; }
    static BorderResult found(std::size_t r) { return {r}; }
    bool is_found() const { return rank.has_value(); }
    friend bool operator==(const BorderResult &, const BorderResult &) = default;
};

/// Instrumentation for one border search.
struct BorderSearchTrace {
    std::size_t iterations = 0;
    // Llcp and Rlcp after initialisation and after every loop iteration.
    std::vector<std::size_t> llcp;
    std::vector<std::size_t> rlcp;
};

struct MatchReport {
    // occurrences[j]: ascending 1-indexed start positions of pattern j.
    std::vector<std::vector<std::size_t>> occurrences;
    QueryLedger ledger;
    // Quantum queries charged by the border searches of each pattern.
    std::vector<std::uint64_t> pattern_quantum_queries;
};

/// Smallest rank whose suffix starts with `pattern`.
///
/// Binary search over ranks that keeps the LCP of the pattern with the
/// suffixes at both interval ends (Llcp, Rlcp). LCPs between suffixes come
/// from the RMQ table for free; LCPs against the pattern come from
/// `sim.qlcp_from`, resumed past the prefix already known to agree. Throws
/// std::invalid_argument for an empty pattern.
BorderResult left_border_search(const TextIndex &index, std::string_view pattern, QuerySimulator &sim,
                                BorderSearchTrace *trace = nullptr);

/// Largest rank whose suffix starts with `pattern`. Mirror image of
/// left_border_search.
BorderResult right_border_search(const TextIndex &index, std::string_view pattern, QuerySimulator &sim,
                                 BorderSearchTrace *trace = nullptr);

/// Text positions of ranks left..right, ascending. Throws
/// std::invalid_argument if left > right or a rank is outside 1..n.
std::vector<std::size_t> expand_occurrences(const TextIndex &index, std::size_t left, std::size_t right);

/// Serial reference driver over a prebuilt index. Pattern j uses simulator
/// stream j, so results do not depend on how patterns are scheduled.
MatchReport match_all(const TextIndex &index, const Dictionary &dictionary, const CostModelConfig &config,
                      QueryLedger &ledger);

/// Builds the index (charging its reads to `ledger`) and matches.
MatchReport match_all(std::string text, const Dictionary &dictionary, const CostModelConfig &config,
                      QueryLedger &ledger);

/// OpenMP version of match_all: patterns are distributed across threads,
/// each with its own ledger and generator. Output is identical to the
/// serial driver.
MatchReport match_all_parallel(const TextIndex &index, const Dictionary &dictionary, const CostModelConfig &config,
                               QueryLedger &ledger);

}  // namespace qsm

#endif  // QSM_MATCHER_H
