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

#ifndef QSM_BASELINE_H
#define QSM_BASELINE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsm/matcher.h"

namespace qsm {

/// Aho-Corasick automaton with sparse transitions. Node 0 is the root.
class AcAutomaton {
   public:
    static constexpr std::uint32_t kRoot = 0;
    static constexpr std::uint32_t kNone = UINT32_MAX;

    static AcAutomaton build(const Dictionary &dictionary);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t pattern_count() const { return pattern_lengths_.size(); }
    std::size_t pattern_length(std::size_t j) const { return pattern_lengths_[j]; }
    /// Pattern symbols read while building the trie.
    std::uint64_t build_reads() const { return build_reads_; }

    std::uint32_t child(std::uint32_t node, unsigned char symbol) const;
    std::uint32_t failure(std::uint32_t node) const { return nodes_[node].failure; }
    /// Nearest node on the failure chain (excluding `node`) that ends a pattern.
    std::uint32_t output_link(std::uint32_t node) const { return nodes_[node].output_link; }
    /// 0-indexed pattern ids ending exactly at `node`.
    std::span<const std::uint32_t> outputs(std::uint32_t node) const { return nodes_[node].outputs; }
    /// String spelled by the root-to-node path.
    std::string label(std::uint32_t node) const;

   private:
    struct Node {
        std::vector<std::pair<unsigned char, std::uint32_t>> edges;  // sorted by symbol
        std::uint32_t parent = kNone;
        unsigned char symbol = 0;
        std::uint32_t failure = kRoot;
        std::uint32_t output_link = kNone;
        std::vector<std::uint32_t> outputs;
    };

    std::vector<Node> nodes_;
    std::vector<std::size_t> pattern_lengths_;
    std::uint64_t build_reads_ = 0;
};

struct AcScanStats {
    // Text symbols read (one per position).
    std::uint64_t symbol_reads = 0;
    // Goto steps plus failure-link steps.
    std::uint64_t transitions = 0;
};

/// Single left-to-right pass. The report's classical_reads is build_reads()
/// plus |text|.
MatchReport ac_match(const AcAutomaton &automaton, std::string_view text, AcScanStats *stats = nullptr);

/// Tries every start position for every pattern. Correctness oracle; does
/// not account reads.
MatchReport brute_force_match(std::string_view text, const Dictionary &dictionary);

}  // namespace qsm

#endif  // QSM_BASELINE_H
