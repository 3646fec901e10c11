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
#include <deque>

#include "qsm/baseline.h"

namespace qsm {

std::uint32_t AcAutomaton::child(std::uint32_t node, unsigned char symbol) const {
    const auto &edges = nodes_[node].edges;
    auto it = std::lower_bound(edges.begin(), edges.end(), symbol,
                               [](const auto &edge, unsigned char c) { return edge.first < c; });
    return (it != edges.end() && it->first == symbol) ? it->second : kNone;
}

std::string AcAutomaton::label(std::uint32_t node) const {
    std::string s;
    for (std::uint32_t v = node; v != kRoot; v = nodes_[v].parent) {
        s.push_back(static_cast<char>(nodes_[v].symbol));
    }
    std::reverse(s.begin(), s.end());
    return s;
}

AcAutomaton AcAutomaton::build(const Dictionary &dictionary) {
    AcAutomaton ac;
    ac.nodes_.emplace_back();
    ac.pattern_lengths_.reserve(dictionary.size());

    for (std::size_t j = 0; j < dictionary.size(); j++) {
        const std::string &pattern = dictionary[j];
        std::uint32_t v = kRoot;
        for (char ch : pattern) {
            const auto c = static_cast<unsigned char>(ch);
            ac.build_reads_++;
            auto &edges = ac.nodes_[v].edges;
            auto it = std::lower_bound(edges.begin(), edges.end(), c,
                                       [](const auto &edge, unsigned char x) { return edge.first < x; });
            if (it != edges.end() && it->first == c) {
                v = it->second;
                continue;
            }
            const auto id = static_cast<std::uint32_t>(ac.nodes_.size());
            edges.insert(it, {c, id});
            Node fresh;
            fresh.parent = v;
            fresh.symbol = c;
            ac.nodes_.push_back(std::move(fresh));
            v = id;
        }
        ac.nodes_[v].outputs.push_back(static_cast<std::uint32_t>(j));
        ac.pattern_lengths_.push_back(pattern.size());
    }

    // Breadth-first so every failure target is finished before it is used.
    std::deque<std::uint32_t> queue;
    for (const auto &[c, v] : ac.nodes_[kRoot].edges) {
        ac.nodes_[v].failure = kRoot;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (const auto &[c, v] : ac.nodes_[u].edges) {
            std::uint32_t f = ac.nodes_[u].failure;
            while (f != kRoot && ac.child(f, c) == kNone) {
                f = ac.nodes_[f].failure;
            }
            const std::uint32_t target = ac.child(f, c);
            Node &node = ac.nodes_[v];
            node.failure = (target != kNone && target != v) ? target : kRoot;
            const Node &fail = ac.nodes_[node.failure];
            node.output_link = !fail.outputs.empty() ? node.failure : fail.output_link;
            queue.push_back(v);
        }
    }
    return ac;
}

MatchReport ac_match(const AcAutomaton &automaton, std::string_view text, AcScanStats *stats) {
    MatchReport report;
    report.occurrences.resize(automaton.pattern_count());
    report.pattern_quantum_queries.assign(automaton.pattern_count(), 0);

    AcScanStats local;
    std::uint32_t state = AcAutomaton::kRoot;
    for (std::size_t i = 0; i < text.size(); i++) {
        const auto c = static_cast<unsigned char>(text[i]);
        local.symbol_reads++;
        std::uint32_t next = automaton.child(state, c);
        while (next == AcAutomaton::kNone && state != AcAutomaton::kRoot) {
            state = automaton.failure(state);
            local.transitions++;
            next = automaton.child(state, c);
        }
        if (next != AcAutomaton::kNone) {
            state = next;
            local.transitions++;
        }
        std::uint32_t hit = automaton.outputs(state).empty() ? automaton.output_link(state) : state;
        while (hit != AcAutomaton::kNone) {
            for (std::uint32_t j : automaton.outputs(hit)) {
                report.occurrences[j].push_back(i + 2 - automaton.pattern_length(j));
            }
            hit = automaton.output_link(hit);
        }
    }
    report.ledger.classical_reads = automaton.build_reads() + local.symbol_reads;
    if (stats != nullptr) {
        *stats = local;
    }
    return report;
}

}  // namespace qsm
