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

#include "qsm/matcher.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace qsm;

namespace {

TextIndex index_of(std::string text) {
    QueryLedger ledger;
    return TextIndex::build(std::move(text), ledger);
}

BorderResult left(const TextIndex &index, std::string_view pattern, BorderSearchTrace *trace = nullptr) {
    QueryLedger ledger;
    QuerySimulator sim(CostModelConfig{}, ledger);
    return left_border_search(index, pattern, sim, trace);
}

BorderResult right(const TextIndex &index, std::string_view pattern, BorderSearchTrace *trace = nullptr) {
    QueryLedger ledger;
    QuerySimulator sim(CostModelConfig{}, ledger);
    return right_border_search(index, pattern, sim, trace);
}

using Occ = std::vector<std::vector<std::size_t>>;

Occ match(std::string text, std::vector<std::string> patterns) {
    QueryLedger ledger;
    return match_all(std::move(text), Dictionary(std::move(patterns)), CostModelConfig{}, ledger).occurrences;
}

// Ranks whose suffix starts with the pattern, by direct comparison.
std::vector<std::size_t> carrying_ranks(const TextIndex &index, std::string_view pattern) {
    std::vector<std::size_t> ranks;
    for (std::size_t r = 1; r <= index.size(); r++) {
        if (index.suffix(r).substr(0, pattern.size()) == pattern) {
            ranks.push_back(r);
        }
    }
    return ranks;
}

bool nondecreasing(const std::vector<std::size_t> &v) { return std::is_sorted(v.begin(), v.end()); }

}  // namespace

TEST(left_border_search, examples) {
    const TextIndex banana = index_of("banana");
    EXPECT_EQ(left(banana, "ana"), BorderResult::found(2));
    EXPECT_EQ(left(banana, "zzz"), BorderResult::absent());
    EXPECT_EQ(left(banana, "banana"), BorderResult::found(4));
}

TEST(right_border_search, examples) {
    EXPECT_EQ(right(index_of("banana"), "ana"), BorderResult::found(3));
    EXPECT_EQ(right(index_of("banana"), "b"), BorderResult::found(4));
    EXPECT_EQ(right(index_of("aaa"), "a"), BorderResult::found(3));
}

TEST(border_search, pattern_between_suffixes_is_absent) {
    // "anb" sorts between "ana" / "anana" and "banana" but occurs nowhere.
    const TextIndex banana = index_of("banana");
    EXPECT_EQ(left(banana, "anb"), BorderResult::absent());
    EXPECT_EQ(right(banana, "anb"), BorderResult::absent());
    EXPECT_EQ(left(banana, "0"), BorderResult::absent());
    EXPECT_EQ(right(banana, "0"), BorderResult::absent());
}

TEST(border_search, pattern_longer_than_suffixes) {
    const TextIndex index = index_of("abab");
    EXPECT_EQ(left(index, "ababa"), BorderResult::absent());
    EXPECT_EQ(right(index, "ababa"), BorderResult::absent());
    EXPECT_EQ(left(index, "bab"), BorderResult::found(4));
    EXPECT_EQ(right(index, "bab"), BorderResult::found(4));
}

TEST(border_search, single_symbol_text) {
    const TextIndex index = index_of("q");
    EXPECT_EQ(left(index, "q"), BorderResult::found(1));
    EXPECT_EQ(right(index, "q"), BorderResult::found(1));
    EXPECT_EQ(left(index, "p"), BorderResult::absent());
    EXPECT_EQ(right(index, "r"), BorderResult::absent());
    EXPECT_EQ(left(index, "qq"), BorderResult::absent());
}

TEST(border_search, empty_pattern_rejected) {
    const TextIndex index = index_of("abc");
    EXPECT_THROW(left(index, ""), std::invalid_argument);
    EXPECT_THROW(right(index, ""), std::invalid_argument);
}

// All carrying ranks form [left, right], and each search stays within the
// binary-search iteration bound with monotone Llcp and Rlcp.
TEST(border_search, contiguity_iterations_and_monotonicity) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; trial++) {
        const unsigned alphabet = trial % 2 ? 2 : 4;
        const TextIndex index = index_of(qsm::testing::random_text(rng, 1 + rng() % 400, alphabet));
        const auto limit = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(index.size())))) + 1;
        for (int k = 0; k < 20; k++) {
            std::string pattern;
            if (k % 2 == 0) {
                const std::size_t start = rng() % index.size();
                pattern = std::string(index.text().substr(start, 1 + rng() % 12));
            } else {
                pattern = qsm::testing::random_text(rng, 1 + rng() % 12, alphabet);
            }
            const std::vector<std::size_t> ranks = carrying_ranks(index, pattern);
            BorderSearchTrace lt, rt;
            const BorderResult l = left(index, pattern, &lt);
            const BorderResult r = right(index, pattern, &rt);
            if (ranks.empty()) {
                ASSERT_FALSE(l.is_found()) << pattern;
                ASSERT_FALSE(r.is_found()) << pattern;
            } else {
                ASSERT_EQ(l, BorderResult::found(ranks.front())) << pattern;
                ASSERT_EQ(r, BorderResult::found(ranks.back())) << pattern;
                ASSERT_EQ(ranks.size(), ranks.back() - ranks.front() + 1);
            }
            for (const BorderSearchTrace *t : {&lt, &rt}) {
                ASSERT_LE(t->iterations, limit);
                ASSERT_TRUE(nondecreasing(t->llcp));
                ASSERT_TRUE(nondecreasing(t->rlcp));
            }
        }
    }
}

TEST(expand_occurrences, examples) {
    EXPECT_EQ(expand_occurrences(index_of("banana"), 2, 3), (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(expand_occurrences(index_of("banana"), 5, 5), (std::vector<std::size_t>{5}));
    EXPECT_EQ(expand_occurrences(index_of("aaa"), 1, 3), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(expand_occurrences, invalid_ranges) {
    const TextIndex index = index_of("banana");
    EXPECT_THROW(expand_occurrences(index, 3, 2), std::invalid_argument);
    EXPECT_THROW(expand_occurrences(index, 0, 2), std::invalid_argument);
    EXPECT_THROW(expand_occurrences(index, 2, 7), std::invalid_argument);
}

TEST(match_all, examples) {
    EXPECT_EQ(match("banana", {"ana", "nan", "x"}), (Occ{{2, 4}, {3}, {}}));
    EXPECT_EQ(match("ushers", {"he", "she", "his", "hers"}), (Occ{{3}, {2}, {}, {3}}));
    EXPECT_EQ(match("aaa", {"a"}), (Occ{{1, 2, 3}}));
}

TEST(match_all, duplicates_and_overlaps) {
    EXPECT_EQ(match("aaaa", {"aa", "aa", "aaaaa"}), (Occ{{1, 2, 3}, {1, 2, 3}, {}}));
}

TEST(match_all, agrees_with_scan_on_random_instances) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; trial++) {
        const unsigned alphabet = trial % 2 ? 2 : 4;
        const std::string text = qsm::testing::random_text(rng, 1 + rng() % 800, alphabet);
        std::vector<std::string> patterns;
        for (std::size_t j = 0, m = 1 + rng() % 30; j < m; j++) {
            patterns.push_back(qsm::testing::random_text(rng, 1 + rng() % 10, alphabet));
        }
        const Occ got = match(text, patterns);
        for (std::size_t j = 0; j < patterns.size(); j++) {
            ASSERT_EQ(got[j], qsm::testing::scan_occurrences(text, patterns[j])) << patterns[j];
        }
    }
}

TEST(match_all, ledger_accounting) {
    QueryLedger ledger;
    const MatchReport report =
        match_all(std::string("abracadabra"), Dictionary({"abra", "cad", "zz"}), CostModelConfig{}, ledger);
    ASSERT_EQ(report.pattern_quantum_queries.size(), 3u);
    std::uint64_t sum = 0;
    for (auto q : report.pattern_quantum_queries) {
        EXPECT_GT(q, 0u);
        sum += q;
    }
    EXPECT_EQ(sum, ledger.quantum_queries);
    EXPECT_EQ(report.ledger, ledger);
    EXPECT_GT(ledger.classical_reads, 0u);
}

TEST(match_all, parallel_driver_matches_serial_reference) {
    std::mt19937_64 rng(33);
    for (CostModelConfig config : {CostModelConfig{}, CostModelConfig{1.0, CostMode::kStochastic, {}, 4},
                                   CostModelConfig{1.0, CostMode::kDeterministic, ErrorStrategy::overshoot(0.2), 8}}) {
        for (int trial = 0; trial < 20; trial++) {
            QueryLedger build;
            const TextIndex index = TextIndex::build(qsm::testing::random_text(rng, 2000, 4), build);
            std::vector<std::string> patterns;
            for (int j = 0; j < 64; j++) {
                const std::size_t start = rng() % 1990;
                patterns.emplace_back(index.text().substr(start, 1 + rng() % 10));
            }
            const Dictionary dict(patterns);
            QueryLedger serial_ledger, parallel_ledger;
            const MatchReport serial = match_all(index, dict, config, serial_ledger);
            const MatchReport parallel = match_all_parallel(index, dict, config, parallel_ledger);
            ASSERT_EQ(serial.occurrences, parallel.occurrences);
            ASSERT_EQ(serial.pattern_quantum_queries, parallel.pattern_quantum_queries);
            ASSERT_EQ(serial_ledger, parallel_ledger);
        }
    }
}

TEST(dictionary, validation_and_sizes) {
    EXPECT_THROW(Dictionary({}), std::invalid_argument);
    EXPECT_THROW(Dictionary({"a", ""}), std::invalid_argument);
    const Dictionary d({"he", "she", "his", "hers"});
    EXPECT_EQ(d.size(), 4u);
    EXPECT_EQ(d.total_length(), 12u);
    EXPECT_EQ(d.max_length(), 4u);
}
