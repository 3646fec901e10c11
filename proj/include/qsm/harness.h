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

#ifndef QSM_HARNESS_H
#define QSM_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsm/matcher.h"
#include "qsm/qlcp.h"

namespace qsm {

enum class LengthShape {
    kFixed,    // every pattern has length b
    kUniform,  // lengths drawn uniformly from 1..b
};

std::string to_string(LengthShape shape);
LengthShape parse_length_shape(std::string_view name);

struct InstanceParams {
    std::size_t n = 1;
    std::size_t m = 1;
    std::size_t b = 1;
    LengthShape shape = LengthShape::kFixed;
    unsigned alphabet_size = 2;
    // Occurrences embedded per pattern; 0 leaves the text purely random.
    std::size_t planted = 0;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless n >= b >= 1, m >= 1 and the
    /// alphabet size lies in 2..26.
    void validate() const;
    friend bool operator==(const InstanceParams &, const InstanceParams &) = default;
};

struct Instance {
    std::string text;
    Dictionary dictionary;
};

/// Symbol k of the instance alphabet: 'a' + k.
inline char alphabet_symbol(unsigned k) { return static_cast<char>('a' + k); }

/// Deterministic in params.seed. Text and patterns are i.i.d. uniform over
/// the alphabet; in planted mode every pattern is then written into the
/// text `planted` times at random non-overlapping places. Throws
/// std::invalid_argument when planted * L > n.
Instance generate_instance(const InstanceParams &params);

// ---------------------------------------------------------------------------
// Equivalence checking

struct VerifyOptions {
    std::size_t trials = 0;
    std::size_t max_n = 2000;
    std::size_t max_m = 50;
    std::size_t max_b = 20;
    std::vector<unsigned> alphabets = {2, 4};
    std::uint64_t seed = 0;
    CostModelConfig config;
    // Reproduction dumps go here; empty disables dumping.
    std::filesystem::path dump_dir;
};

struct TrialCase {
    InstanceParams params;
    CostModelConfig config;
};

/// Instance parameters and cost model of one trial: alphabet from the
/// option list, n in 1..max_n, m in 1..max_m, b in 1..min(max_b, n), either
/// length shape, and half of the trials planted when that is feasible.
TrialCase sample_trial(const VerifyOptions &options, std::size_t trial);

struct VerifyReport {
    std::size_t trials = 0;
    std::size_t mismatches = 0;
    std::vector<std::size_t> failing_trials;
    std::vector<std::filesystem::path> dumps;
};

/// Runs match_all, ac_match and brute_force_match on every trial (trials in
/// parallel). A trial mismatches when either result differs from brute force.
/// Each mismatch is dumped to dump_dir/trial_<k>/ as text.txt, dict.txt,
/// params.json, qsa.tsv and expected.tsv.
VerifyReport verify_equivalence(const VerifyOptions &options);

struct ReplayResult {
    bool instance_reproduced = false;  // regenerated text and dict equal the dumped files
    bool output_reproduced = false;    // rerun qsa output equals qsa.tsv
    bool mismatch = false;             // rerun qsa output differs from brute force
};

ReplayResult replay_dump(const std::filesystem::path &dir);

// ---------------------------------------------------------------------------
// Benchmarking

inline constexpr std::string_view kBenchCsvHeader =
    "n,m,L,b,alphabet_size,seed,quantum_queries,classical_reads,ac_symbol_reads,qsa_wall_ms,ac_wall_ms,mismatch";

struct BenchRecord {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t L = 0;
    std::size_t b = 0;
    unsigned alphabet_size = 0;
    std::uint64_t seed = 0;
    // Border-search oracle charges only.
    std::uint64_t quantum_queries = 0;
    // Index construction plus symbol comparisons in the border searches.
    std::uint64_t classical_reads = 0;
    std::uint64_t ac_symbol_reads = 0;
    double qsa_wall_ms = 0;
    double ac_wall_ms = 0;
    bool mismatch = false;
    // Not part of the CSV.
    std::uint64_t ac_transitions = 0;
    std::vector<std::uint64_t> pattern_quantum_queries;
    std::vector<std::size_t> pattern_lengths;
};

BenchRecord run_bench_instance(const InstanceParams &params, const CostModelConfig &config);

/// Runs the sweep with rows in parallel and writes the header plus one row
/// per instance, in sweep order, to `csv`. Throws std::runtime_error if the
/// stream fails.
std::vector<BenchRecord> run_benchmark(std::span<const InstanceParams> sweep, const CostModelConfig &config,
                                       std::ostream &csv);

void write_csv_row(std::ostream &out, const BenchRecord &record);

/// Expands a sweep description (JSON; see README) into instance parameters.
std::vector<InstanceParams> parse_sweep(std::string_view json_text);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Per-pattern oracle budget sqrt(|s| * lg n) + lg n with lg n = max(1, log2 n).
double pattern_query_budget(std::size_t pattern_length, std::size_t n);

/// Whole-dictionary budget sqrt(m * L * lg n) + m * lg n.
double dictionary_query_budget(std::size_t m, std::size_t total_length, std::size_t n);

}  // namespace qsm

#endif  // QSM_HARNESS_H
