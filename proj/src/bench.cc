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

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "qsm/baseline.h"
#include "qsm/harness.h"

namespace qsm {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::vector<nlohmann::json> as_list(const nlohmann::json &cell, const char *key) {
    const nlohmann::json &v = cell.at(key);
    if (v.is_array()) {
        return {v.begin(), v.end()};
    }
    return {v};
}

}  // namespace

BenchRecord run_bench_instance(const InstanceParams &params, const CostModelConfig &config) {
    const Instance instance = generate_instance(params);
    BenchRecord rec;
    rec.n = params.n;
    rec.m = instance.dictionary.size();
    rec.L = instance.dictionary.total_length();
    rec.b = params.b;
    rec.alphabet_size = params.alphabet_size;
    rec.seed = params.seed;
    for (const std::string &p : instance.dictionary.patterns()) {
        rec.pattern_lengths.push_back(p.size());
    }

    auto start = Clock::now();
    QueryLedger ledger;
    const MatchReport qsa = match_all(instance.text, instance.dictionary, config, ledger);
    rec.qsa_wall_ms = elapsed_ms(start);
    rec.quantum_queries = ledger.quantum_queries;
    rec.classical_reads = ledger.classical_reads;
    rec.pattern_quantum_queries = qsa.pattern_quantum_queries;

    start = Clock::now();
    AcScanStats stats;
    const MatchReport ac = ac_match(AcAutomaton::build(instance.dictionary), instance.text, &stats);
    rec.ac_wall_ms = elapsed_ms(start);
    rec.ac_symbol_reads = ac.ledger.classical_reads;
    rec.ac_transitions = stats.transitions;

    rec.mismatch = qsa.occurrences != ac.occurrences;
    return rec;
}

void write_csv_row(std::ostream &out, const BenchRecord &r) {
    out << r.n << ',' << r.m << ',' << r.L << ',' << r.b << ',' << r.alphabet_size << ',' << r.seed << ','
        << r.quantum_queries << ',' << r.classical_reads << ',' << r.ac_symbol_reads << ',' << r.qsa_wall_ms << ','
        << r.ac_wall_ms << ',' << (r.mismatch ? 1 : 0) << '\n';
}

std::vector<BenchRecord> run_benchmark(std::span<const InstanceParams> sweep, const CostModelConfig &config,
                                       std::ostream &csv) {
    config.validate();
    for (const InstanceParams &p : sweep) {
        p.validate();
    }
    std::vector<BenchRecord> records(sweep.size());
    const auto rows = static_cast<std::ptrdiff_t>(sweep.size());
    // Rows are independent; exceptions must not escape the parallel region.
    std::vector<std::string> errors(sweep.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < rows; i++) {
        try {
            records[i] = run_bench_instance(sweep[i], config);
        } catch (const std::exception &e) {
            errors[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < errors.size(); i++) {
        if (!errors[i].empty()) {
            throw std::invalid_argument("sweep row " + std::to_string(i + 1) + ": " + errors[i]);
        }
    }

    csv << kBenchCsvHeader << '\n';
    for (const BenchRecord &r : records) {
        write_csv_row(csv, r);
    }
    csv.flush();
    if (!csv) {
        throw std::runtime_error("failed to write benchmark CSV");
    }
    return records;
}

// A sweep is a JSON array of cells (or {"cells": [...]}). Each cell holds n,
// m, b, alphabet_size and planted as numbers or lists of numbers, plus
// optional "shape" ("fixed" | "uniform"), "seed" (first seed, default 1) and
// "seeds" (count, default 1). Rows are the cartesian product of the lists
// times the seeds, in that nesting order.
std::vector<InstanceParams> parse_sweep(std::string_view json_text) {
    const nlohmann::json doc = nlohmann::json::parse(json_text);
    const nlohmann::json &cells = doc.is_object() ? doc.at("cells") : doc;
    if (!cells.is_array()) {
        throw std::invalid_argument("sweep: expected an array of cells");
    }
    std::vector<InstanceParams> sweep;
    for (const nlohmann::json &cell : cells) {
        const LengthShape shape = parse_length_shape(cell.value("shape", std::string("fixed")));
        const auto first_seed = cell.value("seed", std::uint64_t{1});
        const auto seeds = cell.value("seeds", std::uint64_t{1});
        const nlohmann::json planted_default = 0;
        const auto planted_list = cell.contains("planted") ? as_list(cell, "planted") : std::vector{planted_default};
        for (const auto &n : as_list(cell, "n")) {
            for (const auto &m : as_list(cell, "m")) {
                for (const auto &b : as_list(cell, "b")) {
                    for (const auto &sigma : as_list(cell, "alphabet_size")) {
                        for (const auto &k : planted_list) {
                            for (std::uint64_t s = 0; s < seeds; s++) {
                                InstanceParams p;
                                p.n = n.get<std::size_t>();
                                p.m = m.get<std::size_t>();
                                p.b = b.get<std::size_t>();
                                p.alphabet_size = sigma.get<unsigned>();
                                p.planted = k.get<std::size_t>();
                                p.shape = shape;
                                p.seed = first_seed + s;
                                p.validate();
                                sweep.push_back(p);
                            }
                        }
                    }
                }
            }
        }
    }
    return sweep;
}

}  // namespace qsm
