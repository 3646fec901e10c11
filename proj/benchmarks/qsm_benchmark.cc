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

// Wall-time comparison of the serial reference driver, the OpenMP driver and
// the classical baselines on planted instances. Query counts are reported as
// counters; they are identical between the serial and parallel drivers.

#include <benchmark/benchmark.h>

#include "qsm/baseline.h"
#include "qsm/harness.h"
#include "qsm/matcher.h"

namespace {

qsm::Instance make_instance(const benchmark::State &state) {
    qsm::InstanceParams p;
    p.n = static_cast<std::size_t>(state.range(0));
    p.m = static_cast<std::size_t>(state.range(1));
    p.b = static_cast<std::size_t>(state.range(2));
    p.alphabet_size = 4;
    p.planted = 1;
    p.seed = 7;
    return qsm::generate_instance(p);
}

void BM_BuildIndex(benchmark::State &state) {
    const qsm::Instance inst = make_instance(state);
    for (auto _ : state) {
        qsm::QueryLedger ledger;
        benchmark::DoNotOptimize(qsm::TextIndex::build(inst.text, ledger));
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(inst.text.size()));
}

template <bool kParallel>
void BM_MatchAll(benchmark::State &state) {
    const qsm::Instance inst = make_instance(state);
    qsm::QueryLedger build_ledger;
    const qsm::TextIndex index = qsm::TextIndex::build(inst.text, build_ledger);
    const qsm::CostModelConfig config;
    std::uint64_t queries = 0;
    for (auto _ : state) {
        qsm::QueryLedger ledger;
        auto report = kParallel ? qsm::match_all_parallel(index, inst.dictionary, config, ledger)
                                : qsm::match_all(index, inst.dictionary, config, ledger);
        benchmark::DoNotOptimize(report);
        queries = ledger.quantum_queries;
    }
    state.counters["quantum_queries"] = static_cast<double>(queries);
}

void BM_AhoCorasick(benchmark::State &state) {
    const qsm::Instance inst = make_instance(state);
    for (auto _ : state) {
        auto report = qsm::ac_match(qsm::AcAutomaton::build(inst.dictionary), inst.text);
        benchmark::DoNotOptimize(report);
    }
}

void BM_BruteForce(benchmark::State &state) {
    const qsm::Instance inst = make_instance(state);
    for (auto _ : state) {
        auto report = qsm::brute_force_match(inst.text, inst.dictionary);
        benchmark::DoNotOptimize(report);
    }
}

void Sizes(benchmark::internal::Benchmark *b) {
    for (int64_t pattern_len : {16, 64, 256}) {
        b->Args({65536, 128, pattern_len});
    }
}

}  // namespace

BENCHMARK(BM_BuildIndex)->Args({65536, 1, 1})->Args({1 << 20, 1, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchAll<false>)->Name("BM_MatchAll/serial")->Apply(Sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchAll<true>)->Name("BM_MatchAll/openmp")->Apply(Sizes)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AhoCorasick)->Apply(Sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->Args({65536, 128, 16})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
