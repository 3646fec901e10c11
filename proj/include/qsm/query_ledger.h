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

#ifndef QSM_QUERY_LEDGER_H
#define QSM_QUERY_LEDGER_H

#include <cstdint>

namespace qsm {

/// Separate counters for the two kinds of input access the library measures.
///
/// `classical_reads` counts text or pattern symbols read by deterministic
/// code (index construction, symbol comparisons in the border searches,
/// automaton scans). `quantum_queries` counts the oracle calls charged by the
/// simulated first-one search. Both only ever grow.
struct QueryLedger {
    std::uint64_t classical_reads = 0;
    std::uint64_t quantum_queries = 0;

    void charge_classical(std::uint64_t reads) { classical_reads += reads; }
    void charge_quantum(std::uint64_t queries) { quantum_queries += queries; }

    QueryLedger &operator+=(const QueryLedger &other) {
        classical_reads += other.classical_reads;
        quantum_queries += other.quantum_queries;
        return *this;
    }

    friend bool operator==(const QueryLedger &, const QueryLedger &) = default;
};

}  // namespace qsm

#endif  // QSM_QUERY_LEDGER_H
