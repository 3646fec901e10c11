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

#include "qsm/baseline.h"

namespace qsm {

MatchReport brute_force_match(std::string_view text, const Dictionary &dictionary) {
    MatchReport report;
    report.occurrences.resize(dictionary.size());
    report.pattern_quantum_queries.assign(dictionary.size(), 0);
    for (std::size_t j = 0; j < dictionary.size(); j++) {
        const std::string_view pattern = dictionary[j];
        if (pattern.size() > text.size()) {
            continue;
        }
        for (std::size_t p = 0; p + pattern.size() <= text.size(); p++) {
            if (text.compare(p, pattern.size(), pattern) == 0) {
                report.occurrences[j].push_back(p + 1);
            }
        }
    }
    return report;
}

}  // namespace qsm
