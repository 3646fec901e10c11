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

#include <algorithm>
#include <stdexcept>

namespace qsm {

Dictionary::Dictionary(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) {
        throw std::invalid_argument("dictionary must contain at least one pattern");
    }
    for (std::size_t j = 0; j < patterns_.size(); j++) {
        if (patterns_[j].empty()) {
            throw std::invalid_argument("dictionary pattern " + std::to_string(j + 1) + " is empty");
        }
        total_length_ += patterns_[j].size();
        max_length_ = std::max(max_length_, patterns_[j].size());
    }
}

namespace {

// State shared by both border searches.
class BorderSearch {
   public:
    BorderSearch(const TextIndex &index, std::string_view pattern, QuerySimulator &sim, BorderSearchTrace *trace)
        : index_(index), pattern_(pattern), sim_(sim), trace_(trace) {
        if (pattern.empty()) {
            throw std::invalid_argument("border search: empty pattern");
        }
    }

    std::size_t n() const { return index_.size(); }
    std::size_t m() const { return pattern_.size(); }
    std::string_view suffix(std::size_t rank) const { return index_.suffix(rank); }

    std::size_t lcp_with_pattern(std::size_t rank, std::size_t known) {
        return sim_.qlcp_from(suffix(rank), pattern_, known + 1).lcp_len;
    }

    // Given lcp = LCP(St_rank, pattern) < |pattern|, whether St_rank sorts
    // before the pattern. An exhausted suffix is a proper prefix, hence smaller.
    bool suffix_below(std::size_t rank, std::size_t lcp) {
        const std::string_view st = suffix(rank);
        if (lcp >= m()) {
            return false;
        }
        if (lcp >= st.size()) {
            sim_.ledger().charge_classical(1);
            return true;
        }
        sim_.ledger().charge_classical(2);
        return static_cast<unsigned char>(st[lcp]) < static_cast<unsigned char>(pattern_[lcp]);
    }

    void record(std::size_t llcp, std::size_t rlcp, bool iteration) {
        if (trace_ == nullptr) {
            return;
        }
        if (iteration) {
            trace_->iterations++;
        }
        trace_->llcp.push_back(llcp);
        trace_->rlcp.push_back(rlcp);
    }

    std::size_t lcp_suf(std::size_t i, std::size_t j) const { return qsm::lcp_suf(index_, i, j); }

   private:
    const TextIndex &index_;
    std::string_view pattern_;
    QuerySimulator &sim_;
    BorderSearchTrace *trace_;
};

}  // namespace

// Loop invariant: St_le sorts strictly before the pattern without carrying
// it, St_ri carries the pattern or sorts after it, and llcp / rlcp are their
// LCPs with the pattern.
BorderResult left_border_search(const TextIndex &index, std::string_view pattern, QuerySimulator &sim,
                                BorderSearchTrace *trace) {
    BorderSearch s(index, pattern, sim, trace);
    const std::size_t n = s.n();
    const std::size_t m = s.m();

    std::size_t llcp = s.lcp_with_pattern(1, 0);
    std::size_t rlcp = s.lcp_with_pattern(n, 0);
    s.record(llcp, rlcp, false);
    if (llcp >= m) {
        return BorderResult::found(1);
    }
    if (!s.suffix_below(1, llcp)) {
        return BorderResult::absent();
    }
    if (rlcp < m && s.suffix_below(n, rlcp)) {
        return BorderResult::absent();
    }

    std::size_t le = 1;
    std::size_t ri = n;
    // Full match or St_mid after the pattern: the border is at or before mid.
    auto resolve = [&](std::size_t mid, std::size_t mlcp) {
        if (mlcp >= m || !s.suffix_below(mid, mlcp)) {
            ri = mid;
            rlcp = mlcp;
        } else {
            le = mid;
            llcp = mlcp;
        }
    };
    while (ri - le > 1) {
        const std::size_t mid = (le + ri) / 2;
        if (llcp >= rlcp) {
            const std::size_t shared = s.lcp_suf(le, mid);
            if (shared > llcp) {
                le = mid;
            } else if (shared == llcp) {
                resolve(mid, s.lcp_with_pattern(mid, llcp));
            } else {
                ri = mid;
                rlcp = shared;
            }
        } else {
            const std::size_t shared = s.lcp_suf(mid, ri);
            if (shared > rlcp) {
                ri = mid;
            } else if (shared == rlcp) {
                resolve(mid, s.lcp_with_pattern(mid, rlcp));
            } else {
                le = mid;
                llcp = shared;
            }
        }
        s.record(llcp, rlcp, true);
    }
    // rlcp is the exact LCP of St_ri with the pattern on every path above.
    return rlcp >= m ? BorderResult::found(ri) : BorderResult::absent();
}

// Loop invariant: St_le carries the pattern or sorts before it, St_ri sorts
// strictly after the pattern without carrying it.
BorderResult right_border_search(const TextIndex &index, std::string_view pattern, QuerySimulator &sim,
                                 BorderSearchTrace *trace) {
    BorderSearch s(index, pattern, sim, trace);
    const std::size_t n = s.n();
    const std::size_t m = s.m();

    std::size_t llcp = s.lcp_with_pattern(1, 0);
    std::size_t rlcp = s.lcp_with_pattern(n, 0);
    s.record(llcp, rlcp, false);
    if (rlcp >= m) {
        return BorderResult::found(n);
    }
    if (s.suffix_below(n, rlcp)) {
        return BorderResult::absent();
    }
    if (llcp < m && !s.suffix_below(1, llcp)) {
        return BorderResult::absent();
    }

    std::size_t le = 1;
    std::size_t ri = n;
    // Full match or St_mid before the pattern: the border is at or after mid.
    auto resolve = [&](std::size_t mid, std::size_t mlcp) {
        if (mlcp >= m || s.suffix_below(mid, mlcp)) {
            le = mid;
            llcp = mlcp;
        } else {
            ri = mid;
            rlcp = mlcp;
        }
    };
    while (ri - le > 1) {
        const std::size_t mid = (le + ri) / 2;
        if (llcp >= rlcp) {
            const std::size_t shared = s.lcp_suf(le, mid);
            if (shared > llcp) {
                le = mid;
            } else if (shared == llcp) {
                resolve(mid, s.lcp_with_pattern(mid, llcp));
            } else {
                ri = mid;
                rlcp = shared;
            }
        } else {
            const std::size_t shared = s.lcp_suf(mid, ri);
            if (shared > rlcp) {
                ri = mid;
            } else if (shared == rlcp) {
                resolve(mid, s.lcp_with_pattern(mid, rlcp));
            } else {
                le = mid;
                llcp = shared;
            }
        }
        s.record(llcp, rlcp, true);
    }
    return llcp >= m ? BorderResult::found(le) : BorderResult::absent();
}

std::vector<std::size_t> expand_occurrences(const TextIndex &index, std::size_t left, std::size_t right) {
    if (left > right) {
        throw std::invalid_argument("expand_occurrences: left rank exceeds right rank");
    }
    if (left < 1 || right > index.size()) {
        throw std::invalid_argument("expand_occurrences: rank out of range");
    }
    std::vector<std::size_t> positions;
    positions.reserve(right - left + 1);
    for (std::size_t r = left; r <= right; r++) {
        positions.push_back(index.suffix_array().position(r));
    }
    std::sort(positions.begin(), positions.end());
    return positions;
}

namespace {

std::vector<std::size_t> search_pattern(const TextIndex &index, std::string_view pattern,
                                        const CostModelConfig &config, std::uint64_t stream, QueryLedger &ledger) {
    QuerySimulator sim(config, ledger, stream);
    const BorderResult left = left_border_search(index, pattern, sim);
    const BorderResult right = right_border_search(index, pattern, sim);
    // With error injection the two borders can cross; report nothing then.
    if (!left.is_found() || !right.is_found() || *left.rank > *right.rank) {
        return {};
    }
    return expand_occurrences(index, *left.rank, *right.rank);
}

MatchReport collect(std::vector<std::vector<std::size_t>> occurrences, const std::vector<QueryLedger> &ledgers,
                    QueryLedger &ledger) {
    MatchReport report;
    report.occurrences = std::move(occurrences);
    report.pattern_quantum_queries.reserve(ledgers.size());
    for (const QueryLedger &l : ledgers) {
        ledger += l;
        report.pattern_quantum_queries.push_back(l.quantum_queries);
    }
    report.ledger = ledger;
    return report;
}

}  // namespace

MatchReport match_all(const TextIndex &index, const Dictionary &dictionary, const CostModelConfig &config,
                      QueryLedger &ledger) {
    config.validate();
    const std::size_t m = dictionary.size();
    std::vector<std::vector<std::size_t>> occurrences(m);
    std::vector<QueryLedger> ledgers(m);
    for (std::size_t j = 0; j < m; j++) {
        occurrences[j] = search_pattern(index, dictionary[j], config, j, ledgers[j]);
    }
    return collect(std::move(occurrences), ledgers, ledger);
}

MatchReport match_all(std::string text, const Dictionary &dictionary, const CostModelConfig &config,
                      QueryLedger &ledger) {
    const TextIndex index = TextIndex::build(std::move(text), ledger);
    return match_all(index, dictionary, config, ledger);
}

MatchReport match_all_parallel(const TextIndex &index, const Dictionary &dictionary, const CostModelConfig &config,
                               QueryLedger &ledger) {
    config.validate();
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(dictionary.size());
    std::vector<std::vector<std::size_t>> occurrences(m);
    std::vector<QueryLedger> ledgers(m);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t j = 0; j < m; j++) {
        occurrences[j] = search_pattern(index, dictionary[j], config, j, ledgers[j]);
    }
    return collect(std::move(occurrences), ledgers, ledger);
}

}  // namespace qsm
