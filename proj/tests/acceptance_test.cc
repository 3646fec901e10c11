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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "qsm/baseline.h"
#include "qsm/harness.h"
#include "qsm/matcher.h"
#include "qsm/suffix_index.h"

using namespace qsm;

namespace {

// Suite constants, calibrated once against the runs below.
constexpr double kPatternBudgetC = 3.0;     // per-pattern query budget
constexpr double kDictionaryBudgetC = 3.0;  // per-row dictionary budget
constexpr double kLinearReadsC = 2.0;       // Aho-Corasick reads against n + L
constexpr double kSlopeLow = 0.4;
constexpr double kSlopeHigh = 0.6;

constexpr std::size_t kOracleTrials = 1000;
constexpr std::uint64_t kOracleSeed = 2026;

constexpr std::string_view kSweep =
    R"([{"n": 65536, "m": [8, 32, 128], "b": [16, 32, 64, 128, 256], "alphabet_size": 4, "planted": 1, "seeds": 20}])";

int failures = 0;
std::map<int, std::string> lines;  // printed in criterion order

void report(int id, const char *name, bool pass, const std::string &detail, double seconds) {
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.1f s)", seconds);
    lines[id] = std::string(pass ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + " " + name + ": " + detail +
                timing;
    if (!pass) {
        failures++;
    }
}

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::size_t ceil_log2(std::size_t n) { return std::bit_width(n - 1); }

bool nondecreasing(const std::vector<std::size_t> &v) { return std::is_sorted(v.begin(), v.end()); }

struct TrialOutcome {
    bool engines_agree = true;
    std::size_t budget_violations = 0;
    double worst_budget_ratio = 0;
    std::size_t searches = 0;
    std::size_t iteration_violations = 0;
    std::size_t llcp_violations = 0;
    std::size_t rlcp_violations = 0;
};

TrialOutcome run_oracle_trial(const TrialCase &trial) {
    TrialOutcome out;
    const Instance inst = generate_instance(trial.params);
    const Dictionary &dict = inst.dictionary;
    QueryLedger build;
    const TextIndex index = TextIndex::build(inst.text, build);

    QueryLedger serial_ledger, parallel_ledger;
    const MatchReport serial = match_all(index, dict, trial.config, serial_ledger);
    const MatchReport parallel = match_all_parallel(index, dict, trial.config, parallel_ledger);
    const MatchReport ac = ac_match(AcAutomaton::build(dict), inst.text);
    const MatchReport brute = brute_force_match(inst.text, dict);
    out.engines_agree = serial.occurrences == brute.occurrences && ac.occurrences == brute.occurrences &&
                        parallel.occurrences == brute.occurrences;

    const std::size_t n = inst.text.size();
    for (std::size_t j = 0; j < dict.size(); j++) {
        const double budget = kPatternBudgetC * pattern_query_budget(dict[j].size(), n);
        const auto queries = static_cast<double>(serial.pattern_quantum_queries[j]);
        out.worst_budget_ratio = std::max(out.worst_budget_ratio, queries / pattern_query_budget(dict[j].size(), n));
        if (queries > budget) {
            out.budget_violations++;
        }

        QueryLedger ledger;
        QuerySimulator sim(trial.config, ledger, j);
        BorderSearchTrace left, right;
        left_border_search(index, dict[j], sim, &left);
        right_border_search(index, dict[j], sim, &right);
        for (const BorderSearchTrace *t : {&left, &right}) {
            out.searches++;
            if (t->iterations > ceil_log2(n) + 1) {
                out.iteration_violations++;
            }
            if (!nondecreasing(t->llcp)) {
                out.llcp_violations++;
            }
            if (!nondecreasing(t->rlcp)) {
                out.rlcp_violations++;
            }
        }
    }
    return out;
}

// Criteria 1, 3 and 5 share the same instances.
void oracle_criteria() {
    Stopwatch clock;
    VerifyOptions options;
    options.trials = kOracleTrials;
    options.seed = kOracleSeed;
    std::vector<TrialOutcome> outcomes(kOracleTrials);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < kOracleTrials; k++) {
        outcomes[k] = run_oracle_trial(sample_trial(options, k));
    }
    TrialOutcome total;
    std::size_t mismatches = 0;
    for (const TrialOutcome &o : outcomes) {
        mismatches += o.engines_agree ? 0 : 1;
        total.budget_violations += o.budget_violations;
        total.worst_budget_ratio = std::max(total.worst_budget_ratio, o.worst_budget_ratio);
        total.searches += o.searches;
        total.iteration_violations += o.iteration_violations;
        total.llcp_violations += o.llcp_violations;
        total.rlcp_violations += o.rlcp_violations;
    }
    const double seconds = clock.seconds();

    report(1, "oracle equivalence", mismatches == 0,
           "trials=" + std::to_string(kOracleTrials) + " mismatches=" + std::to_string(mismatches), seconds);

    std::ostringstream budget;
    budget << "C=" << kPatternBudgetC << " violations=" << total.budget_violations
           << " worst_ratio=" << total.worst_budget_ratio;
    report(3, "per-pattern query budget", total.budget_violations == 0, budget.str(), seconds);

    std::ostringstream search;
    search << "searches=" << total.searches << " iteration_violations=" << total.iteration_violations
           << " llcp_violations=" << total.llcp_violations << " rlcp_violations=" << total.rlcp_violations;
    report(5, "binary search structure",
           total.iteration_violations == 0 && total.llcp_violations == 0 && total.rlcp_violations == 0, search.str(),
           seconds);
}

std::size_t check_index(const std::string &text) {
    std::size_t errors = 0;
    QueryLedger ledger;
    const TextIndex index = TextIndex::build(text, ledger);
    const std::vector<std::uint32_t> sa = qsm::testing::brute_suffix_array(text);
    if (!std::ranges::equal(index.suffix_array().positions(), sa)) {
        errors++;
    }
    if (!std::ranges::equal(index.lcp().values(), qsm::testing::brute_lcp_array(text, sa))) {
        errors++;
    }
    const std::string_view view(text);
    for (std::size_t i = 1; i <= text.size(); i++) {
        for (std::size_t j = 1; j <= text.size(); j++) {
            if (lcp_suf(index, i, j) != naive_lcp(view.substr(sa[i - 1] - 1), view.substr(sa[j - 1] - 1))) {
                errors++;
            }
        }
    }
    return errors;
}

void index_criterion() {
    Stopwatch clock;
    std::vector<std::string> texts;
    for (std::size_t n = 1; n <= 12; n++) {
        for (std::uint32_t code = 0; code < (1u << n); code++) {
            texts.push_back(qsm::testing::binary_text(n, code));
        }
    }
    const std::size_t exhaustive = texts.size();
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; k++) {
        texts.push_back(qsm::testing::random_text(rng, 1 + rng() % 500, k % 2 ? 4 : 2));
    }
    std::size_t errors = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : errors)
    for (std::size_t k = 0; k < texts.size(); k++) {
        errors += check_index(texts[k]);
    }
    report(2, "index correctness", errors == 0,
           "exhaustive=" + std::to_string(exhaustive) + " random=200 errors=" + std::to_string(errors),
           clock.seconds());
}

// Mean quantum queries per (m, L) cell against m * L on log-log axes.
double sweep_slope(const std::vector<BenchRecord> &rows) {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<double, std::size_t>> cells;
    for (const BenchRecord &r : rows) {
        auto &[sum, count] = cells[{r.m, r.L}];
        sum += static_cast<double>(r.quantum_queries);
        count++;
    }
    std::vector<double> x, y;
    for (const auto &[key, cell] : cells) {
        x.push_back(static_cast<double>(key.first * key.second));
        y.push_back(cell.first / static_cast<double>(cell.second));
    }
    return loglog_slope(x, y);
}

void sweep_criteria() {
    Stopwatch clock;
    const std::vector<InstanceParams> sweep = parse_sweep(kSweep);
    std::ostringstream csv;
    const std::vector<BenchRecord> rows = run_benchmark(sweep, CostModelConfig{}, csv);
    const double bench_seconds = clock.seconds();

    std::size_t budget_violations = 0, read_violations = 0, mismatches = 0;
    double worst = 0;
    for (const BenchRecord &r : rows) {
        const double budget = dictionary_query_budget(r.m, r.L, r.n);
        worst = std::max(worst, static_cast<double>(r.quantum_queries) / budget);
        if (static_cast<double>(r.quantum_queries) > kDictionaryBudgetC * budget) {
            budget_violations++;
        }
        if (static_cast<double>(r.ac_symbol_reads) > kLinearReadsC * static_cast<double>(r.n + r.L)) {
            read_violations++;
        }
        mismatches += r.mismatch ? 1 : 0;
    }
    const double slope = sweep_slope(rows);
    const bool slope_ok = slope >= kSlopeLow && slope <= kSlopeHigh;
    std::ostringstream detail;
    detail << "rows=" << rows.size() << " C'=" << kDictionaryBudgetC << " violations=" << budget_violations
           << " worst_ratio=" << worst << " mismatches=" << mismatches << " slope=" << slope << " in ["
           << kSlopeLow << ", " << kSlopeHigh << "]";
    report(4, "dictionary budget and scaling", budget_violations == 0 && mismatches == 0 && slope_ok, detail.str(),
           bench_seconds);

    Stopwatch nodes_clock;
    std::size_t node_violations = 0;
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; k++) {
        std::vector<std::string> patterns(1 + rng() % 50);
        for (std::string &p : patterns) {
            p = qsm::testing::random_text(rng, 1 + rng() % 20, k % 2 ? 4 : 2);
        }
        const Dictionary dict(std::move(patterns));
        if (AcAutomaton::build(dict).node_count() > dict.total_length() + 1) {
            node_violations++;
        }
    }
    std::ostringstream linear;
    linear << "C''=" << kLinearReadsC << " read_violations=" << read_violations << "/" << rows.size()
           << " node_violations=" << node_violations << "/1000";
    report(7, "baseline linearity", read_violations == 0 && node_violations == 0, linear.str(),
           bench_seconds + nodes_clock.seconds());

    // Informational: the same sweep under the stochastic cost model.
    Stopwatch stochastic_clock;
    CostModelConfig stochastic;
    stochastic.mode = CostMode::kStochastic;
    stochastic.rng_seed = 1;
    std::ostringstream ignored;
    const double stochastic_slope = sweep_slope(run_benchmark(sweep, stochastic, ignored));
    char info[96];
    std::snprintf(info, sizeof info, "INFO stochastic sweep slope=%.4f (%.1f s)", stochastic_slope,
                  stochastic_clock.seconds());
    lines[8] = info;
}

void error_model_criterion() {
    Stopwatch clock;
    VerifyOptions options;
    options.trials = 500;
    options.seed = kOracleSeed;
    options.config.error = ErrorStrategy::overshoot(0.1);
    options.dump_dir = std::filesystem::temp_directory_path() / "qsm_acceptance_dumps";
    std::filesystem::remove_all(options.dump_dir);
    const VerifyReport result = verify_equivalence(options);
    std::size_t replay_failures = 0;
    for (const auto &dir : result.dumps) {
        const ReplayResult replay = replay_dump(dir);
        if (!(replay.instance_reproduced && replay.output_reproduced && replay.mismatch)) {
            replay_failures++;
        }
    }
    const bool pass = result.mismatches > 0 && result.dumps.size() == result.mismatches && replay_failures == 0;
    report(6, "error model", pass,
           "trials=500 p=0.1 mismatches=" + std::to_string(result.mismatches) +
               " dumps=" + std::to_string(result.dumps.size()) + " replay_failures=" + std::to_string(replay_failures),
           clock.seconds());
    std::filesystem::remove_all(options.dump_dir);
}

}  // namespace

int main() {
    try {
        oracle_criteria();
        index_criterion();
        sweep_criteria();
        error_model_criterion();
    } catch (const std::exception &e) {
        std::printf("FAIL acceptance aborted: %s\n", e.what());
        return 1;
    }
    for (const auto &[id, line] : lines) {
        std::printf("%s\n", line.c_str());
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
