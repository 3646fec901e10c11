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

#include <stdexcept>

#include "json.hpp"
#include "qsm/baseline.h"
#include "qsm/harness.h"
#include "qsm/io.h"

namespace qsm {

namespace {

nlohmann::json trial_to_json(const TrialCase &trial) {
    const InstanceParams &p = trial.params;
    const CostModelConfig &c = trial.config;
    const double error_p = c.error.kind == ErrorStrategy::Kind::kOvershoot ? c.error.probability : 0.0;
    return {
        {"n", p.n},
        {"m", p.m},
        {"b", p.b},
        {"shape", to_string(p.shape)},
        {"alphabet_size", p.alphabet_size},
        {"planted", p.planted},
        {"seed", p.seed},
        {"cost", {{"alpha", c.alpha}, {"mode", to_string(c.mode)}, {"error_p", error_p}, {"rng_seed", c.rng_seed}}},
    };
}

TrialCase trial_from_json(const nlohmann::json &j) {
    TrialCase t;
    t.params.n = j.at("n").get<std::size_t>();
    t.params.m = j.at("m").get<std::size_t>();
    t.params.b = j.at("b").get<std::size_t>();
    t.params.shape = parse_length_shape(j.at("shape").get<std::string>());
    t.params.alphabet_size = j.at("alphabet_size").get<unsigned>();
    t.params.planted = j.at("planted").get<std::size_t>();
    t.params.seed = j.at("seed").get<std::uint64_t>();
    const auto &c = j.at("cost");
    t.config.alpha = c.at("alpha").get<double>();
    t.config.mode = parse_cost_mode(c.at("mode").get<std::string>());
    const double error_p = c.at("error_p").get<double>();
    t.config.error = error_p > 0 ? ErrorStrategy::overshoot(error_p) : ErrorStrategy::none();
    t.config.rng_seed = c.at("rng_seed").get<std::uint64_t>();
    return t;
}

struct TrialOutcome {
    bool mismatch = false;
    std::string qsa_tsv;
    std::string expected_tsv;
};

TrialOutcome run_trial(const Instance &instance, const CostModelConfig &config) {
    QueryLedger ledger;
    const MatchReport qsa = match_all(instance.text, instance.dictionary, config, ledger);
    const MatchReport ac = ac_match(AcAutomaton::build(instance.dictionary), instance.text);
    const MatchReport brute = brute_force_match(instance.text, instance.dictionary);
    TrialOutcome out;
    out.mismatch = qsa.occurrences != brute.occurrences || ac.occurrences != brute.occurrences;
    if (out.mismatch) {
        out.qsa_tsv = format_tsv(qsa);
        out.expected_tsv = format_tsv(brute);
    }
    return out;
}

}  // namespace

VerifyReport verify_equivalence(const VerifyOptions &options) {
    options.config.validate();
    const auto trials = static_cast<std::ptrdiff_t>(options.trials);
    std::vector<TrialCase> cases(options.trials);
    for (std::ptrdiff_t k = 0; k < trials; k++) {
        cases[k] = sample_trial(options, k);
    }
    std::vector<TrialOutcome> outcomes(options.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < trials; k++) {
        outcomes[k] = run_trial(generate_instance(cases[k].params), cases[k].config);
    }

    VerifyReport report;
    report.trials = options.trials;
    for (std::size_t k = 0; k < options.trials; k++) {
        if (!outcomes[k].mismatch) {
            continue;
        }
        report.mismatches++;
        report.failing_trials.push_back(k);
        if (options.dump_dir.empty()) {
            continue;
        }
        const std::filesystem::path dir = options.dump_dir / ("trial_" + std::to_string(k));
        std::filesystem::create_directories(dir);
        const Instance instance = generate_instance(cases[k].params);
        write_file(dir / "text.txt", instance.text);
        write_file(dir / "dict.txt", format_dictionary(instance.dictionary));
        write_file(dir / "params.json", trial_to_json(cases[k]).dump(2) + "\n");
        write_file(dir / "qsa.tsv", outcomes[k].qsa_tsv);
        write_file(dir / "expected.tsv", outcomes[k].expected_tsv);
        report.dumps.push_back(dir);
    }
    return report;
}

ReplayResult replay_dump(const std::filesystem::path &dir) {
    const TrialCase trial = trial_from_json(nlohmann::json::parse(read_file(dir / "params.json")));
    const Instance instance = generate_instance(trial.params);

    ReplayResult result;
    result.instance_reproduced = instance.text == read_file(dir / "text.txt") &&
                                 format_dictionary(instance.dictionary) == read_file(dir / "dict.txt");
    QueryLedger ledger;
    const std::string qsa = format_tsv(match_all(instance.text, instance.dictionary, trial.config, ledger));
    result.output_reproduced = qsa == read_file(dir / "qsa.tsv");
    result.mismatch = qsa != format_tsv(brute_force_match(instance.text, instance.dictionary));
    return result;
}

}  // namespace qsm
