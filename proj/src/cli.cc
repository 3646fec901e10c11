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

#include "qsm/cli.h"

#include <omp.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qsm/baseline.h"
#include "qsm/harness.h"
#include "qsm/io.h"

namespace qsm {

namespace {

struct CostFlags {
    double alpha = 1.0;
    std::string mode = "deterministic";
    double error_p = 0.0;
    std::uint64_t seed = 0;

    void add_to(CLI::App &app) {
        app.add_option("--alpha", alpha, "Multiplier of the sqrt charge")->capture_default_str();
        app.add_option("--cost-mode", mode, "Oracle charge model")
            ->check(CLI::IsMember({"deterministic", "stochastic"}))
            ->capture_default_str();
        app.add_option("--error-p", error_p, "Overshoot probability per first-one search")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        app.add_option("--seed", seed, "Generator seed")->capture_default_str();
    }

    CostModelConfig config(std::ostream &err) const {
        CostModelConfig c;
        c.alpha = alpha;
        c.mode = parse_cost_mode(mode);
        c.error = error_p > 0 ? ErrorStrategy::overshoot(error_p) : ErrorStrategy::none();
        c.rng_seed = seed;
        c.validate();
        if (error_p > kNominalErrorBudget) {
            err << "warning: --error-p " << error_p << " exceeds the nominal per-call error bound "
                << kNominalErrorBudget << "\n";
        }
        return c;
    }
};

int run_match(const std::string &text_path, const std::string &dict_path, const std::string &engine,
              const std::string &format, const CostModelConfig &config, std::ostream &out) {
    std::string text = read_file(text_path);
    const Dictionary dictionary = parse_dictionary(read_file(dict_path));
    if (text.empty()) {
        throw std::invalid_argument("text file '" + text_path + "' is empty");
    }
    MatchReport report;
    if (engine == "qsa") {
        QueryLedger ledger;
        const TextIndex index = TextIndex::build(std::move(text), ledger);
        report = match_all_parallel(index, dictionary, config, ledger);
    } else if (engine == "ac") {
        report = ac_match(AcAutomaton::build(dictionary), text);
    } else {
        report = brute_force_match(text, dictionary);
    }
    out << (format == "json" ? format_json(report) : format_tsv(report));
    return 0;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multiple string matching over a suffix array with a simulated quantum LCP oracle"};
    app.name("qsm");
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");

    CLI::App *match = app.add_subcommand("match", "Report every occurrence of every dictionary pattern");
    std::string text_path, dict_path, engine = "qsa", format = "tsv";
    CostFlags match_cost;
    match->add_option("--text", text_path, "Text file (raw bytes)")->required();
    match->add_option("--dict", dict_path, "Dictionary file, one pattern per line")->required();
    match->add_option("--engine", engine, "Matcher")->check(CLI::IsMember({"qsa", "ac", "brute"}))->capture_default_str();
    match->add_option("--output", format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    match_cost.add_to(*match);

    CLI::App *verify = app.add_subcommand("verify", "Check qsa and Aho-Corasick against brute force");
    VerifyOptions vopts;
    std::string dump_dir;
    bool allow_mismatch = false;
    CostFlags verify_cost;
    verify->add_option("--trials", vopts.trials, "Number of random instances")->required();
    verify->add_option("--max-n", vopts.max_n, "Largest text length")->capture_default_str();
    verify->add_option("--max-m", vopts.max_m, "Largest pattern count")->capture_default_str();
    verify->add_option("--max-b", vopts.max_b, "Longest pattern")->capture_default_str();
    verify->add_option("--alphabets", vopts.alphabets, "Alphabet sizes to draw from")->delimiter(',');
    verify->add_option("--dump-dir", dump_dir, "Write reproduction directories for mismatches here");
    verify->add_flag("--allow-mismatch", allow_mismatch, "Exit 0 even when mismatches occur");
    verify_cost.add_to(*verify);

    CLI::App *bench = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
    std::string sweep_path, csv_path;
    CostFlags bench_cost;
    bench->add_option("--sweep", sweep_path, "Sweep description (JSON)")->required();
    bench->add_option("--out", csv_path, "CSV output file ('-' for stdout)")->required();
    bench_cost.add_to(*bench);

    CLI::App *replay = app.add_subcommand("replay", "Re-run a verify reproduction dump");
    std::string replay_dir;
    replay->add_option("--dump", replay_dir, "Dump directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App *sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
    }
    if (threads > 0) {
        omp_set_num_threads(threads);
    }

    try {
        if (match->parsed()) {
            return run_match(text_path, dict_path, engine, format, match_cost.config(err), out);
        }
        if (verify->parsed()) {
            vopts.config = verify_cost.config(err);
            vopts.seed = verify_cost.seed;
            vopts.dump_dir = dump_dir;
            const VerifyReport report = verify_equivalence(vopts);
            out << "trials=" << report.trials << " mismatches=" << report.mismatches << "\n";
            for (const auto &dir : report.dumps) {
                out << "dump " << dir.string() << "\n";
            }
            return (report.mismatches == 0 || allow_mismatch) ? 0 : 1;
        }
        if (bench->parsed()) {
            const CostModelConfig config = bench_cost.config(err);
            const std::vector<InstanceParams> sweep = parse_sweep(read_file(sweep_path));
            if (csv_path == "-") {
                run_benchmark(sweep, config, out);
                return 0;
            }
            std::ofstream csv(csv_path);
            if (!csv) {
                throw std::runtime_error("cannot open '" + csv_path + "' for writing");
            }
            const auto rows = run_benchmark(sweep, config, csv);
            out << "rows=" << rows.size() << " -> " << csv_path << "\n";
            return 0;
        }
        if (replay->parsed()) {
            const ReplayResult r = replay_dump(replay_dir);
            out << "instance_reproduced=" << r.instance_reproduced << " output_reproduced=" << r.output_reproduced
                << " mismatch=" << r.mismatch << "\n";
            return (r.instance_reproduced && r.output_reproduced) ? 0 : 1;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace qsm
