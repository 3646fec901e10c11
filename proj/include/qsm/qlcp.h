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

#ifndef QSM_QLCP_H
#define QSM_QLCP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qsm/query_ledger.h"
#include "qsm/random.h"

namespace qsm {

enum class CostMode {
    // charge = ceil(alpha * sqrt(f))
    kDeterministic,
    // Exponentially growing probe windows with random per-window iteration
    // counts; see QuerySimulator::charge.
    kStochastic,
};

/// How the simulated first-one search fails.
struct ErrorStrategy {
    enum class Kind { kNone, kOvershoot };
    Kind kind = Kind::kNone;
    // Probability that a call returns the second-smallest hit instead of the smallest.
    double probability = 0.0;

    static ErrorStrategy none() { return {}; }
    static ErrorStrategy overshoot(double p) { return {Kind::kOvershoot, p}; }
    bool enabled() const { return kind != Kind::kNone && probability > 0.0; }
};

/// Per-call failure budget of the bounded-error first-one search. Larger
/// overshoot probabilities are accepted for stress testing.
inline constexpr double kNominalErrorBudget = 0.1;

/// Extra queries the stochastic mode may charge above ceil(alpha * sqrt(f)):
/// one final check of the measured candidate.
inline constexpr std::uint64_t kStochasticSlack = 1;

struct CostModelConfig {
    double alpha = 1.0;
    CostMode mode = CostMode::kDeterministic;
    ErrorStrategy error;
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument unless alpha is finite and positive and
    /// the overshoot probability lies in [0, 1].
    void validate() const;
};

std::string to_string(CostMode mode);
/// Accepts "deterministic" and "stochastic"; throws std::invalid_argument otherwise.
CostMode parse_cost_mode(std::string_view name);

struct LcpResult {
    std::size_t lcp_len = 0;
    std::uint64_t charged = 0;
    friend bool operator==(const LcpResult &, const LcpResult &) = default;
};

struct SearchOutcome {
    std::optional<std::size_t> index;  // 1-indexed
    std::uint64_t charged = 0;
};

/// ceil(alpha * sqrt(f)); zero for an empty search range.
std::uint64_t deterministic_charge(double alpha, std::size_t f);

/// Classical stand-in for the quantum first-one search and the LCP routine
/// built on it.
///
/// Answers are computed exactly by scanning; the cost model decides what the
/// call is charged, and the error strategy decides whether the answer is
/// corrupted. Each simulator owns its generator and writes to one ledger, so
/// one instance must not be shared between threads.
class QuerySimulator {
   public:
    /// `stream` selects an independent generator derived from config.rng_seed.
    QuerySimulator(const CostModelConfig &config, QueryLedger &ledger, std::uint64_t stream = 0);

    /// Smallest i in 1..domain with predicate(i), or nullopt. The charge is
    /// based on the returned index, or on `domain` when nothing is returned.
    /// Under overshoot the second-smallest hit is returned instead (nullopt
    /// if the hit is unique).
    template <class Predicate>
    SearchOutcome first_one_search(std::size_t domain, Predicate &&predicate);

    /// LCP of u and v.
    LcpResult qlcp(std::string_view u, std::string_view v) { return qlcp_from(u, v, 1); }

    /// LCP of u and v given that the first start - 1 symbols already agree:
    /// start - 1 + LCP(u[start..], v[start..]). The search range covers
    /// positions start..min(|u|, |v|), so the charge depends on d - start
    /// rather than on d. Throws std::invalid_argument unless
    /// 1 <= start <= min(|u|, |v|) + 1.
    LcpResult qlcp_from(std::string_view u, std::string_view v, std::size_t start);

    const CostModelConfig &config() const { return config_; }
    QueryLedger &ledger() { return *ledger_; }

   private:
    bool draw_overshoot();
    std::uint64_t charge(std::size_t f);

    CostModelConfig config_;
    Rng rng_;
    QueryLedger *ledger_;
};

template <class Predicate>
SearchOutcome QuerySimulator::first_one_search(std::size_t domain, Predicate &&predicate) {
    const bool overshoot = draw_overshoot();
    std::optional<std::size_t> hit;
    for (std::size_t i = 1; i <= domain; i++) {
        if (predicate(i)) {
            hit = i;
            break;
        }
    }
    if (hit && overshoot) {
        std::optional<std::size_t> second;
        for (std::size_t i = *hit + 1; i <= domain; i++) {
            if (predicate(i)) {
                second = i;
                break;
            }
        }
        hit = second;
    }
    const std::uint64_t charged = charge(hit.value_or(domain));
    ledger_->charge_quantum(charged);
    return {hit, charged};
}

}  // namespace qsm

#endif  // QSM_QLCP_H
