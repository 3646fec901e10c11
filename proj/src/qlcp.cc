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

#include "qsm/qlcp.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qsm {

void CostModelConfig::validate() const {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw std::invalid_argument("cost model: alpha must be a positive finite number");
    }
    if (error.kind == ErrorStrategy::Kind::kOvershoot &&
        !(error.probability >= 0.0 && error.probability <= 1.0)) {
        throw std::invalid_argument("cost model: overshoot probability must lie in [0, 1]");
    }
}

std::string to_string(CostMode mode) {
    return mode == CostMode::kDeterministic ? "deterministic" : "stochastic";
}

CostMode parse_cost_mode(std::string_view name) {
    if (name == "deterministic") {
        return CostMode::kDeterministic;
    }
    if (name == "stochastic") {
        return CostMode::kStochastic;
    }
    throw std::invalid_argument("unknown cost mode '" + std::string(name) + "'");
}

std::uint64_t deterministic_charge(double alpha, std::size_t f) {
    if (f == 0) {
        return 0;
    }
    return static_cast<std::uint64_t>(std::ceil(alpha * std::sqrt(static_cast<double>(f))));
}

QuerySimulator::QuerySimulator(const CostModelConfig &config, QueryLedger &ledger, std::uint64_t stream)
    : config_(config), rng_(derive_seed(config.rng_seed, stream)), ledger_(&ledger) {
    config_.validate();
}

bool QuerySimulator::draw_overshoot() {
    if (config_.error.kind != ErrorStrategy::Kind::kOvershoot) {
        return false;
    }
    return bernoulli(rng_, config_.error.probability);
}

// Stochastic mode probes windows of size 1, 2, 4, ..., 2^K with 2^K >= f and
// spends a uniformly random fraction of beta * sqrt(2^k) iterations on
// window k. With beta = alpha * (sqrt(2) - 1) / 2 the geometric sum stays
// below alpha * sqrt(f), so the charge is at most
// ceil(alpha * sqrt(f)) + kStochasticSlack.
std::uint64_t QuerySimulator::charge(std::size_t f) {
    if (config_.mode == CostMode::kDeterministic) {
        return deterministic_charge(config_.alpha, f);
    }
    if (f == 0) {
        return 0;
    }
    const double beta = config_.alpha * (std::sqrt(2.0) - 1.0) / 2.0;
    const int stages = std::bit_width(f - 1);  // ceil(log2 f)
    double total = 0.0;
    for (int k = 0; k <= stages; k++) {
        total += uniform_unit(rng_) * beta * std::sqrt(std::ldexp(1.0, k));
    }
    return static_cast<std::uint64_t>(std::ceil(total)) + kStochasticSlack;
}

LcpResult QuerySimulator::qlcp_from(std::string_view u, std::string_view v, std::size_t start) {
    const std::size_t common = std::min(u.size(), v.size());
    if (start < 1 || start > common + 1) {
        throw std::invalid_argument("qlcp_from: start position " + std::to_string(start) + " outside 1.." +
                                    std::to_string(common + 1));
    }
    const std::size_t offset = start - 1;
    const SearchOutcome mismatch =
        first_one_search(common - offset, [&](std::size_t i) { return u[offset + i - 1] != v[offset + i - 1]; });
    const std::size_t lcp = mismatch.index ? offset + *mismatch.index - 1 : common;
    return {lcp, mismatch.charged};
}

}  // namespace qsm
