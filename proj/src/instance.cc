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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qsm/harness.h"
#include "qsm/random.h"

namespace qsm {

std::string to_string(LengthShape shape) { return shape == LengthShape::kFixed ? "fixed" : "uniform"; }

LengthShape parse_length_shape(std::string_view name) {
    if (name == "fixed") {
        return LengthShape::kFixed;
    }
    if (name == "uniform") {
        return LengthShape::kUniform;
    }
    throw std::invalid_argument("unknown length shape '" + std::string(name) + "'");
}

void InstanceParams::validate() const {
    if (b < 1 || n < b) {
        throw std::invalid_argument("instance: need n >= b >= 1 (n=" + std::to_string(n) + ", b=" + std::to_string(b) +
                                    ")");
    }
    if (m < 1) {
        throw std::invalid_argument("instance: need m >= 1");
    }
    if (alphabet_size < 2 || alphabet_size > 26) {
        throw std::invalid_argument("instance: alphabet size must lie in 2..26");
    }
}

namespace {

std::string random_string(Rng &rng, std::size_t length, unsigned alphabet) {
    std::string s(length, '\0');
    for (char &c : s) {
        c = alphabet_symbol(static_cast<unsigned>(uniform_below(rng, alphabet)));
    }
    return s;
}

}  // namespace

Instance generate_instance(const InstanceParams &params) {
    params.validate();
    Rng rng(params.seed);

    std::vector<std::size_t> lengths(params.m, params.b);
    if (params.shape == LengthShape::kUniform) {
        for (auto &len : lengths) {
            len = uniform_between(rng, 1, params.b);
        }
    }
    std::string text = random_string(rng, params.n, params.alphabet_size);
    std::vector<std::string> patterns;
    patterns.reserve(params.m);
    for (std::size_t len : lengths) {
        patterns.push_back(random_string(rng, len, params.alphabet_size));
    }

    if (params.planted > 0) {
        const std::size_t total_length = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
        const std::size_t covered = params.planted * total_length;
        if (covered > params.n) {
            throw std::invalid_argument("instance: cannot plant " + std::to_string(params.planted) +
                                        " copies of a dictionary of total length " + std::to_string(total_length) +
                                        " into a text of length " + std::to_string(params.n));
        }
        // Random order of the copies, separated by gaps whose sizes come from
        // sorted uniform cut points in [0, free].
        std::vector<std::size_t> copies;
        copies.reserve(params.planted * params.m);
        for (std::size_t j = 0; j < params.m; j++) {
            copies.insert(copies.end(), params.planted, j);
        }
        for (std::size_t i = copies.size(); i > 1; i--) {
            std::swap(copies[i - 1], copies[uniform_below(rng, i)]);
        }
        const std::size_t free = params.n - covered;
        std::vector<std::size_t> cuts(copies.size());
        for (auto &cut : cuts) {
            cut = uniform_between(rng, 0, free);
        }
        std::sort(cuts.begin(), cuts.end());
        std::size_t pos = 0;
        std::size_t prev_cut = 0;
        for (std::size_t k = 0; k < copies.size(); k++) {
            pos += cuts[k] - prev_cut;
            prev_cut = cuts[k];
            const std::string &p = patterns[copies[k]];
            text.replace(pos, p.size(), p);
            pos += p.size();
        }
    }
    return {std::move(text), Dictionary(std::move(patterns))};
}

TrialCase sample_trial(const VerifyOptions &options, std::size_t trial) {
    if (options.alphabets.empty()) {
        throw std::invalid_argument("verify: no alphabet sizes given");
    }
    if (options.max_n < 1 || options.max_m < 1 || options.max_b < 1) {
        throw std::invalid_argument("verify: max-n, max-m and max-b must be positive");
    }
    Rng rng(derive_seed(options.seed, trial));
    InstanceParams p;
    p.alphabet_size = options.alphabets[uniform_below(rng, options.alphabets.size())];
    p.n = uniform_between(rng, 1, options.max_n);
    p.m = uniform_between(rng, 1, options.max_m);
    p.b = uniform_between(rng, 1, std::min(options.max_b, p.n));
    p.shape = bernoulli(rng, 0.5) ? LengthShape::kFixed : LengthShape::kUniform;
    if (bernoulli(rng, 0.5)) {
        // Feasible for every length draw since L <= m * b.
        std::size_t k = uniform_between(rng, 1, 3);
        while (k > 0 && k * p.m * p.b > p.n) {
            k--;
        }
        p.planted = k;
    }
    p.seed = rng();

    CostModelConfig config = options.config;
    config.rng_seed = derive_seed(options.config.rng_seed, trial);
    return {p, config};
}

double pattern_query_budget(std::size_t pattern_length, std::size_t n) {
    const double lg = std::max(1.0, std::log2(static_cast<double>(n)));
    return std::sqrt(static_cast<double>(pattern_length) * lg) + lg;
}

double dictionary_query_budget(std::size_t m, std::size_t total_length, std::size_t n) {
    const double lg = std::max(1.0, std::log2(static_cast<double>(n)));
    return std::sqrt(static_cast<double>(m) * static_cast<double>(total_length) * lg) + static_cast<double>(m) * lg;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("loglog_slope: need at least two paired points");
    }
    const std::size_t k = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < k; i++) {
        if (x[i] <= 0 || y[i] <= 0) {
            throw std::invalid_argument("loglog_slope: values must be positive");
        }
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < k; i++) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0) {
        throw std::invalid_argument("loglog_slope: x values are all equal");
    }
    return sxy / sxx;
}

}  // namespace qsm
