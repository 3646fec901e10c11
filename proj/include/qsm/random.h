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

#ifndef QSM_RANDOM_H
#define QSM_RANDOM_H

#include <cstdint>
#include <random>

namespace qsm {

// mt19937_64's output sequence is fixed by the standard; the distributions in
// <random> are not, so the helpers below are used wherever results must
// replay bit-for-bit from a seed.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the `stream`-th independent generator derived from `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 1));
}

/// Uniform integer in [0, bound). `bound` must be positive.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform integer in [lo, hi].
inline std::uint64_t uniform_between(Rng &rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Always consumes exactly one draw, so the stream position does not depend on p.
inline bool bernoulli(Rng &rng, double p) {
    return uniform_unit(rng) < p;
}

}  // namespace qsm

#endif  // QSM_RANDOM_H
