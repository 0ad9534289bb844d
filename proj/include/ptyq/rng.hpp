// Copyright 2026 The ptyq developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Deterministic random number generation.
 *
 * Every stochastic element of the library (initial estimates, shot noise)
 * draws from this engine. The uniform, Gaussian, and Poisson samplers are
 * spelled out here rather than taken from <random>'s distribution classes:
 * std::mt19937_64's output sequence is pinned by the standard, but the
 * distributions on top of it are implementation-defined, which would break
 * the bit-exact replay contract of recorded seeds.
 */

#pragma once

#include <cstdint>
#include <random>

namespace ptyq {

/// Avalanche mixer (splitmix64 finalizer); used to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seedable generator with portable uniform/Gaussian/Poisson sampling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_{seed} {}

    /// Uniform double in [0, 1), 53 significant bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double gaussian();

    /// Poisson sample: Knuth product method for small means, rounded
    /// Gaussian above kPoissonNormalCutoff.
    std::uint64_t poisson(double mean);

    static constexpr double kPoissonNormalCutoff = 64.0;

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Independent per-cell stream for measurement cell (j, n). Parallel and
/// serial dataset generation agree bit-exactly because each cell's draws
/// depend only on (seed, j, n).
Rng cell_rng(std::uint64_t seed, std::uint64_t j, std::uint64_t n);

} // namespace ptyq
