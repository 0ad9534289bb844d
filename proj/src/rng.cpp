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

#include "ptyq/rng.hpp"

#include <cmath>
#include <numbers>

namespace ptyq {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller. u1 is kept away from 0 so the log is finite.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::poisson(double mean) {
    if (mean <= 0.0) {
        return 0;
    }
    if (mean < kPoissonNormalCutoff) {
        // Knuth product method: count uniforms until the product drops
        // below e^-mean. Cost grows with the mean, hence the cutoff.
        const double threshold = std::exp(-mean);
        std::uint64_t count = 0;
        double product = uniform();
        while (product > threshold) {
            ++count;
            product *= uniform();
        }
        return count;
    }
    // Gaussian approximation, rounded and clamped at zero. At the cutoff
    // the relative skew correction is below 1/sqrt(64) of a standard
    // deviation, negligible against shot-noise scales used here.
    const double sample = mean + std::sqrt(mean) * gaussian();
    if (sample < 0.5) {
        return 0;
    }
    return static_cast<std::uint64_t>(std::llround(sample));
}

Rng cell_rng(std::uint64_t seed, std::uint64_t j, std::uint64_t n) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ (0x6A09E667F3BCC909ULL + j));
    h = mix64(h ^ (0xBB67AE8584CAA73BULL + n));
    return Rng{h};
}

} // namespace ptyq
