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

#include "ptyq/catalog.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ptyq/pie.hpp"
#include "ptyq/rng.hpp"

namespace ptyq {

namespace {

CVec random_phases_applied(std::vector<double> magnitudes,
                           std::uint64_t phase_seed) {
    Rng rng{mix64(phase_seed)};
    CVec raw(magnitudes.size());
    for (std::size_t n = 0; n < magnitudes.size(); ++n) {
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        raw[n] = magnitudes[n] * Complex{std::cos(phase), std::sin(phase)};
    }
    return raw;
}

QuditState fixed_phase_state(const std::vector<double> &phases) {
    CVec raw(phases.size());
    for (std::size_t n = 0; n < phases.size(); ++n) {
        raw[n] = Complex{std::cos(phases[n]), std::sin(phases[n])};
    }
    return normalize(raw);
}

} // namespace

QuditState random_reference_state(std::size_t dim, std::uint64_t seed) {
    return normalize(initial_estimate(dim, seed));
}

QuditState uniform_phase_state(std::size_t dim, std::uint64_t phase_seed) {
    return normalize(
        random_phases_applied(std::vector<double>(dim, 1.0), phase_seed));
}

QuditState ramp_phase_state(std::size_t dim, std::uint64_t phase_seed) {
    std::vector<double> magnitudes(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        magnitudes[n] = static_cast<double>(n + 1);
    }
    return normalize(random_phases_applied(std::move(magnitudes), phase_seed));
}

QuditState reference_state(std::size_t dim, const std::string &label) {
    if (dim == 5) {
        if (label == "a") {
            return random_reference_state(5, kStateSeedD5A);
        }
        if (label == "b") {
            return uniform_phase_state(5, kStateSeedD5B);
        }
        if (label == "c") {
            const double pi = std::numbers::pi;
            return fixed_phase_state(
                {0.0, 0.8 * pi, -0.8 * pi, 0.8 * pi, 0.0});
        }
    } else if (dim == 12) {
        if (label == "a") {
            return ramp_phase_state(12, kStateSeedD12A);
        }
        if (label == "b") {
            return uniform_phase_state(12, kStateSeedD12B);
        }
        if (label == "c") {
            const double unit = std::numbers::pi / 5.0;
            std::vector<double> phases{0, 2, 1, 2, 4, -2, -2, 4, 2, 1, 2, 0};
            for (double &p : phases) {
                p *= unit;
            }
            return fixed_phase_state(phases);
        }
    }
    throw InvalidConfigError{"no reference state \"" + label +
                             "\" at dimension " + std::to_string(dim) +
                             " (labels a/b/c at dims 5 and 12)"};
}

std::vector<int> full_shifts(std::size_t dim) {
    std::vector<int> shifts(dim);
    std::iota(shifts.begin(), shifts.end(), 0);
    return shifts;
}

std::vector<int> reduced_shifts_d12() { return {0, 2, 4, 6, 8}; }

} // namespace ptyq
