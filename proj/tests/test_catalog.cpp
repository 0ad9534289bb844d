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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "ptyq/catalog.hpp"
#include "ptyq/qudit.hpp"

using namespace ptyq;

namespace {

constexpr double kPi = std::numbers::pi;

double wrapped_phase_gap(double a, double b) {
    double gap = a - b;
    while (gap > kPi) {
        gap -= 2.0 * kPi;
    }
    while (gap < -kPi) {
        gap += 2.0 * kPi;
    }
    return std::abs(gap);
}

} // namespace

TEST_CASE("the fixed-phase five-level state") {
    const QuditState state = reference_state(5, "c");
    const std::vector<double> phases{0.0, 0.8 * kPi, -0.8 * kPi, 0.8 * kPi,
                                     0.0};
    const double magnitude = 1.0 / std::sqrt(5.0);
    for (std::size_t n = 0; n < 5; ++n) {
        CHECK(std::abs(std::abs(state[n]) - magnitude) < 1e-15);
        CHECK(wrapped_phase_gap(std::arg(state[n]), phases[n]) < 1e-15);
    }
}

TEST_CASE("the fixed-phase twelve-level state") {
    const QuditState state = reference_state(12, "c");
    std::vector<double> phases{0, 2, 1, 2, 4, -2, -2, 4, 2, 1, 2, 0};
    for (double &p : phases) {
        p *= kPi / 5.0;
    }
    const double magnitude = 1.0 / std::sqrt(12.0);
    for (std::size_t n = 0; n < 12; ++n) {
        CHECK(std::abs(std::abs(state[n]) - magnitude) < 1e-15);
        CHECK(wrapped_phase_gap(std::arg(state[n]), phases[n]) < 1e-15);
    }
}

TEST_CASE("the ramp state rises linearly in level") {
    const QuditState state = reference_state(12, "a");
    // sum (n+1)^2 for n < 12 is 650.
    const double base = 1.0 / std::sqrt(650.0);
    for (std::size_t n = 0; n < 12; ++n) {
        CHECK(std::abs(std::abs(state[n]) -
                       base * static_cast<double>(n + 1)) < 1e-12);
    }
    // The lowest magnitude rounds to the familiar 0.039223 figure.
    CHECK(std::abs(std::abs(state[0]) - 0.039223) < 1e-6);
}

TEST_CASE("uniform-magnitude states have flat probability") {
    for (const std::size_t dim : {5u, 12u}) {
        const QuditState state = reference_state(dim, "b");
        for (std::size_t n = 0; n < dim; ++n) {
            CHECK(std::abs(std::norm(state[n]) -
                           1.0 / static_cast<double>(dim)) < 1e-12);
        }
        // Random phases: the state must not be the uniform in-phase one.
        double imag_mass = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
            imag_mass += std::abs(state[n].imag());
        }
        CHECK(imag_mass > 1e-3);
    }
}

TEST_CASE("catalog states are reproducible") {
    for (const std::size_t dim : {5u, 12u}) {
        for (const char *label : {"a", "b", "c"}) {
            const QuditState first = reference_state(dim, label);
            const QuditState second = reference_state(dim, label);
            REQUIRE(first.dim() == dim);
            CHECK(std::abs(norm_squared(first.amplitudes()) - 1.0) < 1e-12);
            for (std::size_t n = 0; n < dim; ++n) {
                CHECK(first[n] == second[n]);
            }
        }
    }
}

TEST_CASE("the random five-level state is not a uniform one") {
    const QuditState state = reference_state(5, "a");
    double spread = 0.0;
    for (std::size_t n = 0; n < 5; ++n) {
        spread = std::max(spread, std::abs(std::norm(state[n]) - 0.2));
    }
    CHECK(spread > 1e-3);
}

TEST_CASE("unknown labels and dimensions are rejected") {
    CHECK_THROWS_AS(reference_state(5, "d"), InvalidConfigError);
    CHECK_THROWS_AS(reference_state(5, "A"), InvalidConfigError);
    CHECK_THROWS_AS(reference_state(7, "a"), InvalidConfigError);
    CHECK_THROWS_AS(reference_state(2, "b"), InvalidConfigError);
    CHECK_THROWS_AS(reference_state(12, ""), InvalidConfigError);
}

TEST_CASE("state construction helpers") {
    SUBCASE("uniform phases") {
        const QuditState state = uniform_phase_state(7, 3);
        for (std::size_t n = 0; n < 7; ++n) {
            CHECK(std::abs(std::abs(state[n]) - 1.0 / std::sqrt(7.0)) <
                  1e-12);
        }
    }
    SUBCASE("ramp magnitudes") {
        const QuditState state = ramp_phase_state(4, 1);
        for (std::size_t n = 0; n < 4; ++n) {
            const double ratio = std::abs(state[n]) / std::abs(state[0]);
            CHECK(std::abs(ratio - static_cast<double>(n + 1)) < 1e-12);
        }
    }
    SUBCASE("fully random draws are deterministic per seed") {
        const QuditState a = random_reference_state(6, 9);
        const QuditState b = random_reference_state(6, 9);
        const QuditState c = random_reference_state(6, 10);
        CHECK(std::abs(norm_squared(a.amplitudes()) - 1.0) < 1e-12);
        for (std::size_t n = 0; n < 6; ++n) {
            CHECK(a[n] == b[n]);
        }
        CHECK(fidelity(a, c) < 1.0 - 1e-6);
    }
}

TEST_CASE("shift family helpers") {
    CHECK(full_shifts(5) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(full_shifts(12) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    CHECK(reduced_shifts_d12() == std::vector<int>{0, 2, 4, 6, 8});
}
