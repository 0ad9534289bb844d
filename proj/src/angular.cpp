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

#include "ptyq/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>

namespace ptyq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

ApertureSpec ApertureSpec::make(std::size_t dim, double alpha,
                                CVec modulations, CVec illumination) {
    if (dim < 2) {
        throw DimensionTooSmallError{"aperture needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    if (modulations.size() != dim) {
        throw DimensionMismatchError{
            "aperture: " + std::to_string(modulations.size()) +
            " modulations for dim " + std::to_string(dim)};
    }
    const double beta = kTwoPi / static_cast<double>(dim);
    if (!(alpha > 0.0) || !(alpha < beta)) {
        throw InvalidApertureError{
            "slit width alpha must satisfy 0 < alpha < beta = 2*pi/" +
            std::to_string(dim)};
    }
    for (std::size_t n = 0; n < dim; ++n) {
        if (std::abs(modulations[n]) > 1.0 + 1e-12) {
            throw InvalidApertureError{"modulation " + std::to_string(n) +
                                       " has magnitude above 1"};
        }
    }
    if (illumination.empty()) {
        illumination.assign(dim, Complex{1.0, 0.0});
    } else if (illumination.size() != dim) {
        throw DimensionMismatchError{
            "aperture: " + std::to_string(illumination.size()) +
            " illumination samples for dim " + std::to_string(dim)};
    }
    return ApertureSpec{alpha, beta, std::move(modulations),
                        std::move(illumination)};
}

OamSpectrum::OamSpectrum(long long ell_min, long long ell_max,
                         std::map<long long, Complex> amplitudes)
    : ell_min_{ell_min}, ell_max_{ell_max}, amps_{std::move(amplitudes)} {
    if (ell_min_ > ell_max_) {
        throw InvalidConfigError{"spectrum window is empty"};
    }
}

Complex OamSpectrum::amplitude(long long ell) const {
    const auto it = amps_.find(ell);
    if (it == amps_.end()) {
        throw IndexOutOfRangeError{"mode " + std::to_string(ell) +
                                   " outside the retained window"};
    }
    return it->second;
}

double OamSpectrum::power(long long ell) const {
    return std::norm(amplitude(ell));
}

ModePlan::ModePlan(std::size_t dim, std::vector<long long> assignment)
    : assignment_{std::move(assignment)} {
    if (dim < 2) {
        throw DimensionTooSmallError{"mode plan needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    if (assignment_.size() != dim) {
        throw DimensionMismatchError{
            "mode plan: " + std::to_string(assignment_.size()) +
            " modes for dim " + std::to_string(dim)};
    }
    const long long d = static_cast<long long>(dim);
    std::set<long long> seen;
    for (std::size_t n = 0; n < assignment_.size(); ++n) {
        const long long ell = assignment_[n];
        // ((l - n) mod D + D) mod D keeps the check correct for l < 0.
        const long long residue =
            (((ell - static_cast<long long>(n)) % d) + d) % d;
        if (residue != 0) {
            throw InvalidModePlanError{
                "mode " + std::to_string(ell) + " assigned to state " +
                std::to_string(n) + " is not congruent mod " +
                std::to_string(dim)};
        }
        if (!seen.insert(ell).second) {
            throw InvalidModePlanError{"mode " + std::to_string(ell) +
                                       " assigned twice"};
        }
    }
}

double sinc_envelope(long long ell, double alpha) {
    if (ell == 0) {
        return 1.0;
    }
    const double x = static_cast<double>(ell) * alpha / 2.0;
    return std::sin(x) / x;
}

QuditState prepare_state(const ApertureSpec &aperture) {
    const std::size_t dim = aperture.dim();
    CVec raw(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        raw[n] = aperture.modulations()[n] * aperture.illumination()[n];
    }
    return normalize(raw);
}

OamSpectrum oam_spectrum(const QuditState &state, const ApertureSpec &aperture,
                         long long ell_min, long long ell_max) {
    if (state.dim() != aperture.dim()) {
        throw DimensionMismatchError{
            "spectrum: state dim " + std::to_string(state.dim()) +
            " != aperture dim " + std::to_string(aperture.dim())};
    }
    if (ell_min > ell_max) {
        throw InvalidConfigError{"spectrum window is empty"};
    }
    std::map<long long, Complex> amps;
    for (long long ell = ell_min; ell <= ell_max; ++ell) {
        amps[ell] = oam_amplitude(state.amplitudes(), aperture.alpha(), ell);
    }
    return OamSpectrum{ell_min, ell_max, std::move(amps)};
}

Complex oam_amplitude(const CVec &amps, double alpha, long long ell) {
    const std::size_t dim = amps.size();
    // The phase -l*n*beta is periodic in (l*n) mod D; reduce before
    // forming the angle so large |l| costs no precision.
    const long long d = static_cast<long long>(dim);
    Complex acc{0.0, 0.0};
    for (std::size_t n = 0; n < dim; ++n) {
        const long long product = (ell % d) * static_cast<long long>(n);
        const long long reduced = ((product % d) + d) % d;
        const double angle =
            -kTwoPi * static_cast<double>(reduced) / static_cast<double>(dim);
        acc += amps[n] * Complex{std::cos(angle), std::sin(angle)};
    }
    const double prefactor = alpha / std::sqrt(kTwoPi);
    return prefactor * sinc_envelope(ell, alpha) * acc;
}

Complex phi_ln(long long ell, std::size_t n, std::size_t dim, double alpha) {
    if (dim < 2) {
        throw DimensionTooSmallError{"phi_ln needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    if (n >= dim) {
        throw IndexOutOfRangeError{"Fourier index " + std::to_string(n) +
                                   " out of range for dim " +
                                   std::to_string(dim)};
    }
    const long long d = static_cast<long long>(dim);
    const long long residue =
        (((static_cast<long long>(n) - ell) % d) + d) % d;
    if (residue != 0) {
        // The sum over slits of e^{i k beta (n - l)} vanishes exactly.
        return Complex{0.0, 0.0};
    }
    // At congruence every term is 1 and the sum is exactly D.
    const double prefactor =
        alpha / std::sqrt(kTwoPi * static_cast<double>(dim));
    return Complex{prefactor * static_cast<double>(dim) *
                       sinc_envelope(ell, alpha),
                   0.0};
}

double a_ln(long long ell, std::size_t n, std::size_t dim, double alpha) {
    const Complex phi = phi_ln(ell, n, dim, alpha);
    if (phi == Complex{0.0, 0.0}) {
        return 0.0;
    }
    const double envelope = sinc_envelope(ell, alpha);
    return envelope * envelope; // phi_00 carries the same prefactor
}

ModePlan select_modes(std::size_t dim) {
    if (dim < 2) {
        throw DimensionTooSmallError{"mode selection needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    const long long d = static_cast<long long>(dim);
    const long long half = (dim % 2 == 1) ? (d - 1) / 2 : d / 2;
    std::vector<long long> assignment(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        assignment[n] = ((static_cast<long long>(n) + half) % d) - half;
    }
    return ModePlan{dim, std::move(assignment)};
}

RealMatrix compensate(const RealMatrix &counts, const ModePlan &plan,
                      double alpha) {
    if (counts.cols() != plan.dim()) {
        throw DimensionMismatchError{
            "compensate: " + std::to_string(counts.cols()) +
            " columns for plan dim " + std::to_string(plan.dim())};
    }
    // sin(x) never lands exactly on 0 in floating point away from x = 0,
    // so "on a null" means the envelope power is below a floor that no
    // centered plan can reach (those keep sinc^2 above ~0.4).
    constexpr double kEnvelopeFloor = 1e-12;
    std::vector<double> weights(plan.dim());
    for (std::size_t n = 0; n < plan.dim(); ++n) {
        const double envelope = sinc_envelope(plan.mode(n), alpha);
        const double weight = envelope * envelope;
        if (weight < kEnvelopeFloor) {
            throw EnvelopeZeroError{
                "mode " + std::to_string(plan.mode(n)) +
                " sits on a diffraction null; choose a narrower slit"};
        }
        weights[n] = weight;
    }
    RealMatrix out(counts.rows(), counts.cols());
    for (std::size_t j = 0; j < counts.rows(); ++j) {
        for (std::size_t n = 0; n < counts.cols(); ++n) {
            out(j, n) = counts(j, n) / weights[n];
        }
    }
    return out;
}

double peak_normalization(const OamSpectrum &spectrum, double alpha) {
    double best_power = -1.0;
    long long best_ell = 0;
    for (const auto &[ell, amp] : spectrum.amplitudes()) {
        const double p = std::norm(amp);
        if (p > best_power) {
            best_power = p;
            best_ell = ell;
        }
    }
    if (best_power <= 0.0) {
        throw ZeroVectorError{"spectrum has no power in the window"};
    }
    const double envelope = sinc_envelope(best_ell, alpha);
    return best_power / (envelope * envelope);
}

long long default_window_halfwidth(double alpha) {
    if (!(alpha > 0.0)) {
        throw InvalidApertureError{"slit width must be positive"};
    }
    return static_cast<long long>(std::ceil(kTwoPi / alpha));
}

} // namespace ptyq
