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

#include "ptyq/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ptyq {

namespace {

// Worst magnitude at which a component still anchors the global phase.
constexpr double kPhaseAnchorTol = 1e-10;

} // namespace

FourierMatrix::FourierMatrix(std::size_t dim) : dim_{dim} {
    if (dim < 2) {
        throw DimensionTooSmallError{"Fourier matrix needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    entries_.resize(dim * dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t n = 0; n < dim; ++n) {
            // Reduce n*k mod D before forming the angle: exact phases at
            // the roots of unity instead of accumulated rounding.
            const std::size_t reduced = (n * k) % dim;
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>(reduced) /
                                 static_cast<double>(dim);
            entries_[k * dim + n] =
                scale * Complex{std::cos(angle), std::sin(angle)};
        }
    }
}

CVec FourierMatrix::apply(const CVec &v) const {
    if (v.size() != dim_) {
        throw DimensionMismatchError{
            "Fourier apply: vector size " + std::to_string(v.size()) +
            " != matrix dim " + std::to_string(dim_)};
    }
    CVec out(dim_, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < dim_; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t n = 0; n < dim_; ++n) {
            acc += entry(k, n) * v[n];
        }
        out[k] = acc;
    }
    return out;
}

CVec FourierMatrix::apply_adjoint(const CVec &v) const {
    if (v.size() != dim_) {
        throw DimensionMismatchError{
            "Fourier adjoint: vector size " + std::to_string(v.size()) +
            " != matrix dim " + std::to_string(dim_)};
    }
    CVec out(dim_, Complex{0.0, 0.0});
    for (std::size_t n = 0; n < dim_; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < dim_; ++k) {
            acc += std::conj(entry(k, n)) * v[k];
        }
        out[n] = acc;
    }
    return out;
}

QuditState normalize(const CVec &raw) {
    if (raw.size() < 2) {
        throw DimensionTooSmallError{"state needs dim >= 2, got " +
                                     std::to_string(raw.size())};
    }
    const double norm = std::sqrt(norm_squared(raw));
    if (norm == 0.0) {
        throw ZeroVectorError{"cannot normalize the zero vector"};
    }
    CVec scaled(raw.size());
    for (std::size_t n = 0; n < raw.size(); ++n) {
        scaled[n] = raw[n] / norm;
    }
    return QuditState{std::move(scaled)};
}

QuditState qft(const QuditState &state) {
    const FourierMatrix fourier{state.dim()};
    return normalize(fourier.apply(state.amplitudes()));
}

QuditState iqft(const QuditState &state) {
    const FourierMatrix fourier{state.dim()};
    return normalize(fourier.apply_adjoint(state.amplitudes()));
}

double trace_distance(const QuditState &a, const QuditState &b) {
    return compare(a, b).trace_distance;
}

double fidelity(const QuditState &a, const QuditState &b) {
    return compare(a, b).fidelity;
}

ComparisonReport compare(const QuditState &a, const QuditState &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError{
            "compare: dims " + std::to_string(a.dim()) + " and " +
            std::to_string(b.dim()) + " differ"};
    }
    const Complex overlap = inner_product(a.amplitudes(), b.amplitudes());
    const double f = std::clamp(std::norm(overlap), 0.0, 1.0);
    // For pure states T = sqrt(1 - F), but that form squanders half the
    // mantissa when the states nearly coincide (F rounds to 1 - eps and
    // the root inflates eps to 1e-8). The residual of b against a spans
    // the same quantity, T = ||b - <a|b> a||, with full absolute
    // precision at both ends of the range.
    double residual_power = 0.0;
    for (std::size_t n = 0; n < a.dim(); ++n) {
        residual_power += std::norm(b[n] - overlap * a[n]);
    }
    const double t = std::clamp(std::sqrt(residual_power), 0.0, 1.0);
    return ComparisonReport{t, f};
}

QuditState fix_global_phase(const QuditState &state) {
    const CVec &amps = state.amplitudes();
    for (const Complex &c : amps) {
        if (std::abs(c) > kPhaseAnchorTol) {
            const Complex rotation = std::conj(c) / std::abs(c);
            CVec rotated(amps.size());
            for (std::size_t n = 0; n < amps.size(); ++n) {
                rotated[n] = amps[n] * rotation;
            }
            return normalize(rotated);
        }
    }
    return state; // unreachable for normalized states, kept for safety
}

QuditState basis_state(std::size_t dim, std::size_t k) {
    if (dim < 2) {
        throw DimensionTooSmallError{"basis state needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    if (k >= dim) {
        throw IndexOutOfRangeError{"basis index " + std::to_string(k) +
                                   " out of range for dim " +
                                   std::to_string(dim)};
    }
    CVec amps(dim, Complex{0.0, 0.0});
    amps[k] = Complex{1.0, 0.0};
    return normalize(amps);
}

Complex inner_product(const CVec &a, const CVec &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError{
            "inner product: sizes " + std::to_string(a.size()) + " and " +
            std::to_string(b.size()) + " differ"};
    }
    Complex acc{0.0, 0.0};
    for (std::size_t n = 0; n < a.size(); ++n) {
        acc += std::conj(a[n]) * b[n];
    }
    return acc;
}

double norm_squared(const CVec &v) {
    double acc = 0.0;
    for (const Complex &c : v) {
        acc += std::norm(c);
    }
    return acc;
}

} // namespace ptyq
