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

#include "ptyq/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "ptyq/rng.hpp"

namespace ptyq {

ProjectorFamily make_family(std::size_t dim, std::vector<int> shifts,
                            std::optional<double> filter_width) {
    if (dim < 2) {
        throw DimensionTooSmallError{"projector family needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    if (shifts.empty()) {
        throw CoverageViolationError{"projector family is empty"};
    }
    const std::size_t rank = (dim + 1) / 2;
    std::vector<std::vector<std::uint8_t>> masks;
    masks.reserve(shifts.size());
    std::vector<std::uint8_t> covered(dim, 0);
    for (const int s : shifts) {
        if (s < 0 || static_cast<std::size_t>(s) >= dim) {
            throw ShiftOutOfRangeError{"shift " + std::to_string(s) +
                                       " out of range for dim " +
                                       std::to_string(dim)};
        }
        std::vector<std::uint8_t> mask(dim, 0);
        for (std::size_t k = 0; k < rank; ++k) {
            const std::size_t level = (k + static_cast<std::size_t>(s)) % dim;
            mask[level] = 1;
            covered[level] = 1;
        }
        masks.push_back(std::move(mask));
    }
    for (std::size_t level = 0; level < dim; ++level) {
        if (!covered[level]) {
            throw CoverageViolationError{"level " + std::to_string(level) +
                                         " is addressed by no projector"};
        }
    }
    // Tr{P_j P_j'} counts shared levels; partial overlap means the count
    // is strictly between 0 and the rank for at least one partner.
    for (std::size_t j = 0; j < masks.size(); ++j) {
        bool has_partner = false;
        for (std::size_t jp = 0; jp < masks.size(); ++jp) {
            if (jp == j) {
                continue;
            }
            std::size_t shared = 0;
            for (std::size_t level = 0; level < dim; ++level) {
                shared += static_cast<std::size_t>(masks[j][level] &
                                                   masks[jp][level]);
            }
            if (shared > 0 && shared < rank) {
                has_partner = true;
                break;
            }
        }
        if (!has_partner) {
            throw OverlapViolationError{
                "projector with shift " + std::to_string(shifts[j]) +
                " shares no partial support with any other member"};
        }
    }
    ProjectorFamily family;
    family.dim_ = dim;
    family.shifts_ = std::move(shifts);
    family.masks_ = std::move(masks);
    family.filter_width_ = filter_width;
    return family;
}

const std::vector<std::uint8_t> &ProjectorFamily::mask(std::size_t j) const {
    if (j >= masks_.size()) {
        throw IndexOutOfRangeError{"projector index " + std::to_string(j) +
                                   " out of range for family of size " +
                                   std::to_string(masks_.size())};
    }
    return masks_[j];
}

CVec apply_projector(const ProjectorFamily &family, std::size_t j,
                     const QuditState &state) {
    if (state.dim() != family.dim()) {
        throw DimensionMismatchError{
            "projector: state dim " + std::to_string(state.dim()) +
            " != family dim " + std::to_string(family.dim())};
    }
    const std::vector<std::uint8_t> &mask = family.mask(j);
    CVec out(state.dim());
    for (std::size_t n = 0; n < state.dim(); ++n) {
        out[n] = mask[n] ? state[n] : Complex{0.0, 0.0};
    }
    return out;
}

double physical_scale(std::size_t dim, double alpha) {
    return alpha * alpha * static_cast<double>(dim) /
           (2.0 * std::numbers::pi);
}

PtychoDataset simulate_dataset(const QuditState &state,
                               const ProjectorFamily &family,
                               const ModePlan &plan, double alpha,
                               std::optional<std::uint64_t> shots,
                               std::optional<std::uint64_t> seed,
                               bool compensated) {
    const std::size_t dim = family.dim();
    if (state.dim() != dim || plan.dim() != dim) {
        throw DimensionMismatchError{
            "dataset: state/plan/family dims disagree"};
    }
    const double beta = 2.0 * std::numbers::pi / static_cast<double>(dim);
    if (!(alpha > 0.0) || !(alpha < beta)) {
        throw InvalidApertureError{
            "slit width alpha must satisfy 0 < alpha < beta = 2*pi/" +
            std::to_string(dim)};
    }
    if (shots && *shots == 0) {
        throw InvalidShotsError{"shot count must be positive when given"};
    }
    // The recorded seed is meaningful only in shot-noise mode; noiseless
    // datasets are deterministic without one.
    if (shots && !seed) {
        seed = 0;
    }
    if (!shots) {
        seed.reset();
    }

    const std::size_t members = family.size();
    RealMatrix raw(members, dim);
    for (std::size_t j = 0; j < members; ++j) {
        const CVec clipped = apply_projector(family, j, state);
        for (std::size_t n = 0; n < dim; ++n) {
            const Complex amp = oam_amplitude(clipped, alpha, plan.mode(n));
            raw(j, n) = std::norm(amp);
        }
    }

    if (shots) {
        // Mean count per cell: shots scaled by the detection probability
        // |d|^2 / (alpha^2 D / 2 pi) = sinc^2 * |<f_n|P_j psi>|^2 <= 1.
        const double scale = physical_scale(dim, alpha);
        for (std::size_t j = 0; j < members; ++j) {
            for (std::size_t n = 0; n < dim; ++n) {
                const double mean =
                    static_cast<double>(*shots) * raw(j, n) / scale;
                Rng rng = cell_rng(*seed, j, n);
                raw(j, n) = static_cast<double>(rng.poisson(mean));
            }
        }
    }

    RealMatrix values =
        compensated ? compensate(raw, plan, alpha) : std::move(raw);

    PtychoDataset dataset{dim,      family.shifts(), alpha, plan,
                          compensated, shots,        seed,  std::move(values)};
    return dataset;
}

RealMatrix fourier_probabilities(const QuditState &state,
                                 const ProjectorFamily &family) {
    if (state.dim() != family.dim()) {
        throw DimensionMismatchError{
            "probabilities: state dim " + std::to_string(state.dim()) +
            " != family dim " + std::to_string(family.dim())};
    }
    const std::size_t dim = family.dim();
    const FourierMatrix fourier{dim};
    RealMatrix out(family.size(), dim);
    for (std::size_t j = 0; j < family.size(); ++j) {
        const CVec clipped = apply_projector(family, j, state);
        const CVec overlaps = fourier.apply_adjoint(clipped);
        for (std::size_t n = 0; n < dim; ++n) {
            out(j, n) = std::norm(overlaps[n]);
        }
    }
    return out;
}

} // namespace ptyq
