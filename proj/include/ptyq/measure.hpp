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
 * Ptychographic projector families and the measurement chain.
 *
 * Projector P_j keeps the ceil(D/2) slit levels {(k + s_j) mod D} and
 * blocks the rest. A valid family covers every level and gives every
 * member a partner with partial support overlap. The simulated dataset
 * holds, for each projector, the OAM-mode counts at the planned modes,
 * optionally Poisson shot noise and envelope compensation.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptyq/angular.hpp"
#include "ptyq/qudit.hpp"
#include "ptyq/types.hpp"

namespace ptyq {

/// Family of J rank-ceil(D/2) diagonal binary projectors, defined by the
/// shift vector s. Validated on construction via `make_family`.
class ProjectorFamily {
  public:
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return masks_.size(); } // J
    std::size_t rank() const { return (dim_ + 1) / 2; }
    const std::vector<int> &shifts() const { return shifts_; }
    /// Diagonal 0/1 mask of projector j.
    const std::vector<std::uint8_t> &mask(std::size_t j) const;
    /// Spatial-filter slit width alpha' (metadata; projectors act exactly).
    std::optional<double> filter_width() const { return filter_width_; }

  private:
    friend ProjectorFamily make_family(std::size_t, std::vector<int>,
                                       std::optional<double>);
    ProjectorFamily() = default;

    std::size_t dim_ = 0;
    std::vector<int> shifts_;
    std::vector<std::vector<std::uint8_t>> masks_;
    std::optional<double> filter_width_;
};

/// Build and validate a projector family. Throws ShiftOutOfRangeError,
/// CoverageViolationError, or OverlapViolationError.
ProjectorFamily make_family(std::size_t dim, std::vector<int> shifts,
                            std::optional<double> filter_width = {});

/// P_j |psi>: entrywise mask, deliberately not renormalized; the lost
/// norm is the signal the reconstruction uses.
CVec apply_projector(const ProjectorFamily &family, std::size_t j,
                     const QuditState &state);

/// Measurement record fed to the reconstruction engine, and the wire
/// format between the `measure` and `reconstruct` commands.
struct PtychoDataset {
    std::size_t dim;
    std::vector<int> shifts;
    double alpha;
    ModePlan mode_plan;
    bool compensated;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    RealMatrix values; // J x D

    std::size_t projector_count() const { return values.rows(); }
};

/// Simulate the measurement chain |psi> -> P_j|psi> -> OAM counts at the
/// planned modes. Noiseless values are |d_l(n)(P_j psi)|^2; with `shots`
/// each cell is Poisson with mean shots * sinc^2 * |<f_n|P_j psi>|^2,
/// drawn from a per-cell stream of `seed`. Compensation divides by
/// sinc^2(l(n)*alpha/2).
PtychoDataset simulate_dataset(const QuditState &state,
                               const ProjectorFamily &family,
                               const ModePlan &plan, double alpha,
                               std::optional<std::uint64_t> shots = {},
                               std::optional<std::uint64_t> seed = {},
                               bool compensated = true);

/// Reference route through the Fourier matrix: row j holds
/// |<f_n|P_j psi>|^2 for n = 0..D-1. Independent of the OAM closed form;
/// the two agree up to the constant alpha^2 D / (2 pi).
RealMatrix fourier_probabilities(const QuditState &state,
                                 const ProjectorFamily &family);

/// Scale relating compensated physical counts to Fourier probabilities.
double physical_scale(std::size_t dim, double alpha);

} // namespace ptyq
