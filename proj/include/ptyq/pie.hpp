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
 * Iterative-engine phase retrieval over ptychographic data.
 *
 * One iteration sweeps the projector family in order. For each member:
 * clip the running estimate with the mask, analyze into the Fourier
 * basis, replace magnitudes by the measured square roots while keeping
 * phases, synthesize back, and feed the masked difference into the
 * running estimate with step eta. Convergence is tracked by the distance
 * between successive normalized whole-iteration estimates.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptyq/measure.hpp"
#include "ptyq/qudit.hpp"
#include "ptyq/types.hpp"

namespace ptyq {

/// Reconstruction controls. Defaults reproduce the reference runs.
struct PieConfig {
    double eta = 1.5;                       // step size, valid range (0, 2]
    std::size_t max_iterations = 8;         // whole sweeps through the family
    std::optional<double> delta_threshold;  // early stop when delta falls below
    std::uint64_t seed = 0;                 // random initial estimate stream
    std::optional<QuditState> track_target; // record per-iteration fidelity
    std::optional<CVec> initial;            // explicit start, overrides seed
};

/// Outcome of a reconstruction run.
struct PieResult {
    QuditState estimate;               // normalized, global phase fixed
    std::size_t iterations_run;
    std::vector<double> delta_trace;   // one entry per completed iteration
    std::vector<double> fidelity_trace; // filled when track_target is set
    bool converged;                    // threshold reached (false if not set)
};

/// Random start: independent standard-normal real and imaginary parts,
/// normalized.
CVec initial_estimate(std::size_t dim, std::uint64_t seed);

/// One projector update on a raw (unnormalized) iterate. `measured_row`
/// holds the D data values of this projector in plan order mapped back to
/// slit index n. Throws NegativeDataError on negative input.
CVec pie_update(const CVec &current, const std::vector<std::uint8_t> &mask,
                const std::vector<double> &measured_row, double eta,
                const FourierMatrix &fourier);

/// Full reconstruction. Rescales data once by a global factor fitted at
/// the initial estimate so compensated counts and abstract probabilities
/// are handled identically. Throws on dataset/family mismatch.
PieResult reconstruct(const PtychoDataset &dataset,
                      const ProjectorFamily &family, const PieConfig &config);

} // namespace ptyq
