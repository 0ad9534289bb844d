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
 * Bundled end-to-end scenarios behind `ptyq reproduce`.
 *
 * Each scenario builds its reference states and runs its slice of the
 * pipeline, writing plot-ready CSVs, JSON artifacts, and a summary into
 * an output directory. Ids: fig3 (D=5 spectra, alpha=pi/10), fig4 (D=12
 * spectra plus the projector-family masks), fig5 (Fourier-state OAM
 * probability grids, D=5, alpha=pi/20), fig6 (D=5 reconstructions, J=5,
 * eta=1.5, 8 iterations), fig7-top (D=12, J=12, 8 iterations),
 * fig7-bottom (D=12, J=5, 16 iterations).
 */

#pragma once

#include <string>
#include <vector>

#include "ptyq/types.hpp"

namespace ptyq {

struct ScenarioCase {
    std::string name;        // e.g. "d5_state_a"
    double final_delta;      // last convergence distance
    double final_fidelity;   // against the reference state
    std::size_t iterations;  // sweeps actually run
};

struct ScenarioSummary {
    std::string id;
    std::vector<std::string> files_written; // paths relative to outdir
    std::vector<ScenarioCase> cases;
};

/// Known ids, in presentation order.
const std::vector<std::string> &scenario_ids();

/// Run one scenario, writing artifacts under `outdir` (created if
/// absent). Throws InvalidConfigError for unknown ids.
ScenarioSummary reproduce_figure(const std::string &id,
                                 const std::string &outdir);

} // namespace ptyq
