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
 * Wire formats: JSON for states and datasets, CSV for spectra and traces.
 *
 * Floating-point output uses 17 significant digits, so values round-trip
 * exactly. Writers accept an ordered key/value provenance block: JSON
 * files embed it under "meta", CSV files as leading '#' comment lines.
 * Readers ignore it and throw ParseError with the offending key on
 * malformed input.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ptyq/angular.hpp"
#include "ptyq/measure.hpp"
#include "ptyq/pie.hpp"
#include "ptyq/qudit.hpp"

namespace ptyq {

/// Ordered provenance entries (tool version, resolved config, seeds).
using MetaMap = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// -- QuditState JSON: {"dim": D, "re": [...], "im": [...]} --
std::string state_to_json(const QuditState &state, const MetaMap &meta = {});
QuditState state_from_json(const std::string &text);
void write_state(const std::string &path, const QuditState &state,
                 const MetaMap &meta = {});
QuditState read_state(const std::string &path);

// -- PtychoDataset JSON: dim/shifts/alpha/mode_plan/compensated/shots/
//    seed/values (flat row-major J x D) --
std::string dataset_to_json(const PtychoDataset &dataset,
                            const MetaMap &meta = {});
PtychoDataset dataset_from_json(const std::string &text);
void write_dataset(const std::string &path, const PtychoDataset &dataset,
                   const MetaMap &meta = {});
PtychoDataset read_dataset(const std::string &path);

// -- OamSpectrum CSV: ell, re, im, power, power_norm, envelope --
// power_norm divides by the envelope-compensated peak power (see
// peak_normalization); envelope is sinc^2(ell*alpha/2).
void write_spectrum_csv(std::ostream &out, const OamSpectrum &spectrum,
                        double alpha, const MetaMap &meta = {});
void write_spectrum_csv(const std::string &path, const OamSpectrum &spectrum,
                        double alpha, const MetaMap &meta = {});

// -- Slit-basis CSV: n, re, im, prob, prob_norm (peak-normalized) --
void write_slit_csv(std::ostream &out, const QuditState &state,
                    const MetaMap &meta = {});
void write_slit_csv(const std::string &path, const QuditState &state,
                    const MetaMap &meta = {});

// -- PieResult trace CSV: iteration, delta, fidelity (blank if untracked) --
void write_trace_csv(std::ostream &out, const PieResult &result,
                     const MetaMap &meta = {});
void write_trace_csv(const std::string &path, const PieResult &result,
                     const MetaMap &meta = {});

/// Read a whole file; throws ParseError if unreadable.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

} // namespace ptyq
