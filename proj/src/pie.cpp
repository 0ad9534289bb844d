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

#include "ptyq/pie.hpp"

#include <cmath>
#include <string>

#include "ptyq/rng.hpp"

namespace ptyq {

namespace {

// Below this magnitude a model Fourier component carries no usable
// phase; the replacement then uses phase 0 for determinism.
constexpr double kPhaseFloor = 1e-14;

} // namespace

CVec initial_estimate(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) {
        throw DimensionTooSmallError{"initial estimate needs dim >= 2, got " +
                                     std::to_string(dim)};
    }
    Rng rng{mix64(seed)};
    CVec raw(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        raw[n] = Complex{re, im};
    }
    return normalize(raw).amplitudes();
}

CVec pie_update(const CVec &current, const std::vector<std::uint8_t> &mask,
                const std::vector<double> &measured_row, double eta,
                const FourierMatrix &fourier) {
    const std::size_t dim = fourier.dim();
    if (current.size() != dim || mask.size() != dim ||
        measured_row.size() != dim) {
        throw DimensionMismatchError{"pie update: size mismatch"};
    }
    for (const double value : measured_row) {
        if (!std::isfinite(value)) {
            throw NonFiniteDataError{"measured value is not finite"};
        }
        if (value < 0.0) {
            throw NegativeDataError{"measured value is negative"};
        }
    }

    CVec clipped(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        clipped[n] = mask[n] ? current[n] : Complex{0.0, 0.0};
    }

    // Analysis direction: component n must be <f_n|clipped>, i.e. the
    // adjoint transform; synthesizing back then uses the forward one.
    CVec model = fourier.apply_adjoint(clipped);
    for (std::size_t n = 0; n < dim; ++n) {
        const double target = std::sqrt(measured_row[n]);
        const double magnitude = std::abs(model[n]);
        if (magnitude < kPhaseFloor) {
            model[n] = Complex{target, 0.0};
        } else {
            model[n] *= target / magnitude;
        }
    }
    const CVec corrected = fourier.apply(model);

    CVec updated = current;
    for (std::size_t n = 0; n < dim; ++n) {
        if (mask[n]) {
            updated[n] += eta * (corrected[n] - clipped[n]);
        }
    }
    return updated;
}

PieResult reconstruct(const PtychoDataset &dataset,
                      const ProjectorFamily &family, const PieConfig &config) {
    const std::size_t dim = family.dim();
    if (dataset.dim != dim) {
        throw DimensionMismatchError{
            "reconstruct: dataset dim " + std::to_string(dataset.dim) +
            " != family dim " + std::to_string(dim)};
    }
    if (dataset.values.rows() != family.size() ||
        dataset.values.cols() != dim) {
        throw DimensionMismatchError{"reconstruct: dataset is " +
                                     std::to_string(dataset.values.rows()) +
                                     "x" +
                                     std::to_string(dataset.values.cols()) +
                                     ", family wants " +
                                     std::to_string(family.size()) + "x" +
                                     std::to_string(dim)};
    }
    if (!(config.eta > 0.0) || !(config.eta <= 2.0)) {
        throw InvalidConfigError{"eta must lie in (0, 2]"};
    }
    if (config.max_iterations == 0) {
        throw InvalidConfigError{"iteration budget must be positive"};
    }
    if (config.delta_threshold && !(*config.delta_threshold >= 0.0)) {
        throw InvalidConfigError{"delta threshold must be nonnegative"};
    }
    for (const double value : dataset.values.data()) {
        if (!std::isfinite(value)) {
            throw NonFiniteDataError{"dataset value is not finite"};
        }
        if (value < 0.0) {
            throw NegativeDataError{"dataset value is negative"};
        }
    }
    if (config.track_target && config.track_target->dim() != dim) {
        throw DimensionMismatchError{"reconstruct: tracked target dim " +
                                     std::to_string(config.track_target->dim()) +
                                     " != family dim " + std::to_string(dim)};
    }

    CVec iterate;
    if (config.initial) {
        if (config.initial->size() != dim) {
            throw DimensionMismatchError{"reconstruct: initial estimate has " +
                                         std::to_string(config.initial->size()) +
                                         " entries, family wants " +
                                         std::to_string(dim)};
        }
        iterate = normalize(*config.initial).amplitudes();
    } else {
        iterate = initial_estimate(dim, config.seed);
    }

    const FourierMatrix fourier{dim};
    const std::size_t members = family.size();

    // Measured counts are only proportional to probabilities. Fit one
    // global scale at the initial estimate (total model mass over total
    // data mass) and hold it fixed for the whole run.
    double data_mass = 0.0;
    for (const double value : dataset.values.data()) {
        data_mass += value;
    }
    double model_mass = 0.0;
    for (std::size_t j = 0; j < members; ++j) {
        const std::vector<std::uint8_t> &mask = family.mask(j);
        for (std::size_t n = 0; n < dim; ++n) {
            if (mask[n]) {
                model_mass += std::norm(iterate[n]);
            }
        }
    }
    if (data_mass <= 0.0) {
        throw NegativeDataError{"dataset carries no counts"};
    }
    const double scale = model_mass / data_mass;
    std::vector<std::vector<double>> rows(members,
                                          std::vector<double>(dim, 0.0));
    for (std::size_t j = 0; j < members; ++j) {
        for (std::size_t n = 0; n < dim; ++n) {
            rows[j][n] = dataset.values(j, n) * scale;
        }
    }

    PieResult result{normalize(iterate), 0, {}, {}, false};
    QuditState previous = normalize(iterate);
    for (std::size_t iteration = 0; iteration < config.max_iterations;
         ++iteration) {
        for (std::size_t j = 0; j < members; ++j) {
            iterate = pie_update(iterate, family.mask(j), rows[j], config.eta,
                                 fourier);
        }
        const QuditState updated = normalize(iterate);
        const double delta = trace_distance(previous, updated);
        result.delta_trace.push_back(delta);
        if (config.track_target) {
            result.fidelity_trace.push_back(
                fidelity(*config.track_target, updated));
        }
        previous = updated;
        ++result.iterations_run;
        if (config.delta_threshold && delta < *config.delta_threshold) {
            result.converged = true;
            break;
        }
    }
    result.estimate = fix_global_phase(previous);
    return result;
}

} // namespace ptyq
