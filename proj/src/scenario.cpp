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

#include "ptyq/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ptyq/angular.hpp"
#include "ptyq/catalog.hpp"
#include "ptyq/io.hpp"
#include "ptyq/measure.hpp"
#include "ptyq/pie.hpp"
#include "ptyq/version.hpp"

namespace ptyq {

namespace {

constexpr const char *kLabels[] = {"a", "b", "c"};

// Slit widths used by the bundled scenarios: pi/10 for the state
// spectra, pi/20 for the Fourier-state mode grids; the D=12 runs carry a
// pi/12 spatial-filter width in their metadata.
constexpr double kAlphaSpectra = std::numbers::pi / 10.0;
constexpr double kAlphaModeGrid = std::numbers::pi / 20.0;
constexpr double kFilterWidthD12 = std::numbers::pi / 12.0;

struct Emitter {
    std::filesystem::path outdir;
    ScenarioSummary summary;
    MetaMap base_meta;

    void note(const std::string &relative) {
        summary.files_written.push_back(relative);
    }

    std::string path(const std::string &relative) const {
        return (outdir / relative).string();
    }
};

MetaMap with(MetaMap meta,
             std::initializer_list<std::pair<std::string, std::string>>
                 extra) {
    for (auto &entry : extra) {
        meta.push_back(entry);
    }
    return meta;
}

void emit_state_and_spectra(Emitter &em, std::size_t dim,
                            const std::string &label, double alpha) {
    const QuditState state = reference_state(dim, label);
    const std::string stem =
        "d" + std::to_string(dim) + "_state_" + label;
    const MetaMap meta = with(em.base_meta,
                              {{"state", label},
                               {"dim", std::to_string(dim)},
                               {"alpha", format_double(alpha)}});

    write_state(em.path(stem + ".json"), state, meta);
    em.note(stem + ".json");

    write_slit_csv(em.path(stem + "_slits.csv"), state, meta);
    em.note(stem + "_slits.csv");

    const ApertureSpec aperture =
        ApertureSpec::make(dim, alpha, state.amplitudes());
    const long long halfwidth = default_window_halfwidth(alpha);
    const OamSpectrum spectrum =
        oam_spectrum(state, aperture, -halfwidth, halfwidth);
    write_spectrum_csv(em.path(stem + "_oam.csv"), spectrum, alpha, meta);
    em.note(stem + "_oam.csv");
}

void emit_family_masks(Emitter &em, const ProjectorFamily &family,
                       const std::string &name) {
    std::ostringstream out;
    for (const auto &[key, value] : em.base_meta) {
        out << "# " << key << "=" << value << "\n";
    }
    out << "shift";
    for (std::size_t level = 0; level < family.dim(); ++level) {
        out << ",level_" << level;
    }
    out << "\n";
    for (std::size_t j = 0; j < family.size(); ++j) {
        out << family.shifts()[j];
        for (std::size_t level = 0; level < family.dim(); ++level) {
            out << "," << static_cast<int>(family.mask(j)[level]);
        }
        out << "\n";
    }
    write_text_file(em.path(name), out.str());
    em.note(name);
}

void emit_mode_grid(Emitter &em, std::size_t dim, double alpha,
                    long long halfwidth, const std::string &name) {
    std::ostringstream out;
    for (const auto &[key, value] : em.base_meta) {
        out << "# " << key << "=" << value << "\n";
    }
    out << "ell";
    for (std::size_t n = 0; n < dim; ++n) {
        out << ",f" << n;
    }
    out << ",envelope\n";
    for (long long ell = -halfwidth; ell <= halfwidth; ++ell) {
        out << ell;
        for (std::size_t n = 0; n < dim; ++n) {
            out << "," << format_double(a_ln(ell, n, dim, alpha));
        }
        const double envelope = sinc_envelope(ell, alpha);
        out << "," << format_double(envelope * envelope) << "\n";
    }
    write_text_file(em.path(name), out.str());
    em.note(name);
}

void run_reconstructions(Emitter &em, std::size_t dim,
                         const std::vector<int> &shifts, double alpha,
                         std::optional<double> filter_width,
                         std::size_t iterations, std::uint64_t init_seed) {
    const ProjectorFamily family = make_family(dim, shifts, filter_width);
    const ModePlan plan = select_modes(dim);
    for (const char *label : kLabels) {
        const QuditState state = reference_state(dim, label);
        const std::string stem =
            "d" + std::to_string(dim) + "_" + label;
        const MetaMap meta = with(
            em.base_meta,
            {{"state", label},
             {"dim", std::to_string(dim)},
             {"alpha", format_double(alpha)},
             {"projectors", std::to_string(shifts.size())},
             {"eta", "1.5"},
             {"iterations", std::to_string(iterations)},
             {"init_seed", std::to_string(init_seed)}});

        write_state(em.path(stem + "_target.json"), state, meta);
        em.note(stem + "_target.json");

        const PtychoDataset dataset =
            simulate_dataset(state, family, plan, alpha);
        write_dataset(em.path(stem + "_dataset.json"), dataset, meta);
        em.note(stem + "_dataset.json");

        PieConfig config;
        config.eta = 1.5;
        config.max_iterations = iterations;
        config.seed = init_seed;
        config.track_target = state;
        const PieResult result = reconstruct(dataset, family, config);

        write_trace_csv(em.path(stem + "_trace.csv"), result, meta);
        em.note(stem + "_trace.csv");

        const MetaMap estimate_meta = with(
            meta, {{"final_delta",
                    format_double(result.delta_trace.back())},
                   {"final_fidelity",
                    format_double(result.fidelity_trace.back())}});
        write_state(em.path(stem + "_estimate.json"), result.estimate,
                    estimate_meta);
        em.note(stem + "_estimate.json");

        em.summary.cases.push_back(
            ScenarioCase{"d" + std::to_string(dim) + "_state_" + label,
                         result.delta_trace.back(),
                         result.fidelity_trace.back(),
                         result.iterations_run});
    }
}

void write_summary(Emitter &em) {
    nlohmann::json doc;
    doc["id"] = em.summary.id;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto &[key, value] : em.base_meta) {
        meta[key] = value;
    }
    doc["meta"] = std::move(meta);
    doc["files"] = em.summary.files_written;
    nlohmann::json cases = nlohmann::json::array();
    for (const ScenarioCase &c : em.summary.cases) {
        cases.push_back({{"name", c.name},
                         {"final_delta", c.final_delta},
                         {"final_fidelity", c.final_fidelity},
                         {"iterations", c.iterations}});
    }
    doc["cases"] = std::move(cases);
    write_text_file(em.path("summary.json"), doc.dump(2) + "\n");
    em.summary.files_written.push_back("summary.json");
}

} // namespace

const std::vector<std::string> &scenario_ids() {
    static const std::vector<std::string> ids{
        "fig3", "fig4", "fig5", "fig6", "fig7-top", "fig7-bottom"};
    return ids;
}

ScenarioSummary reproduce_figure(const std::string &id,
                                 const std::string &outdir) {
    Emitter em;
    em.outdir = outdir;
    std::filesystem::create_directories(em.outdir);
    em.summary.id = id;
    em.base_meta = {{"tool", kToolName},
                    {"version", kVersion},
                    {"scenario", id}};

    if (id == "fig3") {
        for (const char *label : kLabels) {
            emit_state_and_spectra(em, 5, label, kAlphaSpectra);
        }
    } else if (id == "fig4") {
        for (const char *label : kLabels) {
            emit_state_and_spectra(em, 12, label, kAlphaSpectra);
        }
        emit_family_masks(
            em, make_family(12, full_shifts(12), kFilterWidthD12),
            "d12_family_j12.csv");
        emit_family_masks(
            em, make_family(12, reduced_shifts_d12(), kFilterWidthD12),
            "d12_family_j5.csv");
    } else if (id == "fig5") {
        emit_mode_grid(em, 5, kAlphaModeGrid, 12,
                       "d5_fourier_mode_grid.csv");
    } else if (id == "fig6") {
        run_reconstructions(em, 5, full_shifts(5), kAlphaModeGrid, {}, 8,
                            kInitSeedD5);
    } else if (id == "fig7-top") {
        run_reconstructions(em, 12, full_shifts(12), kAlphaSpectra,
                            kFilterWidthD12, 8, kInitSeedD12Full);
    } else if (id == "fig7-bottom") {
        run_reconstructions(em, 12, reduced_shifts_d12(), kAlphaSpectra,
                            kFilterWidthD12, 16, kInitSeedD12Five);
    } else {
        throw InvalidConfigError{
            "unknown scenario \"" + id + "\" (known: fig3, fig4, fig5, " +
            "fig6, fig7-top, fig7-bottom)"};
    }

    write_summary(em);
    return em.summary;
}

} // namespace ptyq
