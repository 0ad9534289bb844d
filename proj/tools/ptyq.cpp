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

// Command-line front end. Subcommands: synth, spectrum, measure,
// reconstruct, reproduce. Exit codes: 0 success, 2 validation error,
// 3 numerical failure (non-convergence when a threshold was requested).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptyq/angular.hpp"
#include "ptyq/catalog.hpp"
#include "ptyq/errors.hpp"
#include "ptyq/io.hpp"
#include "ptyq/measure.hpp"
#include "ptyq/pie.hpp"
#include "ptyq/qudit.hpp"
#include "ptyq/scenario.hpp"
#include "ptyq/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Accepts "0.157", "pi", "pi/20", "3*pi/20", case-insensitive.
double parse_angle(const std::string &text) {
    std::string s;
    for (const char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += static_cast<char>(
                std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (s.empty()) {
        throw ptyq::InvalidConfigError{"empty angle"};
    }
    const std::size_t pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        const double value = std::stod(s, &used);
        if (used != s.size()) {
            throw ptyq::InvalidConfigError{"cannot parse angle \"" + text +
                                           "\""};
        }
        return value;
    }
    double numerator = 1.0;
    if (pi_pos > 0) {
        if (s[pi_pos - 1] != '*') {
            throw ptyq::InvalidConfigError{"cannot parse angle \"" + text +
                                           "\""};
        }
        numerator = std::stod(s.substr(0, pi_pos - 1));
    }
    double denominator = 1.0;
    const std::size_t rest = pi_pos + 2;
    if (rest < s.size()) {
        if (s[rest] != '/') {
            throw ptyq::InvalidConfigError{"cannot parse angle \"" + text +
                                           "\""};
        }
        denominator = std::stod(s.substr(rest + 1));
        if (denominator == 0.0) {
            throw ptyq::InvalidConfigError{"zero denominator in angle"};
        }
    }
    return numerator * std::numbers::pi / denominator;
}

ptyq::Complex parse_complex(const std::string &token) {
    std::string s;
    for (const char c : token) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw ptyq::InvalidConfigError{"empty amplitude entry"};
    }
    const bool imaginary = (s.back() == 'i' || s.back() == 'I' ||
                            s.back() == 'j' || s.back() == 'J');
    if (!imaginary) {
        std::size_t used = 0;
        const double value = std::stod(s, &used);
        if (used != s.size()) {
            throw ptyq::InvalidConfigError{"cannot parse amplitude \"" +
                                           token + "\""};
        }
        return ptyq::Complex{value, 0.0};
    }
    s.pop_back();
    // Split at the last top-level +/- (one not directly after an
    // exponent marker and not leading).
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' &&
            s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_part = [&token](std::string part) {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        std::size_t used = 0;
        const double value = std::stod(part, &used);
        if (used != part.size()) {
            throw ptyq::InvalidConfigError{"cannot parse amplitude \"" +
                                           token + "\""};
        }
        return value;
    };
    if (split == std::string::npos) {
        return ptyq::Complex{0.0, parse_part(s)};
    }
    return ptyq::Complex{parse_part(s.substr(0, split)),
                         parse_part(s.substr(split))};
}

template <typename T>
std::vector<T> split_list(const std::string &text, T (*convert)(
                                                       const std::string &)) {
    std::vector<T> out;
    std::stringstream stream{text};
    std::string token;
    while (std::getline(stream, token, ',')) {
        out.push_back(convert(token));
    }
    if (out.empty()) {
        throw ptyq::InvalidConfigError{"empty list \"" + text + "\""};
    }
    return out;
}

int parse_shift(const std::string &token) {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) {
        throw ptyq::InvalidConfigError{"cannot parse shift \"" + token +
                                       "\""};
    }
    return value;
}

std::string join_ints(const std::vector<int> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(values[i]);
    }
    return out;
}

void write_json_or_stdout(const std::string &path,
                          const std::string &content) {
    if (path == "-") {
        std::cout << content;
    } else {
        ptyq::write_text_file(path, content);
    }
}

std::string trim(const std::string &text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end &&
           std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return text.substr(begin, end - begin);
}

std::string unquote(const std::string &text) {
    if (text.size() >= 2 &&
        ((text.front() == '"' && text.back() == '"') ||
         (text.front() == '\'' && text.back() == '\''))) {
        return text.substr(1, text.size() - 2);
    }
    return text;
}

// Flat key=value config support. Values from the file are appended as
// long options for whatever was not already given on the command line,
// so the precedence is flags, then file, then built-in defaults. The
// first occurrence of a key wins within the file.
void inject_config_defaults(std::vector<std::string> &args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(std::string{"--config="}.size());
            break;
        }
    }
    if (path.empty()) {
        return;
    }
    std::istringstream lines{ptyq::read_text_file(path)};
    std::string line;
    while (std::getline(lines, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') {
            continue;
        }
        if (stripped[0] == '[') {
            throw ptyq::ParseError{
                "config file " + path +
                " uses sections; only flat key=value lines are supported"};
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ptyq::ParseError{"config line \"" + stripped +
                                   "\" is not key=value"};
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = unquote(trim(stripped.substr(eq + 1)));
        if (key.empty() || key == "config") {
            throw ptyq::ParseError{"config line \"" + stripped +
                                   "\" has a bad key"};
        }
        const std::string flag = "--" + key;
        bool given_on_cli = false;
        for (const std::string &token : args) {
            if (token == flag || token.rfind(flag + "=", 0) == 0) {
                given_on_cli = true;
                break;
            }
        }
        if (given_on_cli) {
            continue;
        }
        if (key == "raw") { // the only pure flag; no value token follows
            if (value == "true" || value == "1" || value == "yes") {
                args.push_back(flag);
            } else if (value != "false" && value != "0" && value != "no") {
                throw ptyq::ParseError{"config value for raw must be a "
                                       "boolean, got \"" +
                                       value + "\""};
            }
            continue;
        }
        args.push_back(flag);
        args.push_back(value);
    }
}

struct SynthArgs {
    std::size_t dim = 0;
    std::string preset;
    std::string amplitudes;
    std::optional<std::uint64_t> random_seed;
    std::string out = "-";
};

int run_synth(const SynthArgs &args) {
    int sources = 0;
    sources += args.preset.empty() ? 0 : 1;
    sources += args.amplitudes.empty() ? 0 : 1;
    sources += args.random_seed ? 1 : 0;
    if (sources != 1) {
        throw ptyq::InvalidConfigError{
            "choose exactly one of --preset, --amplitudes, --random"};
    }
    ptyq::MetaMap meta{{"tool", ptyq::kToolName},
                       {"version", ptyq::kVersion},
                       {"command", "synth"},
                       {"dim", std::to_string(args.dim)}};
    ptyq::QuditState state = [&] {
        if (!args.preset.empty()) {
            meta.push_back({"preset", args.preset});
            return ptyq::reference_state(args.dim, args.preset);
        }
        if (args.random_seed) {
            meta.push_back({"random_seed",
                            std::to_string(*args.random_seed)});
            return ptyq::random_reference_state(args.dim, *args.random_seed);
        }
        meta.push_back({"amplitudes", args.amplitudes});
        const ptyq::CVec raw = split_list(args.amplitudes, parse_complex);
        if (raw.size() != args.dim) {
            throw ptyq::InvalidConfigError{
                std::to_string(raw.size()) + " amplitudes given for dim " +
                std::to_string(args.dim)};
        }
        return ptyq::normalize(raw);
    }();
    write_json_or_stdout(args.out, ptyq::state_to_json(state, meta));
    return kExitOk;
}

struct SpectrumArgs {
    std::string state_file;
    std::string alpha = "pi/10";
    long long window = -1; // negative means the default central lobe
    std::string out = "-";
    std::string slit_out;
};

int run_spectrum(const SpectrumArgs &args) {
    const ptyq::QuditState state = ptyq::read_state(args.state_file);
    const double alpha = parse_angle(args.alpha);
    const ptyq::ApertureSpec aperture =
        ptyq::ApertureSpec::make(state.dim(), alpha, state.amplitudes());
    const long long halfwidth =
        args.window >= 0 ? args.window
                         : ptyq::default_window_halfwidth(alpha);
    const ptyq::OamSpectrum spectrum =
        ptyq::oam_spectrum(state, aperture, -halfwidth, halfwidth);
    const ptyq::MetaMap meta{{"tool", ptyq::kToolName},
                             {"version", ptyq::kVersion},
                             {"command", "spectrum"},
                             {"state_file", args.state_file},
                             {"dim", std::to_string(state.dim())},
                             {"alpha", ptyq::format_double(alpha)},
                             {"window", std::to_string(halfwidth)}};
    if (args.out == "-") {
        ptyq::write_spectrum_csv(std::cout, spectrum, alpha, meta);
    } else {
        ptyq::write_spectrum_csv(args.out, spectrum, alpha, meta);
    }
    if (!args.slit_out.empty()) {
        ptyq::write_slit_csv(args.slit_out, state, meta);
    }
    return kExitOk;
}

struct MeasureArgs {
    std::string state_file;
    std::string shifts;
    std::string alpha = "pi/10";
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    bool raw = false;
    std::string filter_width;
    std::string out = "-";
};

int run_measure(const MeasureArgs &args) {
    const ptyq::QuditState state = ptyq::read_state(args.state_file);
    const double alpha = parse_angle(args.alpha);
    const std::vector<int> shifts =
        args.shifts.empty() ? ptyq::full_shifts(state.dim())
                            : split_list(args.shifts, parse_shift);
    std::optional<double> filter_width;
    if (!args.filter_width.empty()) {
        filter_width = parse_angle(args.filter_width);
    }
    const ptyq::ProjectorFamily family =
        ptyq::make_family(state.dim(), shifts, filter_width);
    const ptyq::ModePlan plan = ptyq::select_modes(state.dim());
    const ptyq::PtychoDataset dataset = ptyq::simulate_dataset(
        state, family, plan, alpha, args.shots, args.seed, !args.raw);
    ptyq::MetaMap meta{{"tool", ptyq::kToolName},
                       {"version", ptyq::kVersion},
                       {"command", "measure"},
                       {"state_file", args.state_file},
                       {"dim", std::to_string(state.dim())},
                       {"alpha", ptyq::format_double(alpha)},
                       {"shifts", join_ints(shifts)},
                       {"compensated", args.raw ? "false" : "true"}};
    if (dataset.shots) {
        meta.push_back({"shots", std::to_string(*dataset.shots)});
    }
    if (dataset.seed) {
        meta.push_back({"seed", std::to_string(*dataset.seed)});
    }
    write_json_or_stdout(args.out, ptyq::dataset_to_json(dataset, meta));
    return kExitOk;
}

struct ReconstructArgs {
    std::string dataset_file;
    double eta = 1.5;
    std::size_t iterations = 8;
    std::optional<double> threshold;
    std::uint64_t seed = 0;
    std::string target_file;
    std::string out = "-";
    std::string trace_out;
};

int run_reconstruct(const ReconstructArgs &args) {
    const ptyq::PtychoDataset dataset =
        ptyq::read_dataset(args.dataset_file);
    const ptyq::ProjectorFamily family =
        ptyq::make_family(dataset.dim, dataset.shifts);
    ptyq::PieConfig config;
    config.eta = args.eta;
    config.max_iterations = args.iterations;
    config.delta_threshold = args.threshold;
    config.seed = args.seed;
    if (!args.target_file.empty()) {
        config.track_target = ptyq::read_state(args.target_file);
    }
    const ptyq::PieResult result =
        ptyq::reconstruct(dataset, family, config);

    ptyq::MetaMap meta{
        {"tool", ptyq::kToolName},
        {"version", ptyq::kVersion},
        {"command", "reconstruct"},
        {"dataset_file", args.dataset_file},
        {"eta", ptyq::format_double(args.eta)},
        {"max_iterations", std::to_string(args.iterations)},
        {"seed", std::to_string(args.seed)},
        {"iterations_run", std::to_string(result.iterations_run)},
        {"final_delta", ptyq::format_double(result.delta_trace.back())},
        {"converged", result.converged ? "true" : "false"}};
    if (args.threshold) {
        meta.push_back({"threshold", ptyq::format_double(*args.threshold)});
    }
    if (!args.target_file.empty()) {
        meta.push_back({"target_file", args.target_file});
        meta.push_back({"final_fidelity",
                        ptyq::format_double(result.fidelity_trace.back())});
    }

    write_json_or_stdout(args.out,
                         ptyq::state_to_json(result.estimate, meta));
    if (!args.trace_out.empty()) {
        ptyq::write_trace_csv(args.trace_out, result, meta);
    }
    if (args.threshold && !result.converged) {
        std::cerr << "ptyq: did not reach delta threshold "
                  << ptyq::format_double(*args.threshold) << " within "
                  << args.iterations << " iterations\n";
        return kExitNumerical;
    }
    return kExitOk;
}

struct ReproduceArgs {
    std::string id;
    std::string outdir = ".";
};

int run_reproduce(const ReproduceArgs &args) {
    const ptyq::ScenarioSummary summary =
        ptyq::reproduce_figure(args.id, args.outdir);
    std::cout << summary.id << ": " << summary.files_written.size()
              << " files in " << args.outdir << "\n";
    for (const ptyq::ScenarioCase &c : summary.cases) {
        std::cout << "  " << c.name << ": fidelity "
                  << ptyq::format_double(c.final_fidelity) << ", delta "
                  << ptyq::format_double(c.final_delta) << " after "
                  << c.iterations << " iterations\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"angular-qudit ptychography simulator"};
    app.set_version_flag("--version", std::string{ptyq::kVersion});
    app.require_subcommand(1);

    SynthArgs synth_args;
    CLI::App *synth = app.add_subcommand(
        "synth", "Synthesize a qudit state and write it as JSON");
    synth->add_option("--config", "Flat key=value config file (flags win)");
    synth->add_option("--dim", synth_args.dim, "State dimension (>= 2)")
        ->required();
    synth->add_option("--preset", synth_args.preset,
                      "Bundled reference state: a, b, or c (dims 5 and 12)");
    synth->add_option("--amplitudes", synth_args.amplitudes,
                      "Comma-separated amplitudes, e.g. 1,0,0 or 0.5+0.5i,...");
    synth->add_option("--random", synth_args.random_seed,
                      "Draw a random state from this seed");
    synth->add_option("--out", synth_args.out,
                      "Output file (default: stdout)");

    SpectrumArgs spectrum_args;
    CLI::App *spectrum = app.add_subcommand(
        "spectrum", "Expand a state over OAM modes and write CSV");
    spectrum->add_option("--config", "Flat key=value config file (flags win)");
    spectrum->add_option("--state", spectrum_args.state_file,
                         "State JSON file")
        ->required();
    spectrum->add_option("--alpha", spectrum_args.alpha,
                         "Slit width in radians (accepts pi/10 forms)");
    spectrum->add_option("--window", spectrum_args.window,
                         "Mode window half-width (default: central lobe)");
    spectrum->add_option("--out", spectrum_args.out,
                         "Spectrum CSV file (default: stdout)");
    spectrum->add_option("--slit-out", spectrum_args.slit_out,
                         "Also write the slit-basis distribution CSV here");

    MeasureArgs measure_args;
    CLI::App *measure = app.add_subcommand(
        "measure", "Simulate the ptychographic measurement of a state");
    measure->add_option("--config", "Flat key=value config file (flags win)");
    measure->add_option("--state", measure_args.state_file,
                        "State JSON file")
        ->required();
    measure->add_option("--shifts", measure_args.shifts,
                        "Comma-separated projector shifts (default: 0..D-1)");
    measure->add_option("--alpha", measure_args.alpha,
                        "Slit width in radians (accepts pi/10 forms)");
    measure->add_option("--shots", measure_args.shots,
                        "Poisson shot count per setting (default: noiseless)");
    measure->add_option("--seed", measure_args.seed,
                        "Shot-noise RNG seed (default 0 when --shots set)");
    measure->add_flag("--raw", measure_args.raw,
                      "Skip diffraction-envelope compensation");
    measure->add_option("--filter-width", measure_args.filter_width,
                        "Spatial-filter slit width metadata (radians)");
    measure->add_option("--out", measure_args.out,
                        "Dataset JSON file (default: stdout)");

    ReconstructArgs reconstruct_args;
    CLI::App *reconstruct = app.add_subcommand(
        "reconstruct", "Run the iterative engine on a dataset");
    reconstruct->add_option("--config", "Flat key=value config file (flags win)");
    reconstruct
        ->add_option("--dataset", reconstruct_args.dataset_file,
                     "Dataset JSON file")
        ->required();
    reconstruct->add_option("--eta", reconstruct_args.eta,
                            "Feedback step size in (0, 2]");
    reconstruct->add_option("--iterations", reconstruct_args.iterations,
                            "Iteration budget");
    reconstruct->add_option("--threshold", reconstruct_args.threshold,
                            "Stop when delta falls below this value");
    reconstruct->add_option("--seed", reconstruct_args.seed,
                            "Seed for the random initial estimate");
    reconstruct->add_option("--target", reconstruct_args.target_file,
                            "Target state JSON for fidelity tracking");
    reconstruct->add_option("--out", reconstruct_args.out,
                            "Estimate JSON file (default: stdout)");
    reconstruct->add_option("--trace", reconstruct_args.trace_out,
                            "Per-iteration trace CSV file");

    ReproduceArgs reproduce_args;
    CLI::App *reproduce = app.add_subcommand(
        "reproduce", "Run a bundled end-to-end scenario");
    reproduce
        ->add_option("id", reproduce_args.id,
                     "Scenario id: fig3, fig4, fig5, fig6, fig7-top, "
                     "fig7-bottom")
        ->required();
    reproduce->add_option("--outdir", reproduce_args.outdir,
                          "Output directory (default: current)");

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    try {
        inject_config_defaults(args);
    } catch (const ptyq::Error &e) {
        std::cerr << "ptyq: " << e.what() << "\n";
        return kExitValidation;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (synth->parsed()) {
            return run_synth(synth_args);
        }
        if (spectrum->parsed()) {
            return run_spectrum(spectrum_args);
        }
        if (measure->parsed()) {
            return run_measure(measure_args);
        }
        if (reconstruct->parsed()) {
            return run_reconstruct(reconstruct_args);
        }
        if (reproduce->parsed()) {
            return run_reproduce(reproduce_args);
        }
    } catch (const ptyq::Error &e) {
        std::cerr << "ptyq: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "ptyq: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
