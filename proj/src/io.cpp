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

#include "ptyq/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ptyq {

namespace {

using nlohmann::json;

json meta_block(const MetaMap &meta) {
    json block = json::object();
    for (const auto &[key, value] : meta) {
        block[key] = value;
    }
    return block;
}

void write_meta_comments(std::ostream &out, const MetaMap &meta) {
    for (const auto &[key, value] : meta) {
        out << "# " << key << "=" << value << "\n";
    }
}

json parse(const std::string &text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        throw ParseError{"input is not valid JSON"};
    }
    return parsed;
}

const json &expect(const json &obj, const char *key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError{std::string{"missing key \""} + key + "\""};
    }
    return *it;
}

std::vector<double> real_array(const json &node, const char *key) {
    if (!node.is_array()) {
        throw ParseError{std::string{"key \""} + key + "\" is not an array"};
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto &entry : node) {
        if (!entry.is_number()) {
            throw ParseError{std::string{"key \""} + key +
                             "\" holds a non-numeric entry"};
        }
        const double value = entry.get<double>();
        if (!std::isfinite(value)) {
            throw ParseError{std::string{"key \""} + key +
                             "\" holds a non-finite entry"};
        }
        out.push_back(value);
    }
    return out;
}

} // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string state_to_json(const QuditState &state, const MetaMap &meta) {
    json doc;
    doc["dim"] = state.dim();
    json re = json::array();
    json im = json::array();
    for (std::size_t n = 0; n < state.dim(); ++n) {
        re.push_back(state[n].real());
        im.push_back(state[n].imag());
    }
    doc["re"] = std::move(re);
    doc["im"] = std::move(im);
    if (!meta.empty()) {
        doc["meta"] = meta_block(meta);
    }
    return doc.dump(2) + "\n";
}

QuditState state_from_json(const std::string &text) {
    const json doc = parse(text);
    if (!doc.is_object()) {
        throw ParseError{"state document is not a JSON object"};
    }
    const json &dim_node = expect(doc, "dim");
    if (!dim_node.is_number_unsigned()) {
        throw ParseError{"key \"dim\" is not a nonnegative integer"};
    }
    const std::size_t dim = dim_node.get<std::size_t>();
    const std::vector<double> re = real_array(expect(doc, "re"), "re");
    const std::vector<double> im = real_array(expect(doc, "im"), "im");
    if (re.size() != dim || im.size() != dim) {
        throw ParseError{"state arrays do not match \"dim\""};
    }
    CVec raw(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        raw[n] = Complex{re[n], im[n]};
    }
    try {
        return normalize(raw);
    } catch (const Error &e) {
        throw ParseError{std::string{"state is not normalizable: "} +
                         e.what()};
    }
}

std::string dataset_to_json(const PtychoDataset &dataset, const MetaMap &meta) {
    json doc;
    doc["dim"] = dataset.dim;
    doc["shifts"] = dataset.shifts;
    doc["alpha"] = dataset.alpha;
    doc["mode_plan"] = dataset.mode_plan.assignment();
    doc["compensated"] = dataset.compensated;
    if (dataset.shots) {
        doc["shots"] = *dataset.shots;
    } else {
        doc["shots"] = nullptr;
    }
    if (dataset.seed) {
        doc["seed"] = *dataset.seed;
    } else {
        doc["seed"] = nullptr;
    }
    doc["values"] = dataset.values.data();
    if (!meta.empty()) {
        doc["meta"] = meta_block(meta);
    }
    return doc.dump(2) + "\n";
}

PtychoDataset dataset_from_json(const std::string &text) {
    const json doc = parse(text);
    if (!doc.is_object()) {
        throw ParseError{"dataset document is not a JSON object"};
    }
    const json &dim_node = expect(doc, "dim");
    if (!dim_node.is_number_unsigned()) {
        throw ParseError{"key \"dim\" is not a nonnegative integer"};
    }
    const std::size_t dim = dim_node.get<std::size_t>();
    if (dim < 2) {
        throw ParseError{"key \"dim\" must be at least 2"};
    }

    const json &shifts_node = expect(doc, "shifts");
    if (!shifts_node.is_array() || shifts_node.empty()) {
        throw ParseError{"key \"shifts\" is not a nonempty array"};
    }
    std::vector<int> shifts;
    for (const auto &entry : shifts_node) {
        if (!entry.is_number_integer()) {
            throw ParseError{"key \"shifts\" holds a non-integer entry"};
        }
        shifts.push_back(entry.get<int>());
    }

    const json &alpha_node = expect(doc, "alpha");
    if (!alpha_node.is_number()) {
        throw ParseError{"key \"alpha\" is not a number"};
    }
    const double alpha = alpha_node.get<double>();
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw ParseError{"key \"alpha\" must be a positive number"};
    }

    const json &plan_node = expect(doc, "mode_plan");
    if (!plan_node.is_array()) {
        throw ParseError{"key \"mode_plan\" is not an array"};
    }
    std::vector<long long> assignment;
    for (const auto &entry : plan_node) {
        if (!entry.is_number_integer()) {
            throw ParseError{"key \"mode_plan\" holds a non-integer entry"};
        }
        assignment.push_back(entry.get<long long>());
    }

    const json &comp_node = expect(doc, "compensated");
    if (!comp_node.is_boolean()) {
        throw ParseError{"key \"compensated\" is not a boolean"};
    }

    std::optional<std::uint64_t> shots;
    if (const auto it = doc.find("shots");
        it != doc.end() && !it->is_null()) {
        if (!it->is_number_unsigned()) {
            throw ParseError{"key \"shots\" is not a nonnegative integer"};
        }
        shots = it->get<std::uint64_t>();
    }
    std::optional<std::uint64_t> seed;
    if (const auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_unsigned()) {
            throw ParseError{"key \"seed\" is not a nonnegative integer"};
        }
        seed = it->get<std::uint64_t>();
    }

    const std::vector<double> flat =
        real_array(expect(doc, "values"), "values");
    if (flat.size() != shifts.size() * dim) {
        throw ParseError{"key \"values\" must hold shifts*dim entries"};
    }
    for (const double value : flat) {
        if (value < 0.0) {
            throw ParseError{"key \"values\" holds a negative entry"};
        }
    }
    RealMatrix values(shifts.size(), dim);
    values.data() = flat;

    try {
        ModePlan plan{dim, std::move(assignment)};
        return PtychoDataset{dim,  std::move(shifts), alpha, std::move(plan),
                             comp_node.get<bool>(), shots, seed,
                             std::move(values)};
    } catch (const Error &e) {
        throw ParseError{std::string{"key \"mode_plan\" is invalid: "} +
                         e.what()};
    }
}

void write_spectrum_csv(std::ostream &out, const OamSpectrum &spectrum,
                        double alpha, const MetaMap &meta) {
    write_meta_comments(out, meta);
    const double peak = peak_normalization(spectrum, alpha);
    out << "ell,re,im,power,power_norm,envelope\n";
    for (const auto &[ell, amp] : spectrum.amplitudes()) {
        const double envelope = sinc_envelope(ell, alpha);
        out << ell << "," << format_double(amp.real()) << ","
            << format_double(amp.imag()) << ","
            << format_double(std::norm(amp)) << ","
            << format_double(std::norm(amp) / peak) << ","
            << format_double(envelope * envelope) << "\n";
    }
}

void write_slit_csv(std::ostream &out, const QuditState &state,
                    const MetaMap &meta) {
    write_meta_comments(out, meta);
    double peak = 0.0;
    for (std::size_t n = 0; n < state.dim(); ++n) {
        peak = std::max(peak, std::norm(state[n]));
    }
    out << "n,re,im,prob,prob_norm\n";
    for (std::size_t n = 0; n < state.dim(); ++n) {
        const double prob = std::norm(state[n]);
        out << n << "," << format_double(state[n].real()) << ","
            << format_double(state[n].imag()) << "," << format_double(prob)
            << "," << format_double(prob / peak) << "\n";
    }
}

void write_trace_csv(std::ostream &out, const PieResult &result,
                     const MetaMap &meta) {
    write_meta_comments(out, meta);
    out << "iteration,delta,fidelity\n";
    for (std::size_t i = 0; i < result.delta_trace.size(); ++i) {
        out << (i + 1) << "," << format_double(result.delta_trace[i]) << ",";
        if (i < result.fidelity_trace.size()) {
            out << format_double(result.fidelity_trace[i]);
        }
        out << "\n";
    }
}

namespace {

template <typename Writer> void write_csv_file(const std::string &path,
                                               Writer &&writer) {
    std::ofstream out{path};
    if (!out) {
        throw ParseError{"cannot open \"" + path + "\" for writing"};
    }
    writer(out);
    if (!out) {
        throw ParseError{"failed writing \"" + path + "\""};
    }
}

} // namespace

void write_spectrum_csv(const std::string &path, const OamSpectrum &spectrum,
                        double alpha, const MetaMap &meta) {
    write_csv_file(path, [&](std::ostream &out) {
        write_spectrum_csv(out, spectrum, alpha, meta);
    });
}

void write_slit_csv(const std::string &path, const QuditState &state,
                    const MetaMap &meta) {
    write_csv_file(path, [&](std::ostream &out) {
        write_slit_csv(out, state, meta);
    });
}

void write_trace_csv(const std::string &path, const PieResult &result,
                     const MetaMap &meta) {
    write_csv_file(path, [&](std::ostream &out) {
        write_trace_csv(out, result, meta);
    });
}

void write_state(const std::string &path, const QuditState &state,
                 const MetaMap &meta) {
    write_text_file(path, state_to_json(state, meta));
}

QuditState read_state(const std::string &path) {
    return state_from_json(read_text_file(path));
}

void write_dataset(const std::string &path, const PtychoDataset &dataset,
                   const MetaMap &meta) {
    write_text_file(path, dataset_to_json(dataset, meta));
}

PtychoDataset read_dataset(const std::string &path) {
    return dataset_from_json(read_text_file(path));
}

std::string read_text_file(const std::string &path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw ParseError{"cannot open \"" + path + "\" for reading"};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw ParseError{"failed reading \"" + path + "\""};
    }
    return buffer.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out{path, std::ios::binary};
    if (!out) {
        throw ParseError{"cannot open \"" + path + "\" for writing"};
    }
    out << content;
    if (!out) {
        throw ParseError{"failed writing \"" + path + "\""};
    }
}

} // namespace ptyq
