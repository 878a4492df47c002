// Copyright 2026 The bosonbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonbound/serialize.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace bosonbound {

namespace {

template <typename T>
T field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string(what) + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string(what) + ": field '" + key + "' has the wrong type");
    }
}

double finite_number(const Json& j, const char* what) {
    if (!j.is_number()) {
        throw FormatError(std::string(what) + ": expected a number");
    }
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw FormatError(std::string(what) + ": non-finite value");
    }
    return x;
}

double finite_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string(what) + ": missing field '" + key + "'");
    }
    return finite_number(j.at(key), what);
}

std::string flag(bool checked, bool value) {
    if (!checked) return "na";
    return value ? "true" : "false";
}

Json json_flag(bool checked, bool value) {
    return checked ? Json(value) : Json(nullptr);
}

Json json_number(double x) {
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

Json component_to_json(const Component& c) {
    if (const auto* bs = std::get_if<Beamsplitter>(&c)) {
        return {{"type", "bs"}, {"modes", {bs->mode, bs->mode + 1}}, {"theta", bs->theta}, {"phi", bs->phi}};
    }
    const auto& ps = std::get<Phaseshifter>(c);
    return {{"type", "ps"}, {"mode", ps.mode}, {"phase", ps.phase}};
}

Component component_from_json(const Json& j) {
    const auto type = field<std::string>(j, "type", "network component");
    if (type == "bs") {
        const auto modes = field<std::vector<int>>(j, "modes", "beamsplitter");
        if (modes.size() != 2 || modes[1] != modes[0] + 1) {
            throw StructureError("beamsplitter: modes must be an adjacent pair [i, i+1]");
        }
        return Beamsplitter{modes[0], finite_field(j, "theta", "beamsplitter"), finite_field(j, "phi", "beamsplitter")};
    }
    if (type == "ps") {
        return Phaseshifter{field<int>(j, "mode", "phaseshifter"), finite_field(j, "phase", "phaseshifter")};
    }
    throw FormatError("network component: unknown type '" + type + "'");
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            entries.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    const auto rows = field<long long>(j, "rows", "matrix");
    const auto cols = field<long long>(j, "cols", "matrix");
    if (rows < 0 || cols < 0) {
        throw FormatError("matrix: negative dimension");
    }
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw FormatError("matrix: 'entries' must be an array");
    }
    const Json& entries = j.at("entries");
    if (entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw FormatError("matrix: expected " + std::to_string(rows * cols) + " entries, found " +
                          std::to_string(entries.size()));
    }
    ComplexMatrix m(rows, cols);
    std::size_t k = 0;
    for (Index i = 0; i < rows; ++i) {
        for (Index c = 0; c < cols; ++c, ++k) {
            const Json& e = entries[k];
            if (!e.is_array() || e.size() != 2) {
                throw FormatError("matrix: entry " + std::to_string(k) + " must be [re, im]");
            }
            m(i, c) = Complex(finite_number(e[0], "matrix entry"), finite_number(e[1], "matrix entry"));
        }
    }
    return m;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Json parse_json(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

Json lifted_to_json(const LiftedOperator& op) {
    Json j = matrix_to_json(op.matrix());
    j["m"] = op.modes();
    j["n"] = op.photons();
    j["ordering"] = "lex";
    return j;
}

Json network_to_json(const InterferometerNetwork& net) {
    Json layers = Json::array();
    for (const auto& layer : net.layers) {
        Json l = Json::array();
        for (const auto& c : layer) l.push_back(component_to_json(c));
        layers.push_back(std::move(l));
    }
    return {{"m", net.modes}, {"layers", std::move(layers)}, {"output_phases", net.output_phases}};
}

InterferometerNetwork network_from_json(const Json& j) {
    InterferometerNetwork net;
    net.modes = field<int>(j, "m", "network");
    if (!j.contains("layers") || !j.at("layers").is_array()) {
        throw FormatError("network: 'layers' must be an array");
    }
    for (const auto& layer : j.at("layers")) {
        if (!layer.is_array()) throw FormatError("network: each layer must be an array");
        Layer l;
        for (const auto& c : layer) l.push_back(component_from_json(c));
        net.layers.push_back(std::move(l));
    }
    if (j.contains("output_phases")) {
        if (!j.at("output_phases").is_array()) throw FormatError("network: 'output_phases' must be an array");
        for (const auto& p : j.at("output_phases")) net.output_phases.push_back(finite_number(p, "output phase"));
    }
    validate(net);
    return net;
}

Json noise_spec_to_json(const NoiseSpec& spec) {
    return {{"model", std::string(to_string(spec.model))}, {"epsilon", spec.epsilon}, {"seed", spec.seed}};
}

NoiseSpec noise_spec_from_json(const Json& j) {
    NoiseSpec spec;
    try {
        spec.model = parse_noise_model(field<std::string>(j, "model", "noise spec"));
    } catch (const ParameterError& e) {
        throw FormatError(std::string("noise spec: ") + e.what());
    }
    spec.epsilon = finite_field(j, "epsilon", "noise spec");
    spec.seed = field<std::uint64_t>(j, "seed", "noise spec");
    spec.validate();
    return spec;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_distribution_csv(std::ostream& out, const OutcomeDistribution& dist) {
    out << "outcome,probability\n";
    for (std::size_t k = 0; k < dist.size(); ++k) {
        out << dist.basis()[k].to_string() << ',' << format_double(dist[k]) << '\n';
    }
}

Json distribution_to_json(const OutcomeDistribution& dist) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < dist.size(); ++k) {
        rows.push_back({{"outcome", dist.basis()[k].to_string()}, {"probability", dist[k]}});
    }
    return {{"m", dist.modes()}, {"n", dist.photons()}, {"ordering", "lex"}, {"outcomes", std::move(rows)}};
}

std::string report_csv_row(int m, std::string_view model, double epsilon, std::uint64_t seed,
                           const DistanceReport& r) {
    std::ostringstream s;
    s << r.n << ',' << m << ',' << model << ',' << format_double(epsilon) << ',' << seed << ','
      << format_double(r.l1) << ',' << format_double(r.tv) << ',' << format_double(r.trace_dist) << ','
      << format_double(r.state_euclid) << ',' << format_double(r.op_dist_lifted) << ','
      << format_double(r.op_dist_base) << ',' << format_double(r.bound_rhs()) << ',' << flag(true, r.chain_ok())
      << ',' << flag(true, r.l1_paper_ok());
    return s.str();
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << kSweepCsvHeader << '\n';
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        out << row.n << ',' << row.m << ',' << row.model << ',' << format_double(row.epsilon) << ',' << row.seed
            << ',' << row.depth << ',' << format_double(r.l1) << ',' << format_double(r.tv) << ','
            << format_double(r.trace_dist) << ',' << format_double(r.state_euclid) << ','
            << format_double(r.op_dist_lifted) << ',' << format_double(r.op_dist_base) << ','
            << format_double(r.bound_rhs()) << ',' << format_double(row.ratio) << ','
            << flag(row.chain_checked, row.chain_ok) << ',' << flag(row.chain_checked, row.l1_paper_ok) << '\n';
    }
}

Json sweep_to_json(const SweepResult& result) {
    Json columns = Json::array();
    std::string_view header = kSweepCsvHeader;
    while (!header.empty()) {
        const auto comma = header.find(',');
        columns.push_back(std::string(header.substr(0, comma)));
        header = comma == std::string_view::npos ? std::string_view{} : header.substr(comma + 1);
    }
    Json rows = Json::array();
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        rows.push_back({{"n", row.n},
                        {"m", row.m},
                        {"model", row.model},
                        {"epsilon", row.epsilon},
                        {"seed", row.seed},
                        {"depth", row.depth},
                        {"l1", json_number(r.l1)},
                        {"tv", json_number(r.tv)},
                        {"trace", json_number(r.trace_dist)},
                        {"euclid", json_number(r.state_euclid)},
                        {"op_lifted", json_number(r.op_dist_lifted)},
                        {"op_base", json_number(r.op_dist_base)},
                        {"bound_rhs", json_number(r.bound_rhs())},
                        {"ratio", json_number(row.ratio)},
                        {"chain_ok", json_flag(row.chain_checked, row.chain_ok)},
                        {"l1_paper_ok", json_flag(row.chain_checked, row.l1_paper_ok)}});
    }
    return {{"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

}  // namespace bosonbound
