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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bosonbound/experiment.hpp"
#include "bosonbound/fock.hpp"
#include "bosonbound/interferometer.hpp"
#include "bosonbound/lift.hpp"
#include "bosonbound/noise.hpp"
#include "bosonbound/serialize.hpp"

namespace bosonbound::cli {

namespace {

// Raised for argument combinations CLI11 cannot express; reported as usage errors.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::size_t size_cap_from_env() {
    const char* raw = std::getenv("BOSONBOUND_SIZE_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultSizeCap;
    }
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(raw, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || raw[pos] != '\0' || value == 0) {
        throw UsageError(std::string("BOSONBOUND_SIZE_CAP must be a positive integer, got '") + raw + "'");
    }
    return static_cast<std::size_t>(value);
}

struct Common {
    std::string matrix_path;
    std::optional<int> modes;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, Common& c, bool with_format) {
    cmd->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
    if (with_format) {
        cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    }
}

void add_matrix_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--matrix", c.matrix_path, "Unitary in matrix JSON; a Haar draw is used when omitted");
    cmd->add_option("--modes", c.modes, "Mode count (required without --matrix)")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Seed for the Haar draw or sampler");
}

UnitaryMatrix load_unitary(const Common& c) {
    if (c.matrix_path.empty()) {
        if (!c.modes) {
            throw UsageError("either --matrix or --modes is required");
        }
        return haar_random_unitary(*c.modes, c.seed);
    }
    std::ifstream in(c.matrix_path);
    if (!in) {
        throw UsageError("cannot open matrix file '" + c.matrix_path + "'");
    }
    UnitaryMatrix u(matrix_from_json(parse_json(in)));
    if (c.modes && *c.modes != u.dim()) {
        throw UsageError("--modes " + std::to_string(*c.modes) + " does not match the " + std::to_string(u.dim()) +
                         "-mode matrix in '" + c.matrix_path + "'");
    }
    return u;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        throw UsageError("cannot write '" + c.out_path + "'");
    }
}

struct SweepArgs {
    std::vector<int> photons;
    std::vector<int> modes;
    std::vector<double> eps_list;
    std::optional<double> eps;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string model = "rotation";
    bool project = false;
    unsigned threads = 1;
};

void add_sweep_options(CLI::App* cmd, SweepArgs& s, bool with_model) {
    cmd->add_option("--photons", s.photons, "Photon counts, comma separated")->required()->delimiter(',');
    cmd->add_option("--modes", s.modes, "Mode counts, comma separated")->required()->delimiter(',');
    cmd->add_option("--epsilon-list", s.eps_list, "Noise levels, comma separated")->delimiter(',');
    cmd->add_option("--epsilon", s.eps, "Single noise level");
    cmd->add_option("--trials", s.trials, "Trials per (n, m, epsilon) cell");
    cmd->add_option("--seed", s.seed, "Master seed");
    cmd->add_option("--threads", s.threads, "Worker threads (0: all hardware threads)");
    if (with_model) {
        cmd->add_option("--noise-model", s.model, "Noise model")
            ->check(CLI::IsMember({"rotation", "gaussian", "component"}));
        cmd->add_flag("--project-unitary", s.project, "Project gaussian noise onto the nearest unitary");
    }
}

SweepConfig sweep_config(const SweepArgs& s, std::size_t cap) {
    SweepConfig cfg;
    cfg.n_values = s.photons;
    cfg.m_values = s.modes;
    if (s.eps && !s.eps_list.empty()) {
        throw UsageError("--epsilon and --epsilon-list are mutually exclusive");
    }
    if (s.eps) {
        cfg.eps_values = {*s.eps};
    } else if (!s.eps_list.empty()) {
        cfg.eps_values = s.eps_list;
    } else {
        throw UsageError("one of --epsilon or --epsilon-list is required");
    }
    cfg.trials_per_cell = s.trials;
    cfg.noise_model = parse_noise_model(s.model);
    cfg.project_unitary = s.project;
    cfg.master_seed = s.seed;
    cfg.size_cap = cap;
    cfg.threads = s.threads;
    if (cfg.project_unitary && cfg.noise_model != NoiseModel::gaussian) {
        throw UsageError("--project-unitary only applies to --noise-model gaussian");
    }
    return cfg;
}

int finish_sweep(const Common& c, const SweepResult& result, std::ostream& out, std::ostream& err) {
    std::ostringstream text;
    if (c.format == "json") {
        text << sweep_to_json(result).dump(2) << '\n';
    } else {
        write_sweep_csv(text, result);
    }
    emit(c, text.str(), out);
    err << "rows: " << result.rows.size() << ", chain violations: " << result.chain_violations
        << ", network-bound violations: " << result.network_bound_violations
        << ", unhalved-l1 violations (not asserted): " << result.l1_paper_violations
        << ", unchecked non-unitary rows: " << result.unchecked_rows << '\n';
    return sweep_exit_code(result);
}

}  // namespace

int sweep_exit_code(const SweepResult& result) {
    return result.ok() ? kExitOk : kExitViolation;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bosonbound: BosonSampling simulator and noise-bound laboratory", "bosonbound"};
    app.require_subcommand(1);

    Common common;
    SweepArgs sweep;
    int photons = 0;
    std::size_t count = 1;
    bool distinguishable = false;
    double epsilon = 0.0;
    int trials = 0;

    auto* dist = app.add_subcommand("dist", "Print the output distribution of |1_n> through a unitary");
    add_matrix_options(dist, common);
    add_output_options(dist, common, true);
    dist->add_option("--photons", photons, "Photon count n")->required()->check(CLI::NonNegativeNumber);
    dist->add_flag("--distinguishable", distinguishable, "Distinguishable particles instead of bosons");

    auto* sample = app.add_subcommand("sample", "Draw outcomes from the output distribution");
    add_matrix_options(sample, common);
    add_output_options(sample, common, true);
    sample->add_option("--photons", photons, "Photon count n")->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--count", count, "Number of samples");

    auto* lift_cmd = app.add_subcommand("lift", "Print the n-photon lifted operator as matrix JSON");
    add_matrix_options(lift_cmd, common);
    add_output_options(lift_cmd, common, false);
    lift_cmd->add_option("--photons", photons, "Photon count n")->required()->check(CLI::NonNegativeNumber);

    auto* decompose_cmd = app.add_subcommand("decompose", "Print the rectangular mesh of a unitary as network JSON");
    add_matrix_options(decompose_cmd, common);
    add_output_options(decompose_cmd, common, false);

    auto* sweep_cmd = app.add_subcommand("sweep", "Bound-verification sweep over (n, m, epsilon, trial)");
    add_sweep_options(sweep_cmd, sweep, true);
    add_output_options(sweep_cmd, common, true);

    auto* component_cmd = app.add_subcommand("component-sweep", "Per-component noise sweep through the mesh");
    add_sweep_options(component_cmd, sweep, false);
    add_output_options(component_cmd, common, true);

    auto* tight_cmd = app.add_subcommand("tightness", "Largest observed l1 / (n op_base) under rotation noise");
    tight_cmd->add_option("--photons", photons, "Photon count n")->required();
    tight_cmd->add_option("--modes", common.modes, "Mode count m")->required();
    tight_cmd->add_option("--epsilon", epsilon, "Operator-distance noise level")->required();
    tight_cmd->add_option("--trials", trials, "Trial count")->required();
    tight_cmd->add_option("--seed", common.seed, "Seed");
    add_output_options(tight_cmd, common, true);

    auto* gauss_cmd = app.add_subcommand("gauss-norm", "Median ||G||_op / sqrt(m) for complex Gaussian G");
    gauss_cmd->add_option("--modes", common.modes, "Mode count m")->required();
    gauss_cmd->add_option("--trials", trials, "Trial count")->required();
    gauss_cmd->add_option("--seed", common.seed, "Seed");
    add_output_options(gauss_cmd, common, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::size_t cap = size_cap_from_env();
        std::ostringstream text;

        if (dist->parsed()) {
            const UnitaryMatrix u = load_unitary(common);
            const auto d = distinguishable ? distinguishable_distribution(u, photons, cap)
                                           : output_distribution(u, photons, cap);
            if (common.format == "json") {
                text << distribution_to_json(d).dump(2) << '\n';
            } else {
                write_distribution_csv(text, d);
            }
        } else if (sample->parsed()) {
            const UnitaryMatrix u = load_unitary(common);
            const auto draws = sample_outcome(output_distribution(u, photons, cap), common.seed, count);
            if (common.format == "json") {
                Json j = Json::array();
                for (const auto& s : draws) j.push_back(s.to_string());
                text << Json{{"samples", std::move(j)}}.dump(2) << '\n';
            } else {
                text << "outcome\n";
                for (const auto& s : draws) text << s.to_string() << '\n';
            }
        } else if (lift_cmd->parsed()) {
            text << lifted_to_json(lift(load_unitary(common), photons, cap)).dump(2) << '\n';
        } else if (decompose_cmd->parsed()) {
            text << network_to_json(decompose(load_unitary(common))).dump(2) << '\n';
        } else if (sweep_cmd->parsed()) {
            return finish_sweep(common, run_sweep(sweep_config(sweep, cap)), out, err);
        } else if (component_cmd->parsed()) {
            SweepConfig cfg = sweep_config(sweep, cap);
            cfg.noise_model = NoiseModel::component;
            return finish_sweep(common, run_component_sweep(cfg), out, err);
        } else if (tight_cmd->parsed()) {
            const auto r = tightness_probe(photons, *common.modes, epsilon, trials, common.seed, cap);
            if (common.format == "json") {
                text << Json{{"n", photons},
                             {"m", *common.modes},
                             {"epsilon", epsilon},
                             {"trials", trials},
                             {"trials_used", r.trials_used},
                             {"max_ratio", r.max_ratio},
                             {"argmax_seed", r.argmax_seed}}
                            .dump(2)
                     << '\n';
            } else {
                text << "n,m,epsilon,trials,trials_used,max_ratio,argmax_seed\n"
                     << photons << ',' << *common.modes << ',' << format_double(epsilon) << ',' << trials << ','
                     << r.trials_used << ',' << format_double(r.max_ratio) << ',' << r.argmax_seed << '\n';
            }
        } else if (gauss_cmd->parsed()) {
            const double stat = gaussian_opnorm_stat(*common.modes, trials, common.seed);
            if (common.format == "json") {
                text << Json{{"m", *common.modes}, {"trials", trials}, {"seed", common.seed}, {"median_ratio", stat}}
                            .dump(2)
                     << '\n';
            } else {
                text << "m,trials,seed,median_ratio\n"
                     << *common.modes << ',' << trials << ',' << common.seed << ',' << format_double(stat) << '\n';
            }
        }
        emit(common, text.str(), out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace bosonbound::cli
