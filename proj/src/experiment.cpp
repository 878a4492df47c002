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

#include "bosonbound/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "bosonbound/interferometer.hpp"
#include "bosonbound/random.hpp"

namespace bosonbound {

namespace {

constexpr double kNetworkSlack = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Task {
    int n;
    int m;
    std::size_t eps_index;
    int trial;
};

std::vector<Task> plan(const SweepConfig& cfg) {
    std::vector<Task> tasks;
    for (const auto& [n, m] : cfg.cells()) {
        for (std::size_t e = 0; e < cfg.eps_values.size(); ++e) {
            for (int t = 0; t < cfg.trials_per_cell; ++t) {
                tasks.push_back({n, m, e, t});
            }
        }
    }
    return tasks;
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Exceptions are
// rethrown for the lowest failing index so failures are deterministic too.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

void fill_ratio_and_flags(SweepRow& row) {
    row.chain_ok = row.report.chain_ok();
    row.l1_paper_ok = row.report.l1_paper_ok();
    row.ratio = bound_ratio(row.report);
}

SweepRow run_whole_matrix_trial(const SweepConfig& cfg, const Task& task) {
    SweepRow row;
    row.n = task.n;
    row.m = task.m;
    row.epsilon = cfg.eps_values[task.eps_index];
    row.seed = trial_seed(cfg.master_seed, task.n, task.m, task.eps_index, task.trial);
    const UnitaryMatrix u = haar_random_unitary(task.m, mix_seed(row.seed, 0));
    const std::uint64_t noise_seed = mix_seed(row.seed, 1);
    const BosonState psi0 = BosonState::input(task.m, task.n);

    if (cfg.noise_model == NoiseModel::rotation) {
        row.model = "rotation";
        const UnitaryMatrix ut = perturb_unitary(u, row.epsilon, noise_seed);
        row.report = chain_report(u, ut, task.n, psi0, cfg.size_cap);
        fill_ratio_and_flags(row);
        return row;
    }

    const ComplexMatrix noisy = gaussian_perturb(u, row.epsilon, noise_seed);
    if (cfg.project_unitary) {
        row.model = "gaussian-projected";
        const UnitaryMatrix ut = nearest_unitary(noisy);
        row.report = chain_report(u, ut, task.n, psi0, cfg.size_cap);
        fill_ratio_and_flags(row);
        return row;
    }
    row.model = "gaussian-raw";
    row.report.n = task.n;
    row.report.l1 = row.report.tv = row.report.state_euclid = row.report.trace_dist = kNaN;
    row.report.op_dist_lifted = kNaN;
    row.report.op_dist_base = operator_distance(noisy, u.matrix());
    row.chain_checked = false;
    row.ratio = kNaN;
    return row;
}

SweepRow run_network_trial(const SweepConfig& cfg, const Task& task) {
    SweepRow row;
    row.n = task.n;
    row.m = task.m;
    row.model = "component";
    row.epsilon = cfg.eps_values[task.eps_index];
    row.seed = trial_seed(cfg.master_seed, task.n, task.m, task.eps_index, task.trial);
    const UnitaryMatrix u = haar_random_unitary(task.m, mix_seed(row.seed, 0));
    const InterferometerNetwork net = decompose(u);
    const UnitaryMatrix ut = compose(perturb_network(net, row.epsilon, mix_seed(row.seed, 1)));
    row.depth = net.depth();
    row.component_count = net.component_count();
    row.report = chain_report(u, ut, task.n, BosonState::input(task.m, task.n), cfg.size_cap);
    fill_ratio_and_flags(row);
    row.network_bound_ok =
        row.report.op_dist_base <= static_cast<double>(row.depth) * row.epsilon + kNetworkSlack;
    return row;
}

template <typename Trial>
SweepResult run_tasks(const SweepConfig& cfg, Trial trial) {
    const auto tasks = plan(cfg);
    SweepResult result;
    result.rows.resize(tasks.size());
    parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) { result.rows[i] = trial(cfg, tasks[i]); });
    for (const auto& row : result.rows) {
        if (!row.chain_checked) {
            ++result.unchecked_rows;
        } else {
            if (!row.chain_ok) ++result.chain_violations;
            if (!row.l1_paper_ok) ++result.l1_paper_violations;
        }
        if (!row.network_bound_ok) ++result.network_bound_violations;
    }
    return result;
}

}  // namespace

std::vector<std::pair<int, int>> SweepConfig::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int n : n_values) {
        for (int m : m_values) {
            if (n <= m) out.emplace_back(n, m);
        }
    }
    return out;
}

void SweepConfig::validate() const {
    if (n_values.empty() || m_values.empty() || eps_values.empty()) {
        throw ParameterError("sweep: photon, mode and epsilon lists must be non-empty");
    }
    for (int n : n_values) {
        if (n < 1 || n > kMaxFactorial) {
            throw ParameterError("sweep: photon count " + std::to_string(n) + " outside [1, " +
                                 std::to_string(kMaxFactorial) + "]");
        }
    }
    for (int m : m_values) {
        if (m < 1) throw ParameterError("sweep: mode count " + std::to_string(m) + " must be >= 1");
    }
    if (trials_per_cell < 1) {
        throw ParameterError("sweep: trials per cell must be >= 1");
    }
    for (double eps : eps_values) {
        NoiseSpec{noise_model, eps, 0}.validate();
    }
    const auto grid = cells();
    if (grid.empty()) {
        throw ParameterError("sweep: every (n, m) cell has n > m; nothing to run");
    }
    for (const auto& [n, m] : grid) {
        const std::uint64_t dim = multiset_count(m, n);
        if (dim > size_cap) {
            throw ParameterError("sweep: cell (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                 ") has Fock dimension " + std::to_string(dim) + " above size cap " +
                                 std::to_string(size_cap));
        }
    }
}

std::uint64_t trial_seed(std::uint64_t master, int n, int m, std::size_t eps_index, int trial) {
    return mix_seed(master, n, m, eps_index, trial);
}

double bound_ratio(const DistanceReport& report) {
    const double rhs = report.bound_rhs();
    return rhs > 0.0 ? report.l1 / rhs : 0.0;
}

SweepResult run_bound_sweep(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.noise_model == NoiseModel::component) {
        throw ParameterError("run_bound_sweep: the component model runs through run_component_sweep");
    }
    return run_tasks(cfg, run_whole_matrix_trial);
}

SweepResult run_component_sweep(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.noise_model != NoiseModel::component) {
        throw ParameterError("run_component_sweep: noise model must be component");
    }
    return run_tasks(cfg, run_network_trial);
}

SweepResult run_sweep(const SweepConfig& cfg) {
    return cfg.noise_model == NoiseModel::component ? run_component_sweep(cfg) : run_bound_sweep(cfg);
}

TightnessResult tightness_probe(int n, int m, double eps, int trials, std::uint64_t seed, std::size_t cap) {
    SweepConfig cell;
    cell.n_values = {n};
    cell.m_values = {m};
    cell.eps_values = {eps};
    cell.trials_per_cell = trials;
    cell.size_cap = cap;
    cell.validate();
    const BosonState psi0 = BosonState::input(m, n);
    TightnessResult out;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = mix_seed(seed, t);
        const UnitaryMatrix u = haar_random_unitary(m, mix_seed(s, 0));
        const UnitaryMatrix ut = perturb_unitary(u, eps, mix_seed(s, 1));
        const DistanceReport r = chain_report(u, ut, n, psi0, cap);
        if (!(r.bound_rhs() > 0.0)) continue;
        const double ratio = r.l1 / r.bound_rhs();
        if (out.trials_used == 0 || ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.argmax_seed = s;
        }
        ++out.trials_used;
    }
    return out;
}

}  // namespace bosonbound
