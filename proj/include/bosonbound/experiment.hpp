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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bosonbound/lift.hpp"
#include "bosonbound/metrics.hpp"
#include "bosonbound/noise.hpp"

namespace bosonbound {

struct SweepConfig {
    std::vector<int> n_values;
    std::vector<int> m_values;
    std::vector<double> eps_values;
    int trials_per_cell = 1;
    NoiseModel noise_model = NoiseModel::rotation;
    /// Gaussian model only: replace Ut by its nearest unitary.
    bool project_unitary = false;
    std::uint64_t master_seed = 0;
    std::size_t size_cap = kDefaultSizeCap;
    /// Worker threads for trials; 0 means one per hardware thread.
    unsigned threads = 1;

    /// (n, m) pairs that will run, in (n, m) grid order. Pairs with n > m
    /// are skipped.
    std::vector<std::pair<int, int>> cells() const;

    /// Throws ParameterError on empty grids, non-positive entries, trials < 1,
    /// eps outside the model's range, a cell whose Fock dimension exceeds
    /// size_cap, or a grid with no runnable cell.
    void validate() const;
};

struct SweepRow {
    int n = 0;
    int m = 0;
    /// "rotation", "component", "gaussian-projected" or "gaussian-raw".
    std::string model;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    /// Layer count of the decomposed network; 0 for whole-matrix noise.
    std::size_t depth = 0;
    std::size_t component_count = 0;
    DistanceReport report;
    /// False when Ut was not unitary: only op_dist_base was measured and the
    /// chain fields are NaN.
    bool chain_checked = true;
    bool chain_ok = true;
    bool l1_paper_ok = true;
    /// l1 / (n op_dist_base), 0 when the denominator vanishes.
    double ratio = 0.0;
    /// Component model: op_dist_base <= depth * eps + 1e-9.
    bool network_bound_ok = true;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t chain_violations = 0;
    std::size_t l1_paper_violations = 0;
    std::size_t network_bound_violations = 0;
    std::size_t unchecked_rows = 0;

    /// No guaranteed invariant was violated.
    bool ok() const noexcept { return chain_violations == 0 && network_bound_violations == 0; }
};

/// Seed of trial `trial` at eps index `eps_index` in cell (n, m).
std::uint64_t trial_seed(std::uint64_t master, int n, int m, std::size_t eps_index, int trial);

/// l1 / (n op_dist_base), or 0 when n op_dist_base == 0.
double bound_ratio(const DistanceReport& report);

/// Haar U per trial, Ut from the rotation or gaussian model, chain_report
/// against |1_n>. Rows come out in (n, m, eps, trial) order whatever the
/// thread count.
SweepResult run_bound_sweep(const SweepConfig& cfg);

/// Haar U per trial, decomposed into a mesh whose components are each
/// perturbed by eps, recomposed into Ut. Requires noise_model == component.
SweepResult run_component_sweep(const SweepConfig& cfg);

/// run_component_sweep for the component model, run_bound_sweep otherwise.
SweepResult run_sweep(const SweepConfig& cfg);

struct TightnessResult {
    double max_ratio = 0.0;
    std::uint64_t argmax_seed = 0;
    int trials_used = 0;
};

/// Largest l1 / (n op_dist_base) over rotation-noise trials; trial t uses
/// seed mix_seed(seed, t). Trials with a zero denominator are excluded.
TightnessResult tightness_probe(int n, int m, double eps, int trials, std::uint64_t seed,
                                std::size_t cap = kDefaultSizeCap);

}  // namespace bosonbound
