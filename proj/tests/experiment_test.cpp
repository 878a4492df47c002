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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bosonbound/experiment.hpp"
#include "bosonbound/random.hpp"

namespace bosonbound {
namespace {

SweepConfig small_config(NoiseModel model) {
    SweepConfig cfg;
    cfg.n_values = {1, 2, 3};
    cfg.m_values = {2, 4};
    cfg.eps_values = {1e-3, 0.1};
    cfg.trials_per_cell = 3;
    cfg.noise_model = model;
    cfg.master_seed = 2026;
    return cfg;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

TEST(SweepConfig, CellsSkipMorePhotonsThanModes) {
    const auto cells = small_config(NoiseModel::rotation).cells();
    EXPECT_EQ(cells, (std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 2}, {2, 4}, {3, 4}}));
}

TEST(SweepConfig, Validation) {
    auto cfg = small_config(NoiseModel::rotation);
    EXPECT_NO_THROW(cfg.validate());

    auto empty = cfg;
    empty.eps_values.clear();
    EXPECT_THROW(empty.validate(), ParameterError);

    auto no_trials = cfg;
    no_trials.trials_per_cell = 0;
    EXPECT_THROW(no_trials.validate(), ParameterError);

    auto too_far = cfg;
    too_far.eps_values = {2.5};
    EXPECT_THROW(too_far.validate(), ParameterError);

    auto gaussian = cfg;
    gaussian.noise_model = NoiseModel::gaussian;
    gaussian.eps_values = {1.5};
    EXPECT_THROW(gaussian.validate(), ParameterError);

    auto nothing = cfg;
    nothing.n_values = {5};
    nothing.m_values = {2, 3};
    EXPECT_THROW(nothing.validate(), ParameterError);

    auto capped = cfg;
    capped.n_values = {4};
    capped.m_values = {12};
    capped.size_cap = 1000;
    EXPECT_THROW(capped.validate(), ParameterError);

    auto zero_photons = cfg;
    zero_photons.n_values = {0};
    EXPECT_THROW(zero_photons.validate(), ParameterError);
}

TEST(BoundSweep, ZeroEpsilonGivesZeroDistances) {
    auto cfg = small_config(NoiseModel::rotation);
    cfg.eps_values = {0.0};
    const auto result = run_bound_sweep(cfg);
    ASSERT_EQ(result.rows.size(), 15u);
    for (const auto& row : result.rows) {
        EXPECT_EQ(row.report.l1, 0.0);
        EXPECT_EQ(row.report.trace_dist, 0.0);
        EXPECT_EQ(row.report.state_euclid, 0.0);
        EXPECT_EQ(row.report.op_dist_lifted, 0.0);
        EXPECT_EQ(row.report.op_dist_base, 0.0);
        EXPECT_TRUE(row.chain_ok);
        EXPECT_EQ(row.ratio, 0.0);
    }
    EXPECT_TRUE(result.ok());
}

TEST(BoundSweep, RowOrderAndSeeds) {
    const auto cfg = small_config(NoiseModel::rotation);
    const auto result = run_bound_sweep(cfg);
    ASSERT_EQ(result.rows.size(), 5u * 2u * 3u);
    std::size_t k = 0;
    for (const auto& [n, m] : cfg.cells()) {
        for (std::size_t e = 0; e < cfg.eps_values.size(); ++e) {
            for (int t = 0; t < cfg.trials_per_cell; ++t, ++k) {
                const auto& row = result.rows[k];
                EXPECT_EQ(row.n, n);
                EXPECT_EQ(row.m, m);
                EXPECT_EQ(row.epsilon, cfg.eps_values[e]);
                EXPECT_EQ(row.seed, trial_seed(cfg.master_seed, n, m, e, t));
                EXPECT_EQ(row.model, "rotation");
                EXPECT_EQ(row.depth, 0u);
            }
        }
    }
}

TEST(BoundSweep, RotationChainHolds) {
    SweepConfig cfg;
    cfg.n_values = {1, 2, 3, 4};
    cfg.m_values = {2, 3, 4, 5, 6, 7, 8};
    cfg.eps_values = {1e-3, 1e-2, 0.1, 0.3};
    cfg.trials_per_cell = 3;
    cfg.master_seed = 11;
    const auto result = run_bound_sweep(cfg);
    EXPECT_EQ(result.rows.size(), 25u * 4u * 3u);
    EXPECT_EQ(result.chain_violations, 0u);
    for (const auto& row : result.rows) {
        EXPECT_NEAR(row.report.op_dist_base, row.epsilon, 1e-11);
        EXPECT_GE(row.ratio, 0.0);
        if (row.n == 1) EXPECT_NEAR(row.report.op_dist_lifted, row.report.op_dist_base, 1e-12);
    }
}

TEST(BoundSweep, ThreadCountDoesNotChangeRows) {
    auto cfg = small_config(NoiseModel::rotation);
    cfg.threads = 1;
    const auto serial = run_bound_sweep(cfg);
    cfg.threads = 4;
    const auto parallel = run_bound_sweep(cfg);
    ASSERT_EQ(serial.rows.size(), parallel.rows.size());
    for (std::size_t k = 0; k < serial.rows.size(); ++k) {
        EXPECT_EQ(serial.rows[k].seed, parallel.rows[k].seed);
        EXPECT_EQ(serial.rows[k].report.l1, parallel.rows[k].report.l1);
        EXPECT_EQ(serial.rows[k].report.op_dist_lifted, parallel.rows[k].report.op_dist_lifted);
    }
}

TEST(BoundSweep, GaussianRawRowsAreNotChainChecked) {
    const auto result = run_bound_sweep(small_config(NoiseModel::gaussian));
    EXPECT_EQ(result.unchecked_rows, result.rows.size());
    for (const auto& row : result.rows) {
        EXPECT_EQ(row.model, "gaussian-raw");
        EXPECT_FALSE(row.chain_checked);
        EXPECT_TRUE(std::isnan(row.report.l1));
        EXPECT_GT(row.report.op_dist_base, 0.0);
    }
    EXPECT_TRUE(result.ok());
}

TEST(BoundSweep, GaussianProjectedRowsSatisfyChain) {
    auto cfg = small_config(NoiseModel::gaussian);
    cfg.project_unitary = true;
    const auto result = run_bound_sweep(cfg);
    EXPECT_EQ(result.unchecked_rows, 0u);
    EXPECT_EQ(result.chain_violations, 0u);
    for (const auto& row : result.rows) EXPECT_EQ(row.model, "gaussian-projected");
}

TEST(BoundSweep, RejectsComponentModel) {
    EXPECT_THROW(run_bound_sweep(small_config(NoiseModel::component)), ParameterError);
    EXPECT_THROW(run_component_sweep(small_config(NoiseModel::rotation)), ParameterError);
}

TEST(ComponentSweep, ZeroEpsilonReproducesUnitary) {
    auto cfg = small_config(NoiseModel::component);
    cfg.m_values = {2, 4, 6};
    cfg.eps_values = {0.0};
    for (const auto& row : run_component_sweep(cfg).rows) {
        EXPECT_LE(row.report.op_dist_base, 1e-12);
        EXPECT_TRUE(row.network_bound_ok);
    }
}

TEST(ComponentSweep, SeriesBoundAtSixModes) {
    SweepConfig cfg;
    cfg.n_values = {1, 2, 3};
    cfg.m_values = {6};
    cfg.eps_values = {1e-3};
    cfg.trials_per_cell = 10;
    cfg.noise_model = NoiseModel::component;
    cfg.master_seed = 3;
    const auto result = run_component_sweep(cfg);
    EXPECT_TRUE(result.ok());
    for (const auto& row : result.rows) {
        EXPECT_EQ(row.model, "component");
        EXPECT_LE(row.depth, 6u);
        EXPECT_EQ(row.component_count, 15u);
        EXPECT_LE(row.report.op_dist_base, static_cast<double>(row.depth) * 1e-3 + 1e-9);
        EXPECT_TRUE(row.chain_ok);
    }
}

TEST(ComponentSweep, HalvingEpsilonDoesNotRaiseMedianError) {
    SweepConfig cfg;
    cfg.n_values = {2};
    cfg.m_values = {5};
    cfg.eps_values = {0.02, 0.01};
    cfg.trials_per_cell = 40;
    cfg.noise_model = NoiseModel::component;
    cfg.master_seed = 8;
    const auto result = run_component_sweep(cfg);
    std::vector<double> coarse;
    std::vector<double> fine;
    for (const auto& row : result.rows) (row.epsilon == 0.02 ? coarse : fine).push_back(row.report.op_dist_base);
    EXPECT_LE(median(fine), median(coarse));
}

TEST(RunSweep, DispatchesOnModel) {
    auto cfg = small_config(NoiseModel::component);
    cfg.trials_per_cell = 1;
    for (const auto& row : run_sweep(cfg).rows) EXPECT_EQ(row.model, "component");
}

TEST(BoundRatio, GuardsZeroDenominator) {
    DistanceReport r;
    r.n = 2;
    r.l1 = 0.0;
    r.op_dist_base = 0.0;
    EXPECT_EQ(bound_ratio(r), 0.0);
    r.l1 = 0.1;
    r.op_dist_base = 0.1;
    EXPECT_NEAR(bound_ratio(r), 0.5, 1e-15);
}

TEST(BoundRatio, GlobalPhaseIsZero) {
    const UnitaryMatrix id = UnitaryMatrix::identity(3);
    const UnitaryMatrix phased(std::polar(1.0, 0.9) * ComplexMatrix::Identity(3, 3));
    const auto r = chain_report(id, phased, 2, BosonState::input(3, 2));
    EXPECT_GT(r.bound_rhs(), 0.0);
    EXPECT_LE(bound_ratio(r), 1e-15);
}

TEST(TightnessProbe, SinglePhotonRecord) {
    const auto r = tightness_probe(1, 2, 0.1, 200, 5);
    EXPECT_EQ(r.trials_used, 200);
    EXPECT_GT(r.max_ratio, 0.0);
    EXPECT_LE(r.max_ratio, 20.0 + 1e-9);
    const UnitaryMatrix u = haar_random_unitary(2, mix_seed(r.argmax_seed, 0));
    const UnitaryMatrix ut = perturb_unitary(u, 0.1, mix_seed(r.argmax_seed, 1));
    EXPECT_DOUBLE_EQ(bound_ratio(chain_report(u, ut, 1, BosonState::input(2, 1))), r.max_ratio);
}

TEST(TightnessProbe, ZeroEpsilonExcludesEveryTrial) {
    const auto r = tightness_probe(2, 3, 0.0, 10, 5);
    EXPECT_EQ(r.trials_used, 0);
    EXPECT_EQ(r.max_ratio, 0.0);
}

TEST(TightnessProbe, ValidatesCell) {
    EXPECT_THROW(tightness_probe(3, 2, 0.1, 10, 1), ParameterError);
    EXPECT_THROW(tightness_probe(1, 2, 3.0, 10, 1), ParameterError);
    EXPECT_THROW(tightness_probe(1, 2, 0.1, 0, 1), ParameterError);
}

}  // namespace
}  // namespace bosonbound
