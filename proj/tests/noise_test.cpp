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
#include <numbers>
#include <numeric>

#include "bosonbound/noise.hpp"
#include "bosonbound/random.hpp"

namespace bosonbound {
namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

TEST(NoiseModel, ParseAndName) {
    for (auto model : {NoiseModel::rotation, NoiseModel::gaussian, NoiseModel::component}) {
        EXPECT_EQ(parse_noise_model(to_string(model)), model);
    }
    EXPECT_THROW(parse_noise_model("thermal"), ParameterError);
}

TEST(NoiseSpec, Validation) {
    EXPECT_NO_THROW((NoiseSpec{NoiseModel::rotation, 2.0, 0}.validate()));
    EXPECT_THROW((NoiseSpec{NoiseModel::rotation, 2.1, 0}.validate()), ParameterError);
    EXPECT_THROW((NoiseSpec{NoiseModel::rotation, -1e-3, 0}.validate()), ParameterError);
    EXPECT_THROW((NoiseSpec{NoiseModel::gaussian, 1.5, 0}.validate()), ParameterError);
    EXPECT_THROW((NoiseSpec{NoiseModel::component, NAN, 0}.validate()), ParameterError);
}

TEST(PerturbUnitary, ZeroEpsilonReturnsInput) {
    const UnitaryMatrix u = haar_random_unitary(4, 1);
    EXPECT_EQ(perturb_unitary(u, 0.0, 3).matrix(), u.matrix());
}

TEST(PerturbUnitary, ExactOperatorDistance) {
    for (double eps : {1e-3, 0.1, 0.5}) {
        for (int s = 0; s < 100; ++s) {
            const UnitaryMatrix u = haar_random_unitary(1 + s % 8, mix_seed(1, s));
            const UnitaryMatrix ut = perturb_unitary(u, eps, mix_seed(2, s));
            EXPECT_NEAR(operator_distance(ut, u), eps, 1e-11);
            EXPECT_LE(unitarity_defect(ut.matrix()), 1e-11);
        }
    }
}

TEST(PerturbUnitary, LargeBudgets) {
    for (double eps : {1.0, 1.9, 2.0}) {
        const UnitaryMatrix u = haar_random_unitary(5, 4);
        EXPECT_NEAR(operator_distance(perturb_unitary(u, eps, 5), u), eps, 1e-11);
    }
}

TEST(PerturbUnitary, OneByOneClosedForm) {
    const double alpha = 0.8;
    const UnitaryMatrix one = UnitaryMatrix::identity(1);
    const Complex z = perturb_unitary(one, 2.0 * std::sin(alpha / 2), 6)(0, 0);
    EXPECT_NEAR(std::abs(std::abs(std::arg(z)) - alpha), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
}

TEST(PerturbUnitary, DeterministicAndRangeChecked) {
    const UnitaryMatrix u = haar_random_unitary(3, 2);
    EXPECT_EQ(perturb_unitary(u, 0.2, 8).matrix(), perturb_unitary(u, 0.2, 8).matrix());
    EXPECT_THROW(perturb_unitary(u, 2.0001, 8), ParameterError);
    EXPECT_THROW(perturb_unitary(u, -0.1, 8), ParameterError);
}

TEST(GaussianPerturb, Endpoints) {
    const UnitaryMatrix u = haar_random_unitary(5, 3);
    const UnitaryMatrix v = haar_random_unitary(5, 4);
    EXPECT_EQ(gaussian_perturb(u, 0.0, 1), u.matrix());
    const ComplexMatrix gu = gaussian_perturb(u, 1.0, 2);
    EXPECT_EQ(gu, gaussian_perturb(v, 1.0, 2));
    EXPECT_LE((gu - complex_gaussian_matrix(5, 5, 2) / std::sqrt(5.0)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GaussianPerturb, RangeChecked) {
    const UnitaryMatrix u = haar_random_unitary(2, 3);
    EXPECT_THROW(gaussian_perturb(u, 1.01, 1), ParameterError);
    EXPECT_THROW(gaussian_perturb(u, -0.01, 1), ParameterError);
}

TEST(GaussianPerturb, EntryNormalization) {
    const ComplexMatrix g = complex_gaussian_matrix(200, 200, 77);
    EXPECT_NEAR(g.squaredNorm() / 40000.0, 1.0, 0.02);
    EXPECT_NEAR(g.real().squaredNorm() / 40000.0, 0.5, 0.02);
}

TEST(GaussianPerturb, SquareRootScalingOfOperatorDistance) {
    const int m = 64;
    std::vector<double> ratios;
    for (int s = 0; s < 50; ++s) {
        const UnitaryMatrix u = haar_random_unitary(m, mix_seed(10, s));
        ratios.push_back(operator_distance(gaussian_perturb(u, 0.01, mix_seed(11, s)), u.matrix()) / 0.1);
    }
    const double med = median(ratios);
    EXPECT_GE(med, 1.5);
    EXPECT_LE(med, 2.5);
}

TEST(GaussianPerturb, LogLogSlopeNearOneHalf) {
    const int m = 64;
    const std::vector<double> eps = {1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
    std::vector<double> x;
    std::vector<double> y;
    for (double e : eps) {
        double mean = 0.0;
        for (int s = 0; s < 20; ++s) {
            const UnitaryMatrix u = haar_random_unitary(m, mix_seed(20, s));
            mean += operator_distance(gaussian_perturb(u, e, mix_seed(21, s)), u.matrix());
        }
        x.push_back(std::log(e));
        y.push_back(std::log(mean / 20.0));
    }
    const double xm = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
    const double ym = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - xm) * (y[i] - ym);
        sxx += (x[i] - xm) * (x[i] - xm);
    }
    const double slope = sxy / sxx;
    EXPECT_GE(slope, 0.4);
    EXPECT_LE(slope, 0.6);
}

TEST(NearestUnitary, FixesUnitaryInput) {
    const UnitaryMatrix u = haar_random_unitary(6, 5);
    EXPECT_LE((nearest_unitary(u.matrix()).matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NearestUnitary, ScaledIdentity) {
    EXPECT_LE((nearest_unitary(2.0 * ComplexMatrix::Identity(3, 3)).matrix() - ComplexMatrix::Identity(3, 3))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
}

TEST(NearestUnitary, ProjectsGaussianNoise) {
    for (int s = 0; s < 20; ++s) {
        const UnitaryMatrix u = haar_random_unitary(8, mix_seed(30, s));
        const ComplexMatrix noisy = gaussian_perturb(u, 0.05, mix_seed(31, s));
        const UnitaryMatrix w = nearest_unitary(noisy);
        EXPECT_LE(unitarity_defect(w.matrix()), 1e-11);
        EXPECT_LT(operator_distance(w.matrix(), noisy), unitarity_defect(noisy));
        EXPECT_LE((nearest_unitary(w.matrix()).matrix() - w.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(NearestUnitary, IsClosestAmongUnitaries) {
    const ComplexMatrix noisy = gaussian_perturb(haar_random_unitary(5, 1), 0.2, 2);
    const double best = operator_distance(nearest_unitary(noisy).matrix(), noisy);
    for (int s = 0; s < 50; ++s) {
        const UnitaryMatrix rival = perturb_unitary(nearest_unitary(noisy), 0.05, mix_seed(3, s));
        EXPECT_GE(operator_distance(rival.matrix(), noisy), best - 1e-12);
    }
}

TEST(NearestUnitary, Errors) {
    ComplexMatrix singular = ComplexMatrix::Identity(3, 3);
    singular(2, 2) = 0.0;
    EXPECT_THROW(nearest_unitary(singular), DecompositionError);
    EXPECT_THROW(nearest_unitary(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST(GaussianOpnormStat, SpectralEdgeNearTwo) {
    const double v = gaussian_opnorm_stat(128, 50, 1);
    EXPECT_GE(v, 1.8);
    EXPECT_LE(v, 2.2);
}

TEST(GaussianOpnormStat, RoughlyIndependentOfDimension) {
    const double small = gaussian_opnorm_stat(8, 50, 2);
    const double large = gaussian_opnorm_stat(128, 50, 2);
    EXPECT_LE(std::abs(small - large), 0.25 * large);
}

TEST(GaussianOpnormStat, Homogeneous) {
    EXPECT_NEAR(gaussian_opnorm_stat(16, 11, 3, 2.5), 2.5 * gaussian_opnorm_stat(16, 11, 3), 1e-12);
}

TEST(GaussianOpnormStat, Preconditions) {
    EXPECT_THROW(gaussian_opnorm_stat(7, 50, 1), ParameterError);
    EXPECT_THROW(gaussian_opnorm_stat(8, 9, 1), ParameterError);
}

}  // namespace
}  // namespace bosonbound
