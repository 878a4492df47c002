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

#include "bosonbound/noise.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bosonbound/random.hpp"

namespace bosonbound {

std::string_view to_string(NoiseModel model) noexcept {
    switch (model) {
        case NoiseModel::rotation:
            return "rotation";
        case NoiseModel::gaussian:
            return "gaussian";
        case NoiseModel::component:
            return "component";
    }
    return "unknown";
}

NoiseModel parse_noise_model(std::string_view name) {
    if (name == "rotation") return NoiseModel::rotation;
    if (name == "gaussian") return NoiseModel::gaussian;
    if (name == "component") return NoiseModel::component;
    throw ParameterError("unknown noise model '" + std::string(name) + "'");
}

void NoiseSpec::validate() const {
    if (!std::isfinite(epsilon) || epsilon < 0.0) {
        throw ParameterError("NoiseSpec: epsilon must be finite and >= 0");
    }
    const double limit = (model == NoiseModel::gaussian) ? 1.0 : 2.0;
    if (epsilon > limit) {
        throw ParameterError("NoiseSpec: epsilon " + std::to_string(epsilon) + " exceeds " +
                             std::to_string(limit) + " for model " + std::string(to_string(model)));
    }
}

ComplexMatrix complex_gaussian_matrix(Index rows, Index cols, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

UnitaryMatrix perturb_unitary(const UnitaryMatrix& u, double eps, std::uint64_t seed) {
    if (!(eps >= 0.0 && eps <= 2.0)) {
        throw ParameterError("perturb_unitary: eps must lie in [0, 2]; larger distances are unreachable");
    }
    if (eps == 0.0) {
        return u;
    }
    const Index m = u.dim();
    const ComplexMatrix g = complex_gaussian_matrix(m, m, seed);
    const ComplexMatrix h = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const Eigen::VectorXd& spectrum = es.eigenvalues();
    const double peak = spectrum.cwiseAbs().maxCoeff();
    const double max_angle = 2.0 * std::asin(0.5 * eps);

    Eigen::VectorXd angles;
    if (peak > 0.0) {
        angles = spectrum * (max_angle / peak);
    } else {
        angles = Eigen::VectorXd::Constant(m, max_angle);
    }
    // Pin the extreme eigenangle exactly so the distance is attained.
    Index arg_peak = 0;
    spectrum.cwiseAbs().maxCoeff(&arg_peak);
    angles(arg_peak) = std::copysign(max_angle, spectrum(arg_peak));

    const ComplexVector rotation = angles.unaryExpr([](double a) { return std::polar(1.0, a); });
    const ComplexMatrix& v = es.eigenvectors();
    const ComplexMatrix w = v * rotation.asDiagonal() * v.adjoint();
    return UnitaryMatrix(u.matrix() * w);
}

ComplexMatrix gaussian_perturb(const UnitaryMatrix& u, double eps, std::uint64_t seed) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw ParameterError("gaussian_perturb: eps must lie in [0, 1]");
    }
    const Index m = u.dim();
    const ComplexMatrix g = complex_gaussian_matrix(m, m, seed);
    return std::sqrt(1.0 - eps) * u.matrix() + (std::sqrt(eps) / std::sqrt(static_cast<double>(m))) * g;
}

UnitaryMatrix nearest_unitary(const ComplexMatrix& m) {
    require_square(m, "nearest_unitary");
    if (!m.allFinite()) {
        throw DecompositionError("nearest_unitary: non-finite entry");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    if (!(smallest > 1e-14 * std::max(1.0, sv(0)))) {
        throw DecompositionError("nearest_unitary: matrix is numerically singular (smallest singular value " +
                                 std::to_string(smallest) + ")");
    }
    return UnitaryMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

double gaussian_opnorm_stat(int modes, int trials, std::uint64_t seed, double scale) {
    if (modes < 8) {
        throw ParameterError("gaussian_opnorm_stat: needs m >= 8");
    }
    if (trials < 10) {
        throw ParameterError("gaussian_opnorm_stat: needs at least 10 trials");
    }
    const double root_m = std::sqrt(static_cast<double>(modes));
    std::vector<double> ratios;
    ratios.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix g = scale * complex_gaussian_matrix(modes, modes, mix_seed(seed, t));
        ratios.push_back(spectral_norm(g) / root_m);
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = ratios.size() / 2;
    return (ratios.size() % 2 == 1) ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

}  // namespace bosonbound
