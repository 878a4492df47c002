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
#include <string_view>

#include "bosonbound/linalg.hpp"

namespace bosonbound {

enum class NoiseModel { rotation, gaussian, component };

std::string_view to_string(NoiseModel model) noexcept;

/// Accepts "rotation", "gaussian", "component". Throws ParameterError otherwise.
NoiseModel parse_noise_model(std::string_view name);

struct NoiseSpec {
    NoiseModel model = NoiseModel::rotation;
    double epsilon = 0.0;
    std::uint64_t seed = 0;

    /// epsilon >= 0 and finite; rotation and component need epsilon <= 2,
    /// gaussian needs epsilon <= 1.
    void validate() const;
};

/// m x n matrix of i.i.d. standard complex Gaussians (E|G_ij|^2 = 1).
ComplexMatrix complex_gaussian_matrix(Index rows, Index cols, std::uint64_t seed);

/// U W with W = V diag(e^{i mu}) V^*, where V diagonalizes a GUE draw H and
/// mu is H's spectrum rescaled to max |mu_j| = 2 asin(eps / 2). Hence
/// ||U W - U||_op = max_j |e^{i mu_j} - 1| = eps exactly. Requires 0 <= eps <= 2.
UnitaryMatrix perturb_unitary(const UnitaryMatrix& u, double eps, std::uint64_t seed);

/// sqrt(1 - eps) U + sqrt(eps) G / sqrt(m), G standard complex Gaussian.
/// Not unitary in general. Requires 0 <= eps <= 1.
ComplexMatrix gaussian_perturb(const UnitaryMatrix& u, double eps, std::uint64_t seed);

/// Unitary polar factor W of M = W P: the unitary closest to M in operator
/// norm. Throws DecompositionError if M is numerically singular.
UnitaryMatrix nearest_unitary(const ComplexMatrix& m);

/// Median over trials of scale * ||G||_op / sqrt(m) for m x m standard
/// complex Gaussian G. Trial t uses seed mix_seed(seed, t).
double gaussian_opnorm_stat(int modes, int trials, std::uint64_t seed, double scale = 1.0);

}  // namespace bosonbound
