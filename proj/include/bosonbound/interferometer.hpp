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
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bosonbound/linalg.hpp"

namespace bosonbound {

/// Two-mode mixer on modes (mode, mode + 1):
///   [[e^{i phi} cos(theta), -sin(theta)],
///    [e^{i phi} sin(theta),  cos(theta)]]
struct Beamsplitter {
    int mode = 0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Single-mode phase e^{i phase}.
struct Phaseshifter {
    int mode = 0;
    double phase = 0.0;
};

using Component = std::variant<Beamsplitter, Phaseshifter>;

/// Components acting on pairwise disjoint modes.
using Layer = std::vector<Component>;

/// A mesh of layers followed by a fixed output phase screen. Layer 0 acts
/// first, so the implemented unitary is
///   diag(e^{i output_phases}) * L_{d-1} * ... * L_1 * L_0.
struct InterferometerNetwork {
    int modes = 0;
    std::vector<Layer> layers;
    std::vector<double> output_phases;

    std::size_t depth() const noexcept { return layers.size(); }
    std::size_t component_count() const noexcept;
    std::size_t beamsplitter_count() const noexcept;
};

Eigen::Matrix2cd beamsplitter_block(double theta, double phi);

/// The component embedded as an m x m unitary.
ComplexMatrix embed(const Component& c, int modes);

/// Product of one layer's embedded components.
ComplexMatrix layer_matrix(const Layer& layer, int modes);

/// Operator distance between two components of the same kind on the same
/// modes, measured on the m x m embedding (equal to the 2x2 / 1x1 block distance).
double component_distance(const Component& a, const Component& b);

/// Throws StructureError on out-of-range modes, overlapping modes within a
/// layer, or an output phase vector of the wrong length.
void validate(const InterferometerNetwork& net);

/// Rectangular (Clements) mesh: m(m-1)/2 beamsplitters scheduled as early as
/// their modes allow, plus output phases. compose(decompose(U)) == U.
InterferometerNetwork decompose(const UnitaryMatrix& u);

UnitaryMatrix compose(const InterferometerNetwork& net);

/// Moves `bs` along the unit direction (cos direction, sin direction) in
/// (theta, phi) space up to the first point where its operator distance from
/// the original reaches eps, scaled by radius in [0, 1]. radius = 1 lands at
/// distance eps (or at the farthest reachable point if the ray never gets there).
Beamsplitter perturb_beamsplitter(const Beamsplitter& bs, double eps, double direction, double radius);

/// Independently perturbs every layer component so that its embedded unitary
/// moves by at most eps in operator distance; eps is attained for a draw on
/// the boundary of the parameter ball. Output phases are left unchanged.
InterferometerNetwork perturb_network(const InterferometerNetwork& net, double eps, std::uint64_t seed);

}  // namespace bosonbound
