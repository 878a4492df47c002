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

#include "bosonbound/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bosonbound/random.hpp"

namespace bosonbound {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Left-multiplies rows (k, k+1) of m by a 2x2 block.
void apply_rows(ComplexMatrix& m, Index k, const Eigen::Matrix2cd& b) {
    const Eigen::Matrix<Complex, 2, Eigen::Dynamic> rows = m.middleRows(k, 2);
    m.middleRows(k, 2).noalias() = b * rows;
}

// Right-multiplies columns (k, k+1) of m by a 2x2 block.
void apply_cols(ComplexMatrix& m, Index k, const Eigen::Matrix2cd& b) {
    const Eigen::Matrix<Complex, Eigen::Dynamic, 2> cols = m.middleCols(k, 2);
    m.middleCols(k, 2).noalias() = cols * b;
}

void apply_component(ComplexMatrix& m, const Component& c) {
    std::visit(Overloaded{
                   [&](const Beamsplitter& bs) { apply_rows(m, bs.mode, beamsplitter_block(bs.theta, bs.phi)); },
                   [&](const Phaseshifter& ps) { m.row(ps.mode) *= std::polar(1.0, ps.phase); },
               },
               c);
}

// (theta, phi) with tan(theta) e^{i phi} = a / b.
std::pair<double, double> ratio_angles(Complex a, Complex b) {
    if (a == Complex(0.0)) {
        return {0.0, 0.0};
    }
    if (b == Complex(0.0)) {
        return {0.5 * kPi, std::arg(a)};
    }
    return {std::atan2(std::abs(a), std::abs(b)), std::arg(a * std::conj(b))};
}

}  // namespace

std::size_t InterferometerNetwork::component_count() const noexcept {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.size();
    return n;
}

std::size_t InterferometerNetwork::beamsplitter_count() const noexcept {
    std::size_t n = 0;
    for (const auto& layer : layers) {
        for (const auto& c : layer) {
            if (std::holds_alternative<Beamsplitter>(c)) ++n;
        }
    }
    return n;
}

Eigen::Matrix2cd beamsplitter_block(double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e = std::polar(1.0, phi);
    Eigen::Matrix2cd b;
    b << e * c, -s, e * s, c;
    return b;
}

ComplexMatrix embed(const Component& c, int modes) {
    ComplexMatrix m = ComplexMatrix::Identity(modes, modes);
    apply_component(m, c);
    return m;
}

ComplexMatrix layer_matrix(const Layer& layer, int modes) {
    ComplexMatrix m = ComplexMatrix::Identity(modes, modes);
    for (const auto& c : layer) apply_component(m, c);
    return m;
}

double component_distance(const Component& a, const Component& b) {
    if (a.index() != b.index()) {
        throw StructureError("component_distance: components are of different kinds");
    }
    if (const auto* bs = std::get_if<Beamsplitter>(&a)) {
        const auto& other = std::get<Beamsplitter>(b);
        if (bs->mode != other.mode) {
            throw StructureError("component_distance: components act on different modes");
        }
        return operator_distance(beamsplitter_block(bs->theta, bs->phi),
                                 beamsplitter_block(other.theta, other.phi));
    }
    const auto& ps = std::get<Phaseshifter>(a);
    const auto& other = std::get<Phaseshifter>(b);
    if (ps.mode != other.mode) {
        throw StructureError("component_distance: components act on different modes");
    }
    return 2.0 * std::abs(std::sin(0.5 * (other.phase - ps.phase)));
}

void validate(const InterferometerNetwork& net) {
    if (net.modes < 1) {
        throw StructureError("network: mode count must be >= 1");
    }
    if (!net.output_phases.empty() && net.output_phases.size() != static_cast<std::size_t>(net.modes)) {
        throw StructureError("network: output_phases has " + std::to_string(net.output_phases.size()) +
                             " entries for " + std::to_string(net.modes) + " modes");
    }
    for (double p : net.output_phases) {
        if (!std::isfinite(p)) throw StructureError("network: non-finite output phase");
    }
    std::vector<int> seen(static_cast<std::size_t>(net.modes), -1);
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        auto claim = [&](int mode) {
            if (mode < 0 || mode >= net.modes) {
                throw StructureError("network: layer " + std::to_string(l) + " touches mode " + std::to_string(mode) +
                                     " outside [0, " + std::to_string(net.modes) + ")");
            }
            auto& owner = seen[static_cast<std::size_t>(mode)];
            if (owner == static_cast<int>(l)) {
                throw StructureError("network: layer " + std::to_string(l) + " uses mode " + std::to_string(mode) +
                                     " twice");
            }
            owner = static_cast<int>(l);
        };
        for (const auto& c : net.layers[l]) {
            std::visit(Overloaded{
                           [&](const Beamsplitter& bs) {
                               if (!std::isfinite(bs.theta) || !std::isfinite(bs.phi)) {
                                   throw StructureError("network: non-finite beamsplitter parameter");
                               }
                               claim(bs.mode);
                               claim(bs.mode + 1);
                           },
                           [&](const Phaseshifter& ps) {
                               if (!std::isfinite(ps.phase)) {
                                   throw StructureError("network: non-finite phase");
                               }
                               claim(ps.mode);
                           },
                       },
                       c);
        }
    }
}

InterferometerNetwork decompose(const UnitaryMatrix& u) {
    if (!(u.defect() <= kUnitaryTolerance)) {
        throw ContractError("decompose: unitarity defect " + std::to_string(u.defect()) + " above tolerance");
    }
    const Index m = u.dim();
    ComplexMatrix v = u.matrix();

    // Null the strictly lower triangle, alternating between column
    // operations (v <- v T^dagger) and row operations (v <- T v) along
    // successive anti-diagonals.
    std::vector<Beamsplitter> right_ops;
    std::vector<Beamsplitter> left_ops;
    for (Index i = 0; i + 1 < m; ++i) {
        if (i % 2 == 0) {
            for (Index j = 0; j <= i; ++j) {
                const Index row = m - 1 - j;
                const Index col = i - j;
                const auto [theta, phi] = ratio_angles(v(row, col), v(row, col + 1));
                apply_cols(v, col, beamsplitter_block(theta, phi).adjoint());
                right_ops.push_back({static_cast<int>(col), theta, phi});
            }
        } else {
            for (Index j = 1; j <= i + 1; ++j) {
                const Index row = m - 2 - i + j;
                const Index col = j - 1;
                const auto [theta, phi] = ratio_angles(-v(row, col), v(row - 1, col));
                apply_rows(v, row - 1, beamsplitter_block(theta, phi));
                left_ops.push_back({static_cast<int>(row - 1), theta, phi});
            }
        }
    }

    // v is now diagonal D and U = L_1^dag ... L_k^dag D R_p ... R_1.
    // Move each L^dag to the right of the phase screen using
    //   T(theta, phi)^dag diag(a, b) = diag(-e^{-i phi} b, b) T(theta, arg a - arg b + pi).
    std::vector<double> phases(static_cast<std::size_t>(m));
    for (Index k = 0; k < m; ++k) phases[static_cast<std::size_t>(k)] = std::arg(v(k, k));

    std::vector<Beamsplitter> sequence = right_ops;
    for (auto it = left_ops.rbegin(); it != left_ops.rend(); ++it) {
        const auto k = static_cast<std::size_t>(it->mode);
        const double alpha = phases[k];
        const double beta = phases[k + 1];
        if (it->theta == 0.0) {
            // T(0, phi)^dag diag(a, b) = diag(e^{-i phi} a, b) T(0, 0).
            sequence.push_back({it->mode, 0.0, 0.0});
            phases[k] = wrap_phase(alpha - it->phi);
            continue;
        }
        sequence.push_back({it->mode, it->theta, wrap_phase(alpha - beta + kPi)});
        phases[k] = wrap_phase(beta - it->phi + kPi);
    }

    // Schedule each beamsplitter into the earliest layer after every
    // earlier beamsplitter that shares a mode with it.
    InterferometerNetwork net;
    net.modes = static_cast<int>(m);
    std::vector<std::size_t> free_from(static_cast<std::size_t>(m), 0);
    for (const auto& bs : sequence) {
        const auto k = static_cast<std::size_t>(bs.mode);
        const std::size_t layer = std::max(free_from[k], free_from[k + 1]);
        if (layer == net.layers.size()) net.layers.emplace_back();
        net.layers[layer].push_back(bs);
        free_from[k] = free_from[k + 1] = layer + 1;
    }
    net.output_phases = std::move(phases);
    return net;
}

UnitaryMatrix compose(const InterferometerNetwork& net) {
    validate(net);
    ComplexMatrix m = ComplexMatrix::Identity(net.modes, net.modes);
    for (const auto& layer : net.layers) {
        for (const auto& c : layer) apply_component(m, c);
    }
    for (std::size_t k = 0; k < net.output_phases.size(); ++k) {
        m.row(static_cast<Index>(k)) *= std::polar(1.0, net.output_phases[k]);
    }
    return UnitaryMatrix(std::move(m));
}

// ||dT/dt|| <= |d_theta| + |d_phi| <= sqrt(2) along a unit direction, so from
// a point at distance d < eps the distance stays below eps for another
// (eps - d) / sqrt(2) of travel. Stepping by exactly that amount approaches
// the first crossing from below and never passes it.
Beamsplitter perturb_beamsplitter(const Beamsplitter& bs, double eps, double direction, double radius) {
    constexpr double kLipschitz = 1.4142135623730951;
    constexpr double kMaxTravel = 4.0 * kPi;
    const double dt = std::cos(direction);
    const double dp = std::sin(direction);
    const Eigen::Matrix2cd base = beamsplitter_block(bs.theta, bs.phi);
    auto distance_at = [&](double t) {
        return operator_distance(beamsplitter_block(bs.theta + t * dt, bs.phi + t * dp), base);
    };

    double t = 0.0;
    for (int iter = 0; iter < 2000 && t < kMaxTravel; ++iter) {
        const double gap = eps - distance_at(t);
        if (gap <= 1e-15 * std::max(1.0, eps)) break;
        t += gap / kLipschitz;
    }
    t = std::min(t, kMaxTravel);
    const double step = radius * t;
    return {bs.mode, bs.theta + step * dt, bs.phi + step * dp};
}

InterferometerNetwork perturb_network(const InterferometerNetwork& net, double eps, std::uint64_t seed) {
    if (!(eps >= 0.0 && eps <= 2.0)) {
        throw ParameterError("perturb_network: eps must lie in [0, 2]");
    }
    validate(net);
    InterferometerNetwork out = net;
    if (eps == 0.0) {
        return out;
    }
    const double max_phase = 2.0 * std::asin(0.5 * eps);
    for (std::size_t l = 0; l < out.layers.size(); ++l) {
        for (std::size_t k = 0; k < out.layers[l].size(); ++k) {
            Rng rng(mix_seed(seed, l, k));
            auto& c = out.layers[l][k];
            if (auto* bs = std::get_if<Beamsplitter>(&c)) {
                // Uniform point in the unit disk: uniform angle, radius sqrt(u).
                const double direction = 2.0 * kPi * rng.uniform();
                const double radius = std::sqrt(rng.uniform());
                *bs = perturb_beamsplitter(*bs, eps, direction, radius);
            } else {
                auto& ps = std::get<Phaseshifter>(c);
                ps.phase += (2.0 * rng.uniform() - 1.0) * max_phase;
            }
        }
    }
    return out;
}

}  // namespace bosonbound
