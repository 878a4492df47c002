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

#include "bosonbound/fock.hpp"
#include "bosonbound/lift.hpp"
#include "bosonbound/linalg.hpp"

namespace bosonbound {

/// Slack used when checking the ordered distance chain.
inline constexpr double kChainSlack = 1e-10;

/// sum_S |p(S) - q(S)|. Throws DimensionError unless p and q share (m, n).
double l1_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Half the L1 distance.
double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// <a|b> = sum conj(a_k) b_k with compensated summation.
Complex inner_product(const ComplexVector& a, const ComplexVector& b);

/// sqrt(1 - |<psi|phi>|^2) for normalized pure states, clamped to [0, 1].
/// Evaluated as the norm of the part of phi orthogonal to psi, which stays
/// accurate when the states nearly coincide.
double trace_distance_pure(const BosonState& psi, const BosonState& phi);

/// ||phi - psi||.
double state_distance(const BosonState& psi, const BosonState& phi);

/// Born-rule distribution |amplitude|^2 over the state's basis.
OutcomeDistribution measure(const BosonState& state);

struct DistanceReport {
    int n = 0;
    double l1 = 0.0;
    double tv = 0.0;
    double state_euclid = 0.0;
    double trace_dist = 0.0;
    double op_dist_lifted = 0.0;
    double op_dist_base = 0.0;

    /// n * op_dist_base.
    double bound_rhs() const noexcept { return n * op_dist_base; }

    /// tv <= trace_dist <= state_euclid <= op_dist_lifted <= n * op_dist_base,
    /// each step within `slack`.
    bool chain_ok(double slack = kChainSlack) const noexcept;

    /// l1 <= n * op_dist_base (the unhalved form).
    bool l1_paper_ok(double slack = kChainSlack) const noexcept;
};

/// Every distance between the experiments (U, psi0) and (Ut, psi0).
/// op_dist_lifted uses the eigenphase formula, op_dist_base the SVD.
DistanceReport chain_report(const UnitaryMatrix& u, const UnitaryMatrix& ut, int photons, const BosonState& psi0,
                            std::size_t cap = kDefaultSizeCap);

}  // namespace bosonbound
