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

#include "bosonbound/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bosonbound {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

void require_same_shape(const OutcomeDistribution& p, const OutcomeDistribution& q, const char* what) {
    if (p.modes() != q.modes() || p.photons() != q.photons() || p.size() != q.size()) {
        throw DimensionError(std::string(what) + ": distributions over (m, n) = (" + std::to_string(p.modes()) + ", " +
                             std::to_string(p.photons()) + ") and (" + std::to_string(q.modes()) + ", " +
                             std::to_string(q.photons()) + ")");
    }
}

void require_same_space(const BosonState& a, const BosonState& b, const char* what) {
    if (a.modes() != b.modes() || a.photons() != b.photons() || a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": states live in different Fock spaces");
    }
}

void require_normalized(const BosonState& s, const char* what) {
    if (!(s.normalization_defect() <= 1e-9)) {
        throw ContractError(std::string(what) + ": state norm " + std::to_string(s.norm()) +
                            " differs from 1 by more than 1e-9");
    }
}

}  // namespace

double l1_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    require_same_shape(p, q, "l1_distance");
    CompensatedSum acc;
    for (std::size_t k = 0; k < p.size(); ++k) {
        acc.add(std::abs(p[k] - q[k]));
    }
    return acc.value();
}

double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    return 0.5 * l1_distance(p, q);
}

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("inner_product: vector lengths differ");
    }
    CompensatedSum re;
    CompensatedSum im;
    for (Index k = 0; k < a.size(); ++k) {
        const Complex term = std::conj(a(k)) * b(k);
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

double trace_distance_pure(const BosonState& psi, const BosonState& phi) {
    require_same_space(psi, phi, "trace_distance_pure");
    require_normalized(psi, "trace_distance_pure");
    require_normalized(phi, "trace_distance_pure");
    if (psi.amplitudes() == phi.amplitudes()) {
        return 0.0;
    }
    const ComplexVector a = psi.amplitudes() / psi.norm();
    const ComplexVector b = phi.amplitudes() / phi.norm();
    const ComplexVector orthogonal = b - a * inner_product(a, b);
    return std::clamp(orthogonal.norm(), 0.0, 1.0);
}

double state_distance(const BosonState& psi, const BosonState& phi) {
    require_same_space(psi, phi, "state_distance");
    return (phi.amplitudes() - psi.amplitudes()).norm();
}

OutcomeDistribution measure(const BosonState& state) {
    const ComplexVector& amps = state.amplitudes();
    std::vector<double> probs(static_cast<std::size_t>(amps.size()));
    for (Index k = 0; k < amps.size(); ++k) {
        probs[static_cast<std::size_t>(k)] = std::norm(amps(k));
    }
    return OutcomeDistribution(state.basis_ptr(), std::move(probs));
}

bool DistanceReport::chain_ok(double slack) const noexcept {
    return tv <= trace_dist + slack && trace_dist <= state_euclid + slack && state_euclid <= op_dist_lifted + slack &&
           op_dist_lifted <= bound_rhs() + slack;
}

bool DistanceReport::l1_paper_ok(double slack) const noexcept {
    return l1 <= bound_rhs() + slack;
}

DistanceReport chain_report(const UnitaryMatrix& u, const UnitaryMatrix& ut, int photons, const BosonState& psi0,
                            std::size_t cap) {
    if (u.dim() != ut.dim()) {
        throw DimensionError("chain_report: unitaries have different dimensions");
    }
    const BosonState psi = evolve(u, photons, psi0, cap);
    const BosonState psi_t = evolve(ut, photons, psi0, cap);
    DistanceReport r;
    r.n = photons;
    r.l1 = l1_distance(measure(psi_t), measure(psi));
    r.tv = 0.5 * r.l1;
    r.state_euclid = state_distance(psi, psi_t);
    r.trace_dist = trace_distance_pure(psi, psi_t);
    r.op_dist_lifted = lifted_operator_distance(u, ut, photons);
    r.op_dist_base = operator_distance(ut, u);
    return r;
}

}  // namespace bosonbound
