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

#include "bosonbound/lift.hpp"

#include <algorithm>
#include <cmath>

#include "bosonbound/permanent.hpp"

namespace bosonbound {

LiftedOperator::LiftedOperator(FockBasisPtr basis, ComplexMatrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    if (!basis_) {
        throw DimensionError("LiftedOperator: null basis");
    }
    const auto n = static_cast<Index>(basis_->size());
    if (entries_.rows() != n || entries_.cols() != n) {
        throw DimensionError("LiftedOperator: matrix shape does not match basis size");
    }
}

BosonState::BosonState(FockBasisPtr basis, ComplexVector amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
    if (!basis_) {
        throw DimensionError("BosonState: null basis");
    }
    if (amps_.size() != static_cast<Index>(basis_->size())) {
        throw DimensionError("BosonState: " + std::to_string(amps_.size()) + " amplitudes for " +
                             std::to_string(basis_->size()) + " basis states");
    }
}

BosonState BosonState::fock(const OutcomeState& state) {
    auto basis = make_basis(state.modes(), state.photons());
    ComplexVector amps = ComplexVector::Zero(static_cast<Index>(basis->size()));
    amps(static_cast<Index>(basis->index_of(state))) = 1.0;
    return BosonState(std::move(basis), std::move(amps));
}

BosonState BosonState::input(int modes, int photons) {
    return fock(input_state(modes, photons));
}

namespace {

void check_space(const UnitaryMatrix& u, int photons, std::size_t cap, const char* what) {
    if (photons < 0) {
        throw ParameterError(std::string(what) + ": photon count must be >= 0");
    }
    const std::uint64_t n = multiset_count(static_cast<int>(u.dim()), photons);
    if (n > cap) {
        throw SizeLimitError(std::string(what) + ": N = " + std::to_string(n) + " exceeds size cap " +
                             std::to_string(cap));
    }
}

ComplexVector column_of(const ComplexMatrix& u, const FockBasis& basis, std::size_t column,
                        const std::vector<double>& sqrt_fact) {
    const OutcomeState& t = basis[column];
    SubmatrixSpec spec;
    spec.col_counts.assign(t.counts().begin(), t.counts().end());
    ComplexVector out(static_cast<Index>(basis.size()));
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const OutcomeState& s = basis[r];
        spec.row_counts.assign(s.counts().begin(), s.counts().end());
        out(static_cast<Index>(r)) = permanent_sub(u, spec) / (sqrt_fact[r] * sqrt_fact[column]);
    }
    return out;
}

std::vector<double> sqrt_factorials(const FockBasis& basis) {
    std::vector<double> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out[k] = std::sqrt(static_cast<double>(basis[k].factorial_product()));
    }
    return out;
}

}  // namespace

ComplexVector lift_column(const UnitaryMatrix& u, const FockBasis& basis, std::size_t column) {
    if (basis.modes() != u.dim()) {
        throw DimensionError("lift_column: basis and unitary disagree on the mode count");
    }
    if (column >= basis.size()) {
        throw DimensionError("lift_column: column index out of range");
    }
    return column_of(u.matrix(), basis, column, sqrt_factorials(basis));
}

LiftedOperator lift(const UnitaryMatrix& u, int photons, std::size_t cap) {
    check_space(u, photons, cap, "lift");
    auto basis = make_basis(static_cast<int>(u.dim()), photons);
    const auto sqrt_fact = sqrt_factorials(*basis);
    const auto n = static_cast<Index>(basis->size());
    ComplexMatrix phi(n, n);
    for (Index col = 0; col < n; ++col) {
        phi.col(col) = column_of(u.matrix(), *basis, static_cast<std::size_t>(col), sqrt_fact);
    }
    return LiftedOperator(std::move(basis), std::move(phi));
}

std::vector<LiftedPhase> lifted_eigenphases(const EigenphaseSet& phases, int photons, std::size_t cap) {
    if (phases.size() == 0) {
        throw DimensionError("lifted_eigenphases: empty phase set");
    }
    const auto states = enumerate_outcomes(static_cast<int>(phases.size()), photons, cap);
    std::vector<LiftedPhase> out;
    out.reserve(states.size());
    for (const auto& s : states) {
        double sum = 0.0;
        for (std::size_t i = 0; i < phases.size(); ++i) {
            sum += s[i] * phases.phases[i];
        }
        out.push_back({s, wrap_phase(sum)});
    }
    return out;
}

double lifted_operator_distance(const UnitaryMatrix& u, const UnitaryMatrix& ut, int photons, std::size_t cap) {
    if (u.dim() != ut.dim()) {
        throw DimensionError("lifted_operator_distance: dimension mismatch");
    }
    if (u.matrix() == ut.matrix()) {
        return 0.0;
    }
    const UnitaryMatrix ratio(ut.matrix() * u.matrix().adjoint());
    double best = 0.0;
    for (const auto& lp : lifted_eigenphases(unitary_eigenphases(ratio), photons, cap)) {
        best = std::max(best, 2.0 * std::abs(std::sin(0.5 * lp.phase)));
    }
    return best;
}

double dense_lifted_distance(const UnitaryMatrix& u, const UnitaryMatrix& ut, int photons, std::size_t cap) {
    if (u.dim() != ut.dim()) {
        throw DimensionError("dense_lifted_distance: dimension mismatch");
    }
    return operator_distance(lift(u, photons, cap).matrix(), lift(ut, photons, cap).matrix());
}

BosonState evolve(const UnitaryMatrix& u, int photons, const BosonState& psi0, std::size_t cap) {
    if (psi0.modes() != u.dim() || psi0.photons() != photons) {
        throw DimensionError("evolve: state shape does not match (m, n)");
    }
    check_space(u, photons, cap, "evolve");
    if (!(psi0.normalization_defect() <= 1e-9)) {
        throw ContractError("evolve: input state norm is " + std::to_string(psi0.norm()) + ", expected 1 within 1e-9");
    }
    const FockBasis& basis = psi0.basis();
    const auto sqrt_fact = sqrt_factorials(basis);
    ComplexVector out = ComplexVector::Zero(static_cast<Index>(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const Complex a = psi0.amplitudes()(static_cast<Index>(col));
        if (a != Complex(0.0)) {
            out += a * column_of(u.matrix(), basis, col, sqrt_fact);
        }
    }
    return BosonState(psi0.basis_ptr(), std::move(out));
}

}  // namespace bosonbound
