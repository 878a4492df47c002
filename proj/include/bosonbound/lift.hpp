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

#include <cstddef>
#include <vector>

#include "bosonbound/fock.hpp"
#include "bosonbound/linalg.hpp"

namespace bosonbound {

/// Default bound on the n-photon space dimension N for dense N x N work.
inline constexpr std::size_t kDefaultSizeCap = 5000;

/// phi(U): the action of U on n identical bosons, in FockBasis order.
class LiftedOperator {
  public:
    LiftedOperator(FockBasisPtr basis, ComplexMatrix entries);

    int modes() const noexcept { return basis_->modes(); }
    int photons() const noexcept { return basis_->photons(); }
    std::size_t dim() const noexcept { return basis_->size(); }
    const FockBasis& basis() const noexcept { return *basis_; }
    const FockBasisPtr& basis_ptr() const noexcept { return basis_; }
    const ComplexMatrix& matrix() const noexcept { return entries_; }

  private:
    FockBasisPtr basis_;
    ComplexMatrix entries_;
};

/// Pure n-boson state: amplitudes over a FockBasis.
class BosonState {
  public:
    BosonState(FockBasisPtr basis, ComplexVector amplitudes);

    /// Fock basis state |S>.
    static BosonState fock(const OutcomeState& state);
    /// |1_n> on m modes.
    static BosonState input(int modes, int photons);

    int modes() const noexcept { return basis_->modes(); }
    int photons() const noexcept { return basis_->photons(); }
    std::size_t dim() const noexcept { return basis_->size(); }
    const FockBasis& basis() const noexcept { return *basis_; }
    const FockBasisPtr& basis_ptr() const noexcept { return basis_; }
    const ComplexVector& amplitudes() const noexcept { return amps_; }

    double norm() const { return amps_.norm(); }
    /// |norm - 1|.
    double normalization_defect() const { return std::abs(norm() - 1.0); }

  private:
    FockBasisPtr basis_;
    ComplexVector amps_;
};

/// Column T of phi(U):  <S|phi(U)|T> = Per(U_{S,T}) / sqrt(S! T!),
/// where U_{S,T} repeats row i s_i times and column j t_j times.
ComplexVector lift_column(const UnitaryMatrix& u, const FockBasis& basis, std::size_t column);

/// Dense phi(U). Throws SizeLimitError when N = C(m+n-1, n) exceeds `cap`.
LiftedOperator lift(const UnitaryMatrix& u, int photons, std::size_t cap = kDefaultSizeCap);

struct LiftedPhase {
    OutcomeState state;
    double phase;  ///< sum_i s_i theta_i reduced to (-pi, pi]
};

/// Spectrum of phi(M) from the spectrum of M: one eigenphase per outcome
/// state S, namely <S, theta>, in FockBasis order.
std::vector<LiftedPhase> lifted_eigenphases(const EigenphaseSet& phases, int photons,
                                            std::size_t cap = kEnumerationCap);

/// ||phi(Ut) - phi(U)||_op without forming phi: with theta the eigenphases
/// of Ut U^{-1}, returns max_S |exp(i <S, theta>) - 1|.
double lifted_operator_distance(const UnitaryMatrix& u, const UnitaryMatrix& ut, int photons,
                                std::size_t cap = kEnumerationCap);

/// Same quantity by SVD of lift(Ut) - lift(U). Cross-check path.
double dense_lifted_distance(const UnitaryMatrix& u, const UnitaryMatrix& ut, int photons,
                             std::size_t cap = kDefaultSizeCap);

/// phi(U) psi0, assembled from the columns of phi(U) that psi0 touches.
/// psi0 must be normalized within 1e-9.
BosonState evolve(const UnitaryMatrix& u, int photons, const BosonState& psi0, std::size_t cap = kDefaultSizeCap);

}  // namespace bosonbound
