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

#include "bosonbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "bosonbound/random.hpp"

namespace bosonbound {

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    require_square(m_, "UnitaryMatrix");
    if (!m_.allFinite()) {
        throw ContractError("UnitaryMatrix: non-finite entry");
    }
    defect_ = unitarity_defect(m_);
    if (!(defect_ <= tol)) {
        throw ContractError("UnitaryMatrix: unitarity defect " + std::to_string(defect_) +
                            " exceeds tolerance " + std::to_string(tol));
    }
}

UnitaryMatrix UnitaryMatrix::identity(Index dim) {
    if (dim < 1) {
        throw DimensionError("UnitaryMatrix::identity: dimension must be >= 1");
    }
    return UnitaryMatrix(ComplexMatrix::Identity(dim, dim));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(m_.adjoint());
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("UnitaryMatrix product: dimension mismatch");
    }
    return UnitaryMatrix(a.matrix() * b.matrix());
}

double wrap_phase(double angle) {
    constexpr double kPi = std::numbers::pi;
    double r = std::remainder(angle, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

UnitaryMatrix haar_random_unitary(Index dim, std::uint64_t seed) {
    if (dim < 1) {
        throw DimensionError("haar_random_unitary: dimension must be >= 1");
    }
    Rng rng(seed);
    ComplexMatrix g(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Index k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        q.col(k) *= (mag > 0.0) ? d / mag : Complex(1.0);
    }
    return UnitaryMatrix(std::move(q));
}

namespace {

void check_eigensolve_input(const UnitaryMatrix& u) {
    if (!(u.defect() <= kUnitaryTolerance)) {
        throw ContractError("unitary_eigenphases: unitarity defect above tolerance");
    }
}

// Stable order: ascending phase, ties by original index.
std::vector<Index> phase_order(const std::vector<double>& raw) {
    std::vector<Index> order(raw.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return raw[a] < raw[b]; });
    return order;
}

}  // namespace

UnitaryEigensystem unitary_eigensystem(const UnitaryMatrix& u) {
    check_eigensolve_input(u);
    // A unitary is normal, so its Schur form is diagonal up to rounding and
    // the Schur vectors are an orthonormal eigenbasis even for repeated
    // eigenvalues.
    Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix(), /*computeU=*/true);
    const ComplexMatrix& t = schur.matrixT();
    const ComplexMatrix& z = schur.matrixU();

    std::vector<double> raw(static_cast<std::size_t>(u.dim()));
    for (Index k = 0; k < u.dim(); ++k) {
        raw[static_cast<std::size_t>(k)] = wrap_phase(std::arg(t(k, k)));
    }
    const auto order = phase_order(raw);

    UnitaryEigensystem out;
    out.phases.phases.reserve(raw.size());
    out.vectors.resize(u.dim(), u.dim());
    for (Index k = 0; k < u.dim(); ++k) {
        const Index src = order[static_cast<std::size_t>(k)];
        out.phases.phases.push_back(raw[static_cast<std::size_t>(src)]);
        out.vectors.col(k) = z.col(src);
    }
    return out;
}

EigenphaseSet unitary_eigenphases(const UnitaryMatrix& u) {
    check_eigensolve_input(u);
    Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix(), /*computeU=*/false);
    const ComplexMatrix& t = schur.matrixT();
    std::vector<double> raw(static_cast<std::size_t>(u.dim()));
    for (Index k = 0; k < u.dim(); ++k) {
        raw[static_cast<std::size_t>(k)] = wrap_phase(std::arg(t(k, k)));
    }
    EigenphaseSet out;
    out.phases.reserve(raw.size());
    for (Index src : phase_order(raw)) {
        out.phases.push_back(raw[static_cast<std::size_t>(src)]);
    }
    return out;
}

double unitary_operator_distance(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("unitary_operator_distance: dimension mismatch");
    }
    const UnitaryMatrix ratio(a.matrix() * b.matrix().adjoint());
    double best = 0.0;
    for (double theta : unitary_eigenphases(ratio).phases) {
        best = std::max(best, 2.0 * std::abs(std::sin(0.5 * theta)));
    }
    return best;
}

}  // namespace bosonbound
