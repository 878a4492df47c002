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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "bosonbound/errors.hpp"

namespace bosonbound {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest accepted ||U*U - I||_op for a matrix to be treated as unitary.
inline constexpr double kUnitaryTolerance = 1e-10;

template <typename Derived>
using PlainMatrixOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

/// Largest singular value.
template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::BDCSVD<PlainMatrixOf<Derived>> svd(m.derived().eval());
    return static_cast<double>(svd.singularValues()(0));
}

/// ||M*M - I||_op. M*M - I is Hermitian, so its norm is its largest
/// eigenvalue magnitude.
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& m) {
    require_square(m, "unitarity_defect");
    const auto plain = m.derived().eval();
    PlainMatrixOf<Derived> gram = plain.adjoint() * plain;
    gram.diagonal().array() -= typename Derived::Scalar(1);
    Eigen::SelfAdjointEigenSolver<PlainMatrixOf<Derived>> es(gram, Eigen::EigenvaluesOnly);
    return static_cast<double>(es.eigenvalues().cwiseAbs().maxCoeff());
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol) {
    return unitarity_defect(m) <= tol;
}

/// Spectral norm of A - B. This is the ground-truth route for every
/// operator distance in the project.
template <typename DerivedA, typename DerivedB>
double operator_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("operator_distance: shapes " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + " differ");
    }
    return spectral_norm(a - b);
}

/// Square complex matrix whose unitarity defect was measured at construction
/// and found within tolerance.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(ComplexMatrix m, double tol = kUnitaryTolerance);

    static UnitaryMatrix identity(Index dim);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Index dim() const noexcept { return m_.rows(); }
    double defect() const noexcept { return defect_; }
    Complex operator()(Index i, Index j) const { return m_(i, j); }

    UnitaryMatrix adjoint() const;

  private:
    ComplexMatrix m_;
    double defect_ = 0.0;
};

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Eigenphases of a unitary, each in (-pi, pi], sorted ascending.
struct EigenphaseSet {
    std::vector<double> phases;

    std::size_t size() const noexcept { return phases.size(); }
};

struct UnitaryEigensystem {
    EigenphaseSet phases;
    /// Column k is a unit eigenvector for phases.phases[k].
    ComplexMatrix vectors;
};

/// Reduces an angle to (-pi, pi].
double wrap_phase(double angle);

/// Haar-distributed unitary from the QR factorization of a complex Ginibre
/// matrix, with Q's columns rephased so that R has a positive real diagonal.
UnitaryMatrix haar_random_unitary(Index dim, std::uint64_t seed);

EigenphaseSet unitary_eigenphases(const UnitaryMatrix& u);
UnitaryEigensystem unitary_eigensystem(const UnitaryMatrix& u);

/// Operator distance of two unitaries from the spectrum of A B^{-1}:
/// max_i |lambda_i - 1|.
double unitary_operator_distance(const UnitaryMatrix& a, const UnitaryMatrix& b);

inline double operator_distance(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return operator_distance(a.matrix(), b.matrix());
}

}  // namespace bosonbound
