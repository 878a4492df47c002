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

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bosonbound/errors.hpp"
#include "bosonbound/linalg.hpp"

namespace bosonbound {

/// Largest matrix order accepted by permanent(); 2^30 Gray-code steps.
inline constexpr Index kMaxPermanentOrder = 30;

/// Per(A) = sum over permutations s of prod_i A(i, s(i)).
///
/// Ryser's inclusion-exclusion formula
///   Per(A) = (-1)^k sum_{S subset of cols} (-1)^|S| prod_i sum_{j in S} A(i, j)
/// visited in Gray-code order, so each step adds or removes one column from
/// the running row sums: O(k 2^k) time, one length-k buffer.
/// Works for any scalar type (complex amplitudes, real intensities).
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) {
        throw DimensionError("permanent: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
    }
    const Index k = a.rows();
    if (k > kMaxPermanentOrder) {
        throw SizeLimitError("permanent: order " + std::to_string(k) + " exceeds limit " +
                             std::to_string(kMaxPermanentOrder));
    }
    if (k == 0) {
        return Scalar(1);
    }
    const PlainMatrixOf<Derived> m = a.derived();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_sums = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(k);

    Scalar total(0);
    std::uint64_t subset = 0;
    bool odd = false;
    const std::uint64_t steps = std::uint64_t{1} << k;
    for (std::uint64_t g = 1; g < steps; ++g) {
        const int j = std::countr_zero(g);
        const std::uint64_t bit = std::uint64_t{1} << j;
        subset ^= bit;
        if (subset & bit) {
            row_sums += m.col(j);
        } else {
            row_sums -= m.col(j);
        }
        odd = !odd;
        const Scalar prod = row_sums.prod();
        if (odd) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return (k % 2 == 1) ? Scalar(-total) : total;
}

/// Row and column multiplicities selecting a square submatrix with repeats.
struct SubmatrixSpec {
    std::vector<int> row_counts;
    std::vector<int> col_counts;
};

/// Builds the dense submatrix that repeats row i row_counts[i] times and
/// column j col_counts[j] times, rows and columns in index order.
template <typename Derived>
PlainMatrixOf<Derived> expand_submatrix(const Eigen::MatrixBase<Derived>& u, const SubmatrixSpec& spec) {
    if (static_cast<Index>(spec.row_counts.size()) != u.rows() ||
        static_cast<Index>(spec.col_counts.size()) != u.cols()) {
        throw DimensionError("expand_submatrix: multiplicity vectors must match the matrix shape");
    }
    long rows = 0;
    long cols = 0;
    for (int c : spec.row_counts) {
        if (c < 0) throw SpecError("expand_submatrix: negative row multiplicity");
        rows += c;
    }
    for (int c : spec.col_counts) {
        if (c < 0) throw SpecError("expand_submatrix: negative column multiplicity");
        cols += c;
    }
    if (rows != cols) {
        throw SpecError("expand_submatrix: row multiplicities sum to " + std::to_string(rows) +
                        " but column multiplicities sum to " + std::to_string(cols));
    }
    if (rows > kMaxPermanentOrder) {
        throw SizeLimitError("expand_submatrix: expanded order " + std::to_string(rows) +
                             " exceeds limit " + std::to_string(kMaxPermanentOrder));
    }

    std::vector<Index> row_idx;
    std::vector<Index> col_idx;
    row_idx.reserve(static_cast<std::size_t>(rows));
    col_idx.reserve(static_cast<std::size_t>(cols));
    for (Index i = 0; i < u.rows(); ++i) {
        row_idx.insert(row_idx.end(), static_cast<std::size_t>(spec.row_counts[static_cast<std::size_t>(i)]), i);
    }
    for (Index j = 0; j < u.cols(); ++j) {
        col_idx.insert(col_idx.end(), static_cast<std::size_t>(spec.col_counts[static_cast<std::size_t>(j)]), j);
    }
    return u.derived()(row_idx, col_idx);
}

template <typename Derived>
typename Derived::Scalar permanent_sub(const Eigen::MatrixBase<Derived>& u, const SubmatrixSpec& spec) {
    return permanent(expand_submatrix(u, spec));
}

inline Complex permanent_sub(const UnitaryMatrix& u, const SubmatrixSpec& spec) {
    return permanent_sub(u.matrix(), spec);
}

}  // namespace bosonbound
