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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bosonbound/linalg.hpp"

namespace bosonbound {

/// Default bound on the number of outcome states an enumeration may produce.
inline constexpr std::size_t kEnumerationCap = 1'000'000;

/// Largest photon number for which s! is tabulated exactly.
inline constexpr int kMaxFactorial = 20;

/// k! for 0 <= k <= 20, exact.
std::uint64_t factorial(int k);

/// C(m + n - 1, n): the number of ways to place n identical photons in m
/// modes. Saturates at UINT64_MAX.
std::uint64_t multiset_count(int modes, int photons);

/// Photon counts per output mode.
class OutcomeState {
  public:
    OutcomeState() = default;
    explicit OutcomeState(std::vector<int> counts);

    std::span<const int> counts() const noexcept { return counts_; }
    int modes() const noexcept { return static_cast<int>(counts_.size()); }
    int photons() const noexcept { return photons_; }
    int operator[](std::size_t i) const { return counts_[i]; }

    /// prod_i s_i!, exact.
    std::uint64_t factorial_product() const;

    /// "s1|s2|...|sm"
    std::string to_string() const;
    static OutcomeState parse(std::string_view text);

    friend bool operator==(const OutcomeState& a, const OutcomeState& b) { return a.counts_ == b.counts_; }
    friend auto operator<=>(const OutcomeState& a, const OutcomeState& b) { return a.counts_ <=> b.counts_; }

  private:
    std::vector<int> counts_;
    int photons_ = 0;
};

/// |1_n>: one photon in each of the first n modes.
OutcomeState input_state(int modes, int photons);

/// All n-photon, m-mode outcome states in lexicographically descending
/// order of the count vector: (n,0,..,0) first, (0,..,0,n) last.
std::vector<OutcomeState> enumerate_outcomes(int modes, int photons, std::size_t cap = kEnumerationCap);

/// Enumerated outcome states plus O(m) ranking of a state back to its index.
class FockBasis {
  public:
    FockBasis(int modes, int photons, std::size_t cap = kEnumerationCap);

    int modes() const noexcept { return modes_; }
    int photons() const noexcept { return photons_; }
    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<OutcomeState>& states() const noexcept { return states_; }
    const OutcomeState& operator[](std::size_t i) const { return states_[i]; }

    /// Position of `state` in states(). Throws DimensionError if the state
    /// has the wrong number of modes or photons.
    std::size_t index_of(const OutcomeState& state) const;

  private:
    int modes_;
    int photons_;
    std::vector<OutcomeState> states_;
};

using FockBasisPtr = std::shared_ptr<const FockBasis>;

FockBasisPtr make_basis(int modes, int photons, std::size_t cap = kEnumerationCap);

/// Dense probability vector over a FockBasis.
class OutcomeDistribution {
  public:
    OutcomeDistribution(FockBasisPtr basis, std::vector<double> probabilities);

    int modes() const noexcept { return basis_->modes(); }
    int photons() const noexcept { return basis_->photons(); }
    std::size_t size() const noexcept { return probs_.size(); }
    const FockBasis& basis() const noexcept { return *basis_; }
    const FockBasisPtr& basis_ptr() const noexcept { return basis_; }
    const std::vector<double>& probabilities() const noexcept { return probs_; }

    double operator[](std::size_t i) const { return probs_[i]; }
    double probability(const OutcomeState& state) const { return probs_[basis_->index_of(state)]; }
    double total_mass() const;

  private:
    FockBasisPtr basis_;
    std::vector<double> probs_;
};

/// Exact BosonSampling distribution for input |1_n>:
///   Pr[S] = |Per(U_{S,[n]})|^2 / (s_1! ... s_m!),
/// where U_{S,[n]} takes the first n columns of U (the input modes) and row
/// i with multiplicity s_i. Column j of U is the single-photon image of mode j.
OutcomeDistribution output_distribution(const UnitaryMatrix& u, int photons,
                                        std::size_t cap = kEnumerationCap);

/// Same experiment with distinguishable particles:
///   Pr[S] = Per(P_{S,[n]}) / (s_1! ... s_m!), P_ij = |U_ij|^2.
OutcomeDistribution distinguishable_distribution(const UnitaryMatrix& u, int photons,
                                                 std::size_t cap = kEnumerationCap);

/// Inverse-CDF draws over the basis order. The distribution must be
/// normalized within 1e-6.
std::vector<OutcomeState> sample_outcome(const OutcomeDistribution& dist, std::uint64_t seed, std::size_t count);

}  // namespace bosonbound
