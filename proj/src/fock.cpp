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

#include "bosonbound/fock.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "bosonbound/permanent.hpp"
#include "bosonbound/random.hpp"

namespace bosonbound {

namespace {

constexpr std::array<std::uint64_t, kMaxFactorial + 1> make_factorials() {
    std::array<std::uint64_t, kMaxFactorial + 1> f{};
    f[0] = 1;
    for (int k = 1; k <= kMaxFactorial; ++k) {
        f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k - 1)] * static_cast<std::uint64_t>(k);
    }
    return f;
}

constexpr auto kFactorials = make_factorials();

void check_shape(int modes, int photons, const char* what) {
    if (modes < 1) {
        throw DimensionError(std::string(what) + ": mode count must be >= 1");
    }
    if (photons < 0) {
        throw ParameterError(std::string(what) + ": photon count must be >= 0");
    }
}

}  // namespace

std::uint64_t factorial(int k) {
    if (k < 0 || k > kMaxFactorial) {
        throw SizeLimitError("factorial: argument " + std::to_string(k) + " outside [0, 20]");
    }
    return kFactorials[static_cast<std::size_t>(k)];
}

std::uint64_t multiset_count(int modes, int photons) {
    if (modes < 0 || photons < 0) {
        return 0;
    }
    if (modes == 0) {
        return photons == 0 ? 1 : 0;
    }
    // C(m - 1 + k, k) built up one k at a time; every intermediate is itself
    // a binomial coefficient, so the division is exact.
    __extension__ using Wide = unsigned __int128;
    Wide acc = 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (int k = 1; k <= photons; ++k) {
        acc = acc * static_cast<unsigned>(modes - 1 + k) / static_cast<unsigned>(k);
        if (acc > kMax) {
            return kMax;
        }
    }
    return static_cast<std::uint64_t>(acc);
}

OutcomeState::OutcomeState(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) {
            throw ParameterError("OutcomeState: negative photon count");
        }
        photons_ += c;
    }
}

std::uint64_t OutcomeState::factorial_product() const {
    std::uint64_t p = 1;
    for (int c : counts_) {
        p *= factorial(c);
    }
    return p;
}

std::string OutcomeState::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(counts_[i]);
    }
    return out;
}

OutcomeState OutcomeState::parse(std::string_view text) {
    std::vector<int> counts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t bar = text.find('|', pos);
        const std::string_view field = text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
            throw FormatError("OutcomeState::parse: bad field '" + std::string(field) + "'");
        }
        counts.push_back(value);
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return OutcomeState(std::move(counts));
}

OutcomeState input_state(int modes, int photons) {
    check_shape(modes, photons, "input_state");
    if (photons > modes) {
        throw InputStateError("input_state: " + std::to_string(photons) + " photons do not fit one per mode in " +
                              std::to_string(modes) + " modes");
    }
    std::vector<int> counts(static_cast<std::size_t>(modes), 0);
    std::fill_n(counts.begin(), photons, 1);
    return OutcomeState(std::move(counts));
}

std::vector<OutcomeState> enumerate_outcomes(int modes, int photons, std::size_t cap) {
    check_shape(modes, photons, "enumerate_outcomes");
    const std::uint64_t total = multiset_count(modes, photons);
    if (total > cap) {
        throw SizeLimitError("enumerate_outcomes: " + std::to_string(total) + " outcome states exceed cap " +
                             std::to_string(cap));
    }
    std::vector<OutcomeState> out;
    out.reserve(static_cast<std::size_t>(total));

    std::vector<int> c(static_cast<std::size_t>(modes), 0);
    c[0] = photons;
    const int last = modes - 1;
    while (true) {
        out.emplace_back(c);
        // Rightmost non-final position holding a photon moves one photon
        // right and collects everything behind it.
        int i = last - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) break;
        int tail = 0;
        for (int k = i + 1; k <= last; ++k) {
            tail += c[static_cast<std::size_t>(k)];
            c[static_cast<std::size_t>(k)] = 0;
        }
        c[static_cast<std::size_t>(i)] -= 1;
        c[static_cast<std::size_t>(i + 1)] = tail + 1;
    }
    return out;
}

FockBasis::FockBasis(int modes, int photons, std::size_t cap)
    : modes_(modes), photons_(photons), states_(enumerate_outcomes(modes, photons, cap)) {}

std::size_t FockBasis::index_of(const OutcomeState& state) const {
    if (state.modes() != modes_ || state.photons() != photons_) {
        throw DimensionError("FockBasis::index_of: state " + state.to_string() + " is not an " +
                             std::to_string(photons_) + "-photon, " + std::to_string(modes_) + "-mode state");
    }
    // Count the states that sort before `state`: at each position, those
    // sharing the prefix but holding more photons here.
    std::uint64_t rank = 0;
    int remaining = photons_;
    for (int i = 0; i + 1 < modes_; ++i) {
        const int here = state[static_cast<std::size_t>(i)];
        for (int c = here + 1; c <= remaining; ++c) {
            rank += multiset_count(modes_ - i - 1, remaining - c);
        }
        remaining -= here;
    }
    return static_cast<std::size_t>(rank);
}

FockBasisPtr make_basis(int modes, int photons, std::size_t cap) {
    return std::make_shared<const FockBasis>(modes, photons, cap);
}

OutcomeDistribution::OutcomeDistribution(FockBasisPtr basis, std::vector<double> probabilities)
    : basis_(std::move(basis)), probs_(std::move(probabilities)) {
    if (!basis_) {
        throw DimensionError("OutcomeDistribution: null basis");
    }
    if (probs_.size() != basis_->size()) {
        throw DimensionError("OutcomeDistribution: " + std::to_string(probs_.size()) + " probabilities for " +
                             std::to_string(basis_->size()) + " outcome states");
    }
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw ContractError("OutcomeDistribution: probabilities must be finite and nonnegative");
        }
    }
}

double OutcomeDistribution::total_mass() const {
    // Neumaier summation.
    double sum = 0.0;
    double comp = 0.0;
    for (double p : probs_) {
        const double t = sum + p;
        comp += (std::abs(sum) >= std::abs(p)) ? (sum - t) + p : (p - t) + sum;
        sum = t;
    }
    return sum + comp;
}

namespace {

void check_distribution_inputs(const UnitaryMatrix& u, int photons, const char* what) {
    check_shape(static_cast<int>(u.dim()), photons, what);
    if (photons > u.dim()) {
        throw InputStateError(std::string(what) + ": n = " + std::to_string(photons) + " exceeds m = " +
                              std::to_string(u.dim()));
    }
    if (photons > kMaxFactorial) {
        throw SizeLimitError(std::string(what) + ": photon count above 20");
    }
}

template <typename Matrix, typename ToProbability>
OutcomeDistribution distribution_from(const Matrix& single, int photons, std::size_t cap, ToProbability&& to_prob) {
    const int modes = static_cast<int>(single.rows());
    auto basis = make_basis(modes, photons, cap);
    SubmatrixSpec spec;
    spec.col_counts.assign(static_cast<std::size_t>(modes), 0);
    std::fill_n(spec.col_counts.begin(), photons, 1);

    std::vector<double> probs(basis->size());
    for (std::size_t k = 0; k < basis->size(); ++k) {
        const OutcomeState& s = (*basis)[k];
        spec.row_counts.assign(s.counts().begin(), s.counts().end());
        const auto per = permanent_sub(single, spec);
        probs[k] = to_prob(per) / static_cast<double>(s.factorial_product());
    }
    return OutcomeDistribution(std::move(basis), std::move(probs));
}

}  // namespace

OutcomeDistribution output_distribution(const UnitaryMatrix& u, int photons, std::size_t cap) {
    check_distribution_inputs(u, photons, "output_distribution");
    return distribution_from(u.matrix(), photons, cap, [](Complex per) { return std::norm(per); });
}

OutcomeDistribution distinguishable_distribution(const UnitaryMatrix& u, int photons, std::size_t cap) {
    check_distribution_inputs(u, photons, "distinguishable_distribution");
    const Eigen::MatrixXd intensities = u.matrix().cwiseAbs2();
    return distribution_from(intensities, photons, cap, [](double per) { return std::max(per, 0.0); });
}

std::vector<OutcomeState> sample_outcome(const OutcomeDistribution& dist, std::uint64_t seed, std::size_t count) {
    const double total = dist.total_mass();
    if (!(std::abs(total - 1.0) <= 1e-6)) {
        throw ContractError("sample_outcome: distribution mass " + std::to_string(total) + " is not 1 within 1e-6");
    }
    const auto& probs = dist.probabilities();
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    std::size_t last_supported = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] > 0.0) last_supported = k;
    }

    Rng rng(seed);
    std::vector<OutcomeState> draws;
    draws.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const double u = rng.uniform() * cdf.back();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = (it == cdf.end()) ? last_supported : static_cast<std::size_t>(it - cdf.begin());
        draws.push_back(dist.basis()[k]);
    }
    return draws;
}

}  // namespace bosonbound
