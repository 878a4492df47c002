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
#include <random>

namespace bosonbound {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives a child seed from a master seed and any number of integer
/// coordinates: s <- splitmix64(s ^ splitmix64(part)) for each part in order.
/// Every experiment seed in the project is produced this way, so a trial can
/// be replayed from (master_seed, coordinates) alone.
template <typename... Parts>
constexpr std::uint64_t mix_seed(std::uint64_t seed, Parts... parts) noexcept {
    std::uint64_t s = splitmix64(seed);
    ((s = splitmix64(s ^ splitmix64(static_cast<std::uint64_t>(parts)))), ...);
    return s;
}

/// Seeded random source. Never default-constructed; there is no global state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal(double stddev = 1.0) {
        std::normal_distribution<double> dist(0.0, stddev);
        return dist(engine_);
    }

    /// Standard complex Gaussian: independent real and imaginary parts with
    /// variance 1/2 each, so E|z|^2 = 1.
    std::complex<double> complex_normal() {
        constexpr double kHalfStd = 0.70710678118654752440;
        const double re = normal(kHalfStd);
        const double im = normal(kHalfStd);
        return {re, im};
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace bosonbound
