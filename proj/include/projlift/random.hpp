// Copyright 2026 The projlift Authors
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

#include <cstdint>
#include <optional>
#include <random>

#include "projlift/projective_core.hpp"

namespace projlift {

struct Seed {
    std::uint64_t value = 0;
    friend bool operator==(Seed, Seed) = default;
};

/// Deterministic stream derivation (splitmix64 finalizer over seed and stream id).
Seed derive_seed(Seed base, std::uint64_t stream);

/// Seeded generator used by every stochastic routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Uniform and Gaussian variates are produced here rather than by
/// <random> distributions, whose algorithms are implementation-defined, so
/// that a seed reproduces the same numbers on every platform.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed.value) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller).
    double normal();
    /// Complex standard normal: E|z|^2 = 1.
    Complex complex_normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Gaussian vector; complex components for Field::Complex, real ones otherwise.
StateVector gaussian_vector(Rng& rng, Eigen::Index n, Field field);

/// Unit ray, uniform on the projective space of the given field.
Ray random_ray(Rng& rng, Eigen::Index n, Field field = Field::Complex);

/// Haar-distributed unitary (real orthogonal for Field::Real).
ComplexMatrix haar_unitary(Rng& rng, Eigen::Index n, Field field = Field::Complex);

}  // namespace projlift
