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

#include <span>

#include "projlift/random.hpp"
#include "projlift/ray_maps.hpp"

// Seeded generators for property tests, acceptance runs and `projlift gen`.
namespace projlift::testkit {

ComplexMatrix haar_unitary(Eigen::Index n, Seed seed);

Ray random_ray(Eigen::Index n, Seed seed);

/// Gaussian matrix redrawn (on derived seeds) until cond <= max_condition.
ComplexMatrix random_invertible(Eigen::Index n, Seed seed, double max_condition = 1e3);

/// Entry (i, j) is the transition probability of rays i and j.
Eigen::MatrixXd gram_probabilities(std::span<const Ray> rays);

/// Adds independent complex Gaussian noise of scale eps to every entry.
RayMap perturb_ray_map(const MatrixInduced& map, double eps, Seed seed);

}  // namespace projlift::testkit
