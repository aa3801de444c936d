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

#include "projlift/testkit.hpp"

#include <Eigen/SVD>

namespace projlift::testkit {

ComplexMatrix haar_unitary(Eigen::Index n, Seed seed) {
    Rng rng(seed);
    return projlift::haar_unitary(rng, n);
}

Ray random_ray(Eigen::Index n, Seed seed) {
    Rng rng(seed);
    return projlift::random_ray(rng, n);
}

ComplexMatrix random_invertible(Eigen::Index n, Seed seed, double max_condition) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        ComplexMatrix m(n, n);
        for (Eigen::Index j = 0; j < n; ++j) m.col(j) = gaussian_vector(rng, n, Field::Complex);
        const Eigen::VectorXd s = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
        if (s[n - 1] > 0.0 && s[0] / s[n - 1] <= max_condition) return m;
    }
}

Eigen::MatrixXd gram_probabilities(std::span<const Ray> rays) {
    const auto k = static_cast<Eigen::Index>(rays.size());
    Eigen::MatrixXd gram(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        gram(i, i) = 1.0;
        for (Eigen::Index j = 0; j < i; ++j) {
            gram(i, j) = gram(j, i) = transition_probability(rays[static_cast<std::size_t>(i)],
                                                             rays[static_cast<std::size_t>(j)]);
        }
    }
    return gram;
}

RayMap perturb_ray_map(const MatrixInduced& map, double eps, Seed seed) {
    if (!(eps >= 0.0)) throw Error(ErrorCode::InvalidMap, "noise scale must be >= 0");
    Rng rng(seed);
    ComplexMatrix m = map.matrix;
    if (eps > 0.0) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) += eps * rng.complex_normal();
        }
    }
    return RayMap::matrix_induced(std::move(m), map.conjugate_first);
}

}  // namespace projlift::testkit
