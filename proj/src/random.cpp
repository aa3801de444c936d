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

#include "projlift/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace projlift {

Seed derive_seed(Seed base, std::uint64_t stream) {
    std::uint64_t z = base.value + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Seed{z ^ (z >> 31)};
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (spare_) {
        const double out = *spare_;
        spare_.reset();
        return out;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

StateVector gaussian_vector(Rng& rng, Eigen::Index n, Field field) {
    StateVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v[i] = field == Field::Complex ? rng.complex_normal() : Complex(rng.normal(), 0.0);
    }
    return v;
}

Ray random_ray(Rng& rng, Eigen::Index n, Field field) {
    StateVector v = gaussian_vector(rng, n, field);
    while (v.cwiseAbs().maxCoeff() == 0.0) v = gaussian_vector(rng, n, field);
    return Ray::from_vector(v);
}

ComplexMatrix haar_unitary(Rng& rng, Eigen::Index n, Field field) {
    ComplexMatrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) z.col(j) = gaussian_vector(rng, n, field);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix& r = qr.matrixQR();
    // Making diag(R) positive makes the factorization unique and Q Haar distributed.
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

}  // namespace projlift
