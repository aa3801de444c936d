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

#include <complex>
#include <span>

#include <Eigen/Core>

#include "projlift/errors.hpp"

namespace projlift {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Field { Real, Complex };

std::string_view field_name(Field field);

/// Canonical-gauge tolerances shared by the whole library.
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kRankTolerance = 1e-10;
inline constexpr double kJoinTolerance = 1e-10;

/// A one-dimensional subspace, stored through a unit representative whose
/// largest-magnitude component (lowest index on ties) is real and >= 0.
class Ray {
public:
    /// Normalizes and gauges `v`. Throws ZeroVector or DimensionTooSmall.
    static Ray from_vector(const StateVector& v);

    const StateVector& representative() const noexcept { return rep_; }
    Eigen::Index dim() const noexcept { return rep_.size(); }

    /// True when every component has zero imaginary part.
    bool is_real(double tol = 0.0) const;

private:
    explicit Ray(StateVector rep) : rep_(std::move(rep)) {}
    StateVector rep_;
};

inline Ray ray_from_vector(const StateVector& v) { return Ray::from_vector(v); }

/// |<a|b>|^2 of the unit representatives.
double transition_probability(const Ray& a, const Ray& b);

bool rays_equal(const Ray& a, const Ray& b, double tol);

/// A projective subspace kept as an orthonormal basis of its linear span.
class ProjectiveSubspace {
public:
    /// Orthonormalizes a spanning set; directions below the rank tolerance are dropped.
    static ProjectiveSubspace span_of(std::span<const StateVector> vectors);

    /// Takes the columns as the basis; throws InvalidMap unless orthonormal within 1e-10.
    static ProjectiveSubspace from_orthonormal(ComplexMatrix basis);

    Eigen::Index ambient_dim() const noexcept { return basis_.rows(); }
    Eigen::Index linear_dim() const noexcept { return basis_.cols(); }
    Eigen::Index projective_dim() const noexcept { return basis_.cols() - 1; }
    const ComplexMatrix& basis() const noexcept { return basis_; }

    ComplexMatrix projector() const { return basis_ * basis_.adjoint(); }

    /// Norm of the part of `v` orthogonal to the span.
    double residual(const StateVector& v) const;

private:
    explicit ProjectiveSubspace(ComplexMatrix basis) : basis_(std::move(basis)) {}
    ComplexMatrix basis_;
};

ProjectiveSubspace join(const Ray& a, const Ray& b);

bool contains(const ProjectiveSubspace& subspace, const Ray& c, double tol);

bool projectively_independent(std::span<const Ray> rays);

/// True iff all points lie on the line through the first two.
bool collinear(std::span<const Ray> points);

/// In vector dimension n: n + 1 rays, every n of them independent.
bool is_projective_frame(std::span<const Ray> rays);

}  // namespace projlift
