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

#include "projlift/projective_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

namespace projlift {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::DegenerateJoin: return "DegenerateJoin";
        case ErrorCode::TooFewRays: return "TooFewRays";
        case ErrorCode::WrongFrameSize: return "WrongFrameSize";
        case ErrorCode::InvalidMap: return "InvalidMap";
        case ErrorCode::ProbeNotTabulated: return "ProbeNotTabulated";
        case ErrorCode::NotACollineation: return "NotACollineation";
        case ErrorCode::NotQuasiUnitary: return "NotQuasiUnitary";
        case ErrorCode::ImageNotOrthonormal: return "ImageNotOrthonormal";
        case ErrorCode::CoefficientMagnitudeViolation: return "CoefficientMagnitudeViolation";
        case ErrorCode::AutomorphismUndetermined: return "AutomorphismUndetermined";
        case ErrorCode::CompatibilityFailure: return "CompatibilityFailure";
        case ErrorCode::SigmaMismatch: return "SigmaMismatch";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string_view field_name(Field field) { return field == Field::Real ? "real" : "complex"; }

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
    }
}

// Magnitudes within this relative distance of the maximum count as ties, so
// that v and lambda*v select the same pivot despite rounding in |lambda v_i|.
constexpr double kPivotTieTolerance = 1e-10;

}  // namespace

Ray Ray::from_vector(const StateVector& v) {
    if (v.size() < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "state vectors need dimension >= 2, got " + std::to_string(v.size()));
    }
    const double max_abs = v.cwiseAbs().maxCoeff();
    if (!(max_abs > 1e-300) || !std::isfinite(max_abs)) {
        throw Error(ErrorCode::ZeroVector, "cannot form a ray from a zero or non-finite vector");
    }
    // Pre-scale by the max magnitude to avoid overflow in the norm.
    StateVector u = v / max_abs;
    u /= u.norm();
    const double top = u.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(u[pivot]) < top * (1.0 - kPivotTieTolerance)) ++pivot;
    const Complex phase = std::conj(u[pivot]) / std::abs(u[pivot]);
    u *= phase;
    u[pivot] = Complex(std::abs(u[pivot]), 0.0);
    return Ray(std::move(u));
}

bool Ray::is_real(double tol) const { return rep_.imag().cwiseAbs().maxCoeff() <= tol; }

double transition_probability(const Ray& a, const Ray& b) {
    require_same_dim(a.dim(), b.dim());
    const double overlap = std::norm(a.representative().dot(b.representative()));
    return std::clamp(overlap, 0.0, 1.0);
}

bool rays_equal(const Ray& a, const Ray& b, double tol) { return transition_probability(a, b) >= 1.0 - tol; }

ProjectiveSubspace ProjectiveSubspace::span_of(std::span<const StateVector> vectors) {
    if (vectors.empty()) throw Error(ErrorCode::TooFewRays, "a subspace needs at least one spanning vector");
    const Eigen::Index n = vectors.front().size();
    ComplexMatrix m(n, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        require_same_dim(vectors[j].size(), n);
        m.col(static_cast<Eigen::Index>(j)) = vectors[j];
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < s.size() && s[rank] > kRankTolerance * s[0]) ++rank;
    if (rank == 0) throw Error(ErrorCode::ZeroVector, "spanning set is zero");
    return ProjectiveSubspace(svd.matrixU().leftCols(rank));
}

ProjectiveSubspace ProjectiveSubspace::from_orthonormal(ComplexMatrix basis) {
    const Eigen::Index k = basis.cols();
    if (k == 0) throw Error(ErrorCode::TooFewRays, "a subspace needs at least one basis vector");
    const double deviation = (basis.adjoint() * basis - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (deviation > kRankTolerance) {
        throw Error(ErrorCode::InvalidMap, "basis is not orthonormal (deviation " + std::to_string(deviation) + ")");
    }
    return ProjectiveSubspace(std::move(basis));
}

double ProjectiveSubspace::residual(const StateVector& v) const {
    require_same_dim(v.size(), ambient_dim());
    return (v - basis_ * (basis_.adjoint() * v)).norm();
}

ProjectiveSubspace join(const Ray& a, const Ray& b) {
    require_same_dim(a.dim(), b.dim());
    if (rays_equal(a, b, kJoinTolerance)) {
        throw Error(ErrorCode::DegenerateJoin, "the join of a ray with itself is not a line");
    }
    // Gram-Schmidt on two vectors, repeated once for stability.
    const StateVector& q1 = a.representative();
    StateVector q2 = b.representative() - q1 * q1.dot(b.representative());
    q2 -= q1 * q1.dot(q2);
    q2.normalize();
    ComplexMatrix basis(a.dim(), 2);
    basis.col(0) = q1;
    basis.col(1) = q2;
    return ProjectiveSubspace::from_orthonormal(std::move(basis));
}

bool contains(const ProjectiveSubspace& subspace, const Ray& c, double tol) {
    return subspace.residual(c.representative()) <= tol;
}

namespace {

Eigen::VectorXd singular_values_of(std::span<const Ray> rays) {
    const Eigen::Index n = rays.front().dim();
    ComplexMatrix m(n, static_cast<Eigen::Index>(rays.size()));
    for (std::size_t j = 0; j < rays.size(); ++j) {
        require_same_dim(rays[j].dim(), n);
        m.col(static_cast<Eigen::Index>(j)) = rays[j].representative();
    }
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

}  // namespace

bool projectively_independent(std::span<const Ray> rays) {
    if (rays.size() < 2) throw Error(ErrorCode::TooFewRays, "independence needs at least two rays");
    const Eigen::VectorXd s = singular_values_of(rays);
    if (static_cast<Eigen::Index>(rays.size()) > rays.front().dim()) return false;
    return s[s.size() - 1] > kRankTolerance * s[0];
}

bool collinear(std::span<const Ray> points) {
    if (points.size() < 3) throw Error(ErrorCode::TooFewRays, "collinearity needs at least three rays");
    const ProjectiveSubspace line = join(points[0], points[1]);
    return std::all_of(points.begin() + 2, points.end(),
                       [&](const Ray& p) { return contains(line, p, kJoinTolerance); });
}

bool is_projective_frame(std::span<const Ray> rays) {
    if (rays.empty()) throw Error(ErrorCode::WrongFrameSize, "empty frame");
    const Eigen::Index n = rays.front().dim();
    if (static_cast<Eigen::Index>(rays.size()) != n + 1) {
        throw Error(ErrorCode::WrongFrameSize, "a frame in dimension " + std::to_string(n) + " has " +
                                                   std::to_string(n + 1) + " rays, got " +
                                                   std::to_string(rays.size()));
    }
    std::vector<Ray> subset;
    for (std::size_t skip = 0; skip < rays.size(); ++skip) {
        subset.clear();
        for (std::size_t j = 0; j < rays.size(); ++j) {
            if (j != skip) subset.push_back(rays[j]);
        }
        if (!projectively_independent(subset)) return false;
    }
    return true;
}

}  // namespace projlift
