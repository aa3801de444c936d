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

#include "projlift/wigner_lift.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace projlift {

std::string_view kind_name(SymmetryKind kind) { return kind == SymmetryKind::Unitary ? "unitary" : "antiunitary"; }

SemiUnitary SemiUnitary::create(ComplexMatrix matrix, SymmetryKind kind) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw Error(ErrorCode::InvalidMap, "semi-unitary operators need a square matrix");
    }
    const Eigen::Index n = matrix.rows();
    const double deviation = (matrix.adjoint() * matrix - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(deviation <= kOrthonormalTolerance)) {
        throw Error(ErrorCode::InvalidMap,
                    "columns are not orthonormal (max deviation " + std::to_string(deviation) + ")");
    }
    return SemiUnitary(std::move(matrix), kind);
}

StateVector SemiUnitary::apply(const StateVector& x) const {
    if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector and operator dimensions differ");
    if (kind_ == SymmetryKind::Antiunitary) return matrix_ * x.conjugate();
    return matrix_ * x;
}

SemiUnitary SemiUnitary::canonical() const {
    const auto column = matrix_.col(0);
    const double top = column.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(column[pivot]) < top * (1.0 - 1e-10)) ++pivot;
    const Complex phase = std::conj(column[pivot]) / std::abs(column[pivot]);
    ComplexMatrix gauged = matrix_ * phase;
    gauged(pivot, 0) = Complex(std::abs(gauged(pivot, 0)), 0.0);
    return SemiUnitary(std::move(gauged), kind_);
}

namespace {

Complex unit_phase(Complex z) { return z / std::abs(z); }

// Coefficients of the unit vector `v` over the orthonormal columns of `basis`.
// A probe on the line [e1] v [ek] must have |c_1| = |c_k| = 1/sqrt(2) and
// nothing elsewhere; returns the worst deviation from that pattern.
double coefficient_deviation(const StateVector& coeffs, Eigen::Index k) {
    const double half = std::numbers::sqrt2 / 2.0;
    double worst = std::max(std::abs(std::abs(coeffs[0]) - half), std::abs(std::abs(coeffs[k]) - half));
    for (Eigen::Index j = 1; j < coeffs.size(); ++j) {
        if (j != k) worst = std::max(worst, std::abs(coeffs[j]));
    }
    return worst;
}

void require_line_coefficients(const StateVector& coeffs, Eigen::Index k, double tol, const StateVector& probe,
                               double& running_worst) {
    const double deviation = coefficient_deviation(coeffs, k);
    running_worst = std::max(running_worst, deviation);
    if (!(deviation <= tol)) {
        throw Error(ErrorCode::CoefficientMagnitudeViolation,
                    "image of a probe on [e1] v [e" + std::to_string(k + 1) +
                        "] has coefficient magnitudes off 1/sqrt(2) by " + std::to_string(deviation),
                    Witness{{probe}, 0.0, deviation});
    }
}

}  // namespace

SemiUnitary assemble_semiunitary(const ProbeResponse& probes, double tol, SymmetryCertificate& certificate) {
    const auto n = static_cast<Eigen::Index>(probes.basis.size());
    ComplexMatrix images(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const StateVector& b = probes.basis[static_cast<std::size_t>(k)];
        images.col(k) = b / b.norm();
    }

    certificate.orthonormality_residual =
        (images.adjoint() * images - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    const double orthonormal_tol = std::min(tol, kOrthonormalTolerance);
    if (!(certificate.orthonormality_residual <= orthonormal_tol)) {
        throw Error(ErrorCode::ImageNotOrthonormal,
                    "images of the basis rays deviate from an orthonormal system by " +
                        std::to_string(certificate.orthonormality_residual));
    }

    const StateVector e1 = StateVector::Unit(n, 0);
    certificate.coefficient_residual = 0.0;
    for (Eigen::Index k = 1; k < n; ++k) {
        const StateVector& c = probes.sums[static_cast<std::size_t>(k - 1)];
        const StateVector coeffs = images.adjoint() * (c / c.norm());
        require_line_coefficients(coeffs, k, tol, e1 + StateVector::Unit(n, k), certificate.coefficient_residual);
        images.col(k) *= unit_phase(coeffs[k] / coeffs[0]);
    }

    certificate.mus.clear();
    certificate.sigma_residual = 0.0;
    SymmetryKind kind = SymmetryKind::Unitary;
    if (probes.field == Field::Complex) {
        for (Eigen::Index k = 1; k < n; ++k) {
            const StateVector& d = probes.phased[static_cast<std::size_t>(k - 1)];
            const StateVector coeffs = images.adjoint() * (d / d.norm());
            require_line_coefficients(coeffs, k, tol, e1 + Complex(0.0, 1.0) * StateVector::Unit(n, k),
                                      certificate.coefficient_residual);
            certificate.mus.push_back(coeffs[k] / coeffs[0]);
        }
        const AutomorphismVerdict verdict = detect_automorphism(certificate.mus);
        kind = kind_of(verdict.sigma);
        certificate.sigma_residual = verdict.residual;
    }
    certificate.kind = kind;
    return SemiUnitary::create(std::move(images), kind).canonical();
}

WignerLift lift_symmetry(const RayMap& map, Field field, double tol, std::size_t trials, Seed seed) {
    SymmetryCertificate certificate;
    const auto not_quasi_unitary = [](const VerificationReport& report) {
        return Error(ErrorCode::NotQuasiUnitary,
                     "transition probabilities are not preserved (worst deviation " +
                         std::to_string(report.worst_residual) + ")",
                     report.witness);
    };

    certificate.quasi_unitarity = check_quasi_unitary(map, trials, tol, seed, field);
    if (!certificate.quasi_unitarity.passed) throw not_quasi_unitary(certificate.quasi_unitarity);

    const std::vector<ProbeImage> images = probe_images(map, field);

    SemiUnitary op = assemble_semiunitary(organize_probe_images(images, map.dim(), field), tol, certificate);

    certificate.compatibility = verify_compatibility(map, op, trials, tol, seed, field);
    if (!certificate.compatibility.passed) {
        throw Error(ErrorCode::CompatibilityFailure,
                    "lifted operator does not reproduce the ray map (worst residual " +
                        std::to_string(certificate.compatibility.worst_residual) + ")",
                    certificate.compatibility.witness);
    }
    return WignerLift{std::move(op), std::move(certificate)};
}

SymmetryKind classify(const RayMap& map, Field field, double tol) {
    if (field == Field::Real) return SymmetryKind::Unitary;
    const Eigen::Index n = map.dim();
    std::vector<Probe> probes;
    for (Probe& p : probe_set(n, field)) {
        if (p.label == "[e1]" || p.label == "[e2]" || p.label == "[e1+e2]" || p.label == "[e1+ie2]") {
            probes.push_back(std::move(p));
        }
    }
    const std::vector<ProbeImage> images = images_of(map, probes);
    const Ray& b1 = images[0].image;
    const Ray& b2 = images[1].image;

    const auto require_probability = [&](const ProbeImage& x, const ProbeImage& y) {
        const double before = transition_probability(x.probe.ray, y.probe.ray);
        const double after = transition_probability(x.image, y.image);
        if (!(std::abs(before - after) <= tol)) {
            throw Error(ErrorCode::NotQuasiUnitary,
                        "probes " + x.probe.label + " and " + y.probe.label + " change transition probability",
                        Witness{{x.probe.ray.representative(), y.probe.ray.representative()}, before, after});
        }
    };
    require_probability(images[0], images[1]);
    for (std::size_t i = 2; i < 4; ++i) {
        require_probability(images[i], images[0]);
        require_probability(images[i], images[1]);
    }

    const StateVector& w1 = b1.representative();
    StateVector w2 = b2.representative();
    const StateVector& c = images[2].image.representative();
    const StateVector& d = images[3].image.representative();
    w2 *= unit_phase(w2.dot(c) / w1.dot(c));
    const Complex mu = w2.dot(d) / w1.dot(d);
    const std::array<Complex, 1> mus{mu};
    return kind_of(detect_automorphism(mus).sigma);
}

PhaseAlignment phase_align(const SemiUnitary& u, const SemiUnitary& v) {
    if (u.kind() != v.kind()) throw Error(ErrorCode::KindMismatch, "cannot align a unitary with an anti-unitary");
    if (u.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "cannot align operators of different dimension");
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    v.matrix().cwiseAbs().maxCoeff(&row, &col);
    const Complex ratio = u.matrix()(row, col) / v.matrix()(row, col);
    double theta = std::abs(ratio) > 0.0 ? std::arg(ratio) : 0.0;
    if (theta <= -std::numbers::pi) theta += 2.0 * std::numbers::pi;
    const Complex phase = std::polar(1.0, theta);
    return {theta, (u.matrix() - phase * v.matrix()).cwiseAbs().maxCoeff()};
}

VerificationReport verify_compatibility(const RayMap& map, const SemiUnitary& op, std::size_t trials, double tol,
                                        Seed seed, Field field) {
    if (map.dim() != op.dim()) throw Error(ErrorCode::DimensionMismatch, "map and operator dimensions differ");
    return check_compatibility(
        map, [&op](const StateVector& x) { return op.apply(x); }, trials, tol, seed, field);
}

}  // namespace projlift
