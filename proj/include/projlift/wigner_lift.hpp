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

#include <vector>

#include "projlift/artin_lift.hpp"

namespace projlift {

enum class SymmetryKind { Unitary, Antiunitary };

std::string_view kind_name(SymmetryKind kind);

constexpr Sigma sigma_of(SymmetryKind kind) {
    return kind == SymmetryKind::Unitary ? Sigma::Identity : Sigma::Conjugation;
}
constexpr SymmetryKind kind_of(Sigma sigma) {
    return sigma == Sigma::Identity ? SymmetryKind::Unitary : SymmetryKind::Antiunitary;
}

inline constexpr double kOrthonormalTolerance = 1e-10;
inline constexpr double kCertificateTolerance = 1e-8;
inline constexpr std::size_t kDefaultTrials = 200;

/// Unitary or anti-unitary operator: x -> U x or x -> U conj(x).
class SemiUnitary {
public:
    /// Throws InvalidMap unless max|U^dagger U - I| <= 1e-10.
    static SemiUnitary create(ComplexMatrix matrix, SymmetryKind kind);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    SymmetryKind kind() const noexcept { return kind_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }

    StateVector apply(const StateVector& x) const;

    /// The phase representative whose largest-magnitude first-column entry
    /// (lowest row on ties) is real and >= 0.
    SemiUnitary canonical() const;

private:
    SemiUnitary(ComplexMatrix matrix, SymmetryKind kind) : matrix_(std::move(matrix)), kind_(kind) {}
    ComplexMatrix matrix_;
    SymmetryKind kind_;
};

struct SymmetryCertificate {
    VerificationReport quasi_unitarity;
    VerificationReport compatibility;
    SymmetryKind kind = SymmetryKind::Unitary;
    double sigma_residual = 0.0;
    double orthonormality_residual = 0.0;  // max|G - I| for the basis images
    double coefficient_residual = 0.0;     // worst deviation of probe coefficient magnitudes
    std::vector<Complex> mus;

    bool valid() const { return quasi_unitarity.passed && compatibility.passed; }
};

struct WignerLift {
    SemiUnitary op;
    SymmetryCertificate certificate;
};

/// Reconstructs the semi-unitary operator inducing a quasi-unitary ray map,
/// returned in canonical phase.
///
/// Throws NotQuasiUnitary, ImageNotOrthonormal, CoefficientMagnitudeViolation,
/// AutomorphismUndetermined, CompatibilityFailure, ProbeNotTabulated.
WignerLift lift_symmetry(const RayMap& map, Field field, double tol, std::size_t trials, Seed seed);

/// Orthonormal-image and phase-rescale steps on probe images alone.
/// Fills the residual fields and mus of `certificate`.
SemiUnitary assemble_semiunitary(const ProbeResponse& probes, double tol, SymmetryCertificate& certificate);

/// Linear or anti-linear, decided from [e1], [e2], [e1+e2], [e1+ie2] only.
SymmetryKind classify(const RayMap& map, Field field, double tol);

struct PhaseAlignment {
    double theta = 0.0;     // in (-pi, pi]
    double residual = 0.0;  // max-entry |U - e^{i theta} V|
};

/// Throws KindMismatch or DimensionMismatch.
PhaseAlignment phase_align(const SemiUnitary& u, const SemiUnitary& v);

/// Residual per trial is 1 - T[x].[U sigma(x)].
VerificationReport verify_compatibility(const RayMap& map, const SemiUnitary& op, std::size_t trials, double tol,
                                        Seed seed, Field field = Field::Complex);

}  // namespace projlift
