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

#include <optional>
#include <span>
#include <vector>

#include "projlift/ray_maps.hpp"

namespace projlift {

/// Field automorphism acting on coordinates. Only the two continuous
/// automorphisms of C fixing 1 are representable.
enum class Sigma { Identity, Conjugation };

std::string_view sigma_name(Sigma sigma);

/// A probe coefficient mu is accepted as sigma(i) when it lies within this
/// distance of +i (identity) or -i (conjugation)...
inline constexpr double kSigmaTolerance = 1e-6;
/// ...and at least this far from the other candidate.
inline constexpr double kSigmaSeparation = 0.5;

std::optional<Sigma> classify_automorphism(Complex mu, double sigma_tol = kSigmaTolerance);

struct AutomorphismVerdict {
    Sigma sigma = Sigma::Identity;
    double residual = 0.0;  // worst |mu - sigma(i)|
};

/// Classifies every probe coefficient and requires all of them to agree.
/// Throws AutomorphismUndetermined otherwise.
AutomorphismVerdict detect_automorphism(std::span<const Complex> mus, double sigma_tol = kSigmaTolerance);

/// x -> matrix * sigma(x). Columns of the matrix are the images of the basis.
class SemiLinearMap {
public:
    /// Throws InvalidMap for non-square or ill-conditioned (cond > 1e12) matrices.
    static SemiLinearMap create(ComplexMatrix matrix, Sigma sigma);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    Sigma sigma() const noexcept { return sigma_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }

private:
    SemiLinearMap(ComplexMatrix matrix, Sigma sigma) : matrix_(std::move(matrix)), sigma_(sigma) {}
    ComplexMatrix matrix_;
    Sigma sigma_;
};

StateVector apply_semilinear(const SemiLinearMap& map, const StateVector& x);

struct LiftDiagnostics {
    std::vector<Complex> rescale_factors;  // beta / alpha per column, 1 for the first
    std::vector<Complex> mus;              // one per [e_1 + i e_k] probe
    double sigma_residual = 0.0;
    VerificationReport verification;
};

struct ArtinLift {
    SemiLinearMap map;
    LiftDiagnostics diagnostics;
};

/// Builds a semi-linear map compatible with the collineation `f`:
/// f[x] = [F sigma(x)] for every ray x, F unique up to one overall scalar.
///
/// The construction reads f on the standard probe family. The images w_k of
/// the basis rays are rescaled so that f[e_1 + e_k] = [w_1 + w_k]; sigma is
/// read off f[e_1 + i e_k] = [w_1 + sigma(i) w_k]; the result is verified on
/// `trials` random rays (tables: on every stored pair).
///
/// Throws DimensionTooSmall (n < 3), ProbeNotTabulated, NotACollineation,
/// AutomorphismUndetermined.
ArtinLift lift_collineation(const RayMap& f, Field field, double tol, std::size_t trials, Seed seed);

/// Steps of lift_collineation that operate only on probe images.
/// `probes` may be in any per-vector gauge. Fills rescale factors and mus.
SemiLinearMap assemble_semilinear(const ProbeResponse& probes, double tol, LiftDiagnostics& diagnostics);

struct ScalarAlignment {
    Complex scalar;
    double residual = 0.0;  // max-entry |F - scalar * G|
};

/// Least-squares scalar with F ~ scalar * G. Throws SigmaMismatch.
ScalarAlignment scalar_align(const SemiLinearMap& f, const SemiLinearMap& g);

}  // namespace projlift
