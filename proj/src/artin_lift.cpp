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

#include "projlift/artin_lift.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace projlift {

std::string_view sigma_name(Sigma sigma) { return sigma == Sigma::Identity ? "identity" : "conjugation"; }

std::optional<Sigma> classify_automorphism(Complex mu, double sigma_tol) {
    const Complex i(0.0, 1.0);
    const double to_plus = std::abs(mu - i);
    const double to_minus = std::abs(mu + i);
    if (to_plus <= sigma_tol && to_minus >= kSigmaSeparation) return Sigma::Identity;
    if (to_minus <= sigma_tol && to_plus >= kSigmaSeparation) return Sigma::Conjugation;
    return std::nullopt;
}

namespace {

std::string format_complex(Complex z) {
    return std::to_string(z.real()) + (z.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(z.imag())) + "i";
}

}  // namespace

AutomorphismVerdict detect_automorphism(std::span<const Complex> mus, double sigma_tol) {
    AutomorphismVerdict verdict;
    for (std::size_t k = 0; k < mus.size(); ++k) {
        const std::optional<Sigma> s = classify_automorphism(mus[k], sigma_tol);
        const std::string probe = "[e1+ie" + std::to_string(k + 2) + "]";
        if (!s) {
            throw Error(ErrorCode::AutomorphismUndetermined,
                        "probe " + probe + " gives mu = " + format_complex(mus[k]) + ", close to neither i nor -i");
        }
        if (k > 0 && *s != verdict.sigma) {
            throw Error(ErrorCode::AutomorphismUndetermined, "probe " + probe + " disagrees with [e1+ie2] on sigma");
        }
        verdict.sigma = *s;
        const Complex target = *s == Sigma::Identity ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
        verdict.residual = std::max(verdict.residual, std::abs(mus[k] - target));
    }
    return verdict;
}

SemiLinearMap SemiLinearMap::create(ComplexMatrix matrix, Sigma sigma) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw Error(ErrorCode::InvalidMap, "semi-linear maps need a square matrix");
    }
    if (!matrix.allFinite()) throw Error(ErrorCode::InvalidMap, "matrix has non-finite entries");
    const Eigen::VectorXd s = Eigen::JacobiSVD<ComplexMatrix>(matrix).singularValues();
    if (!(s[s.size() - 1] > 0.0) || s[0] / s[s.size() - 1] > kMaxConditionNumber) {
        throw Error(ErrorCode::InvalidMap, "semi-linear map is singular or has condition number above 1e12");
    }
    return SemiLinearMap(std::move(matrix), sigma);
}

StateVector apply_semilinear(const SemiLinearMap& map, const StateVector& x) {
    if (x.size() != map.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "vector dimension " + std::to_string(x.size()) +
                                                      " does not match map dimension " + std::to_string(map.dim()));
    }
    if (map.sigma() == Sigma::Conjugation) return map.matrix() * x.conjugate();
    return map.matrix() * x;
}

namespace {

// Coefficients of `v` in the (not necessarily orthogonal) basis `w`, scaled so
// the largest has modulus one. Anything outside the two slots `first` and
// `k` must vanish for a collineation.
StateVector expand_on_line(const Eigen::ColPivHouseholderQR<ComplexMatrix>& qr, const StateVector& v,
                           Eigen::Index k, double tol, const StateVector& probe) {
    StateVector a = qr.solve(v);
    a /= a.cwiseAbs().maxCoeff();
    for (Eigen::Index j = 1; j < a.size(); ++j) {
        if (j == k) continue;
        if (std::abs(a[j]) > tol) {
            throw Error(ErrorCode::NotACollineation,
                        "image of a point on [e1] v [e" + std::to_string(k + 1) + "] leaves the image line",
                        Witness{{probe}, 0.0, std::abs(a[j])});
        }
    }
    if (std::abs(a[0]) <= tol || std::abs(a[k]) <= tol) {
        throw Error(ErrorCode::NotACollineation,
                    "image of a point on [e1] v [e" + std::to_string(k + 1) + "] coincides with an endpoint image",
                    Witness{{probe}, 1.0, std::min(std::abs(a[0]), std::abs(a[k]))});
    }
    return a;
}

}  // namespace

SemiLinearMap assemble_semilinear(const ProbeResponse& probes, double tol, LiftDiagnostics& diagnostics) {
    const auto n = static_cast<Eigen::Index>(probes.basis.size());
    ComplexMatrix w(n, n);
    for (Eigen::Index k = 0; k < n; ++k) w.col(k) = probes.basis[static_cast<std::size_t>(k)];

    const Eigen::VectorXd s = Eigen::JacobiSVD<ComplexMatrix>(w).singularValues();
    if (!(s[n - 1] > kRankTolerance * s[0])) {
        throw Error(ErrorCode::NotACollineation, "images of the basis rays are linearly dependent");
    }

    const StateVector e1 = StateVector::Unit(n, 0);
    diagnostics.rescale_factors.assign(static_cast<std::size_t>(n), Complex(1.0, 0.0));
    {
        const Eigen::ColPivHouseholderQR<ComplexMatrix> qr(w);
        for (Eigen::Index k = 1; k < n; ++k) {
            const StateVector probe = e1 + StateVector::Unit(n, k);
            const StateVector a = expand_on_line(qr, probes.sums[static_cast<std::size_t>(k - 1)], k, tol, probe);
            const Complex factor = a[k] / a[0];
            diagnostics.rescale_factors[static_cast<std::size_t>(k)] = factor;
        }
    }
    for (Eigen::Index k = 1; k < n; ++k) w.col(k) *= diagnostics.rescale_factors[static_cast<std::size_t>(k)];

    diagnostics.mus.clear();
    Sigma sigma = Sigma::Identity;
    diagnostics.sigma_residual = 0.0;
    if (probes.field == Field::Complex) {
        const Eigen::ColPivHouseholderQR<ComplexMatrix> qr(w);
        for (Eigen::Index k = 1; k < n; ++k) {
            const StateVector probe = e1 + Complex(0.0, 1.0) * StateVector::Unit(n, k);
            const StateVector a = expand_on_line(qr, probes.phased[static_cast<std::size_t>(k - 1)], k, tol, probe);
            diagnostics.mus.push_back(a[k] / a[0]);
        }
        const AutomorphismVerdict verdict = detect_automorphism(diagnostics.mus);
        sigma = verdict.sigma;
        diagnostics.sigma_residual = verdict.residual;
    }
    return SemiLinearMap::create(std::move(w), sigma);
}

ArtinLift lift_collineation(const RayMap& f, Field field, double tol, std::size_t trials, Seed seed) {
    const Eigen::Index n = f.dim();
    if (n < 3) {
        throw Error(ErrorCode::DimensionTooSmall,
                    "the collineation lift needs projective dimension >= 2 (vector dimension >= 3)");
    }
    const ProbeResponse probes = organize_probe_images(probe_images(f, field), n, field);
    LiftDiagnostics diagnostics;
    SemiLinearMap map = assemble_semilinear(probes, tol, diagnostics);
    diagnostics.verification = check_compatibility(
        f, [&map](const StateVector& x) { return apply_semilinear(map, x); }, trials, tol, seed, field);
    if (!diagnostics.verification.passed) {
        throw Error(ErrorCode::NotACollineation,
                    "lifted map disagrees with the ray map (worst residual " +
                        std::to_string(diagnostics.verification.worst_residual) + ")",
                    diagnostics.verification.witness);
    }
    return ArtinLift{std::move(map), std::move(diagnostics)};
}

ScalarAlignment scalar_align(const SemiLinearMap& f, const SemiLinearMap& g) {
    if (f.sigma() != g.sigma()) throw Error(ErrorCode::SigmaMismatch, "cannot align maps with different sigma");
    if (f.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "cannot align maps of different dimension");
    const Complex scalar = (g.matrix().conjugate().cwiseProduct(f.matrix())).sum() / g.matrix().squaredNorm();
    return {scalar, (f.matrix() - scalar * g.matrix()).cwiseAbs().maxCoeff()};
}

}  // namespace projlift
