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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "projlift/projective_core.hpp"
#include "projlift/random.hpp"

namespace projlift {

/// Upper bound on the condition number of matrices accepted as invertible.
inline constexpr double kMaxConditionNumber = 1e12;

/// Lookup tolerance for matching a ray against tabulated inputs.
inline constexpr double kTableMatchTolerance = 1e-10;

struct MatrixInduced {
    ComplexMatrix matrix;
    bool conjugate_first = false;
};

struct Tabulated {
    Eigen::Index dim = 0;
    std::vector<std::pair<Ray, Ray>> pairs;
};

struct Oracle {
    Eigen::Index dim = 0;
    std::function<Ray(const Ray&)> fn;
    bool reentrant = false;
    // Serializes calls of non-reentrant oracles across copies of the map.
    std::shared_ptr<std::mutex> guard = std::make_shared<std::mutex>();
};

/// A transformation of rays [x] -> T[x], in one of three representations.
class RayMap {
public:
    /// [x] -> [M x], or [M conj(x)] when conjugate_first. Rejects cond(M) > 1e12.
    static RayMap matrix_induced(ComplexMatrix matrix, bool conjugate_first = false);
    /// Rejects pairs whose inputs coincide as rays.
    static RayMap tabulated(Eigen::Index dim, std::vector<std::pair<Ray, Ray>> pairs);
    static RayMap oracle(Eigen::Index dim, std::function<Ray(const Ray&)> fn, bool reentrant = false);

    Eigen::Index dim() const;
    Ray apply(const Ray& a) const;

    /// Whether arbitrary rays can be fed to the map (false only for tables).
    bool samplable() const { return !std::holds_alternative<Tabulated>(repr_); }

    const MatrixInduced* as_matrix() const { return std::get_if<MatrixInduced>(&repr_); }
    const Tabulated* as_tabulated() const { return std::get_if<Tabulated>(&repr_); }
    const Oracle* as_oracle() const { return std::get_if<Oracle>(&repr_); }

private:
    explicit RayMap(std::variant<MatrixInduced, Tabulated, Oracle> repr) : repr_(std::move(repr)) {}
    std::variant<MatrixInduced, Tabulated, Oracle> repr_;
};

inline Ray apply(const RayMap& map, const Ray& a) { return map.apply(a); }

/// Images of the standard probe family, grouped by role. Vectors are unit
/// representatives in whatever gauge the map produced.
struct ProbeResponse {
    Field field = Field::Complex;
    std::vector<StateVector> basis;   // [e_k], k = 1..n
    std::vector<StateVector> sums;    // [e_1 + e_k], k = 2..n
    std::vector<StateVector> phased;  // [e_1 + i e_k], k = 2..n; empty for Field::Real
};

/// A named probe ray, e.g. "[e1+ie3]". Indices in labels are 1-based.
struct Probe {
    std::string label;
    Ray ray;
};

/// [e_k] for k = 1..n, then [e_1 + e_k] and (complex only) [e_1 + i e_k] for k = 2..n.
std::vector<Probe> probe_set(Eigen::Index n, Field field);

struct ProbeImage {
    Probe probe;
    Ray image;
};

/// Evaluates the map on every probe. Throws ProbeNotTabulatedError listing
/// all probes a table cannot answer.
std::vector<ProbeImage> probe_images(const RayMap& map, Field field);

/// Same, restricted to an explicit probe list.
std::vector<ProbeImage> images_of(const RayMap& map, const std::vector<Probe>& probes);

/// Groups the output of probe_images (which must follow probe_set order).
ProbeResponse organize_probe_images(const std::vector<ProbeImage>& images, Eigen::Index n, Field field);

struct VerificationReport {
    bool passed = true;
    std::size_t trials = 0;
    double worst_residual = 0.0;
    double tol = 0.0;
    Seed seed;
    std::optional<Witness> witness;
};

/// Running maximum over trial residuals. The witness is the first trial that
/// exceeded the tolerance. A NaN residual counts as an unbounded failure.
class ResidualTracker {
public:
    ResidualTracker(double tol, Seed seed) : tol_(tol), seed_(seed) {}

    template <typename MakeWitness>
    void record(double residual, MakeWitness&& make_witness) {
        ++trials_;
        if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
        if (residual > tol_ && !witness_) witness_ = make_witness();
        worst_ = std::max(worst_, residual);
    }

    VerificationReport finish() const {
        return {worst_ <= tol_, trials_, worst_, tol_, seed_, worst_ <= tol_ ? std::nullopt : witness_};
    }

private:
    double tol_;
    Seed seed_;
    std::size_t trials_ = 0;
    double worst_ = 0.0;
    std::optional<Witness> witness_;
};

/// Worst |A.B - TA.TB| over every pair of the probe family followed by
/// `trials` random pairs. Tables are checked on all pairs of stored entries.
VerificationReport check_quasi_unitary(const RayMap& map, std::size_t trials, double tol, Seed seed,
                                       Field field = Field::Complex);

/// Worst distance of T[c] from TA v TB for random c on random lines A v B.
/// Tables are checked on every stored triple whose inputs are collinear.
VerificationReport check_collineation(const RayMap& map, std::size_t trials, double tol, Seed seed,
                                      Field field = Field::Complex);

/// Expands T[c] over the images of a random orthonormal basis {b_k} whose
/// first two vectors span the line of c, and compares |gamma'_k|^2 with
/// |gamma_k|^2 coefficient by coefficient. Requires a samplable map.
VerificationReport check_coefficient_magnitudes(const RayMap& map, std::size_t trials, double tol, Seed seed,
                                                Field field = Field::Complex);

/// Compares the transition probabilities of every pair of probes with those
/// of their images.
VerificationReport check_probe_pairs(const std::vector<ProbeImage>& images, double tol, Seed seed);
void check_probe_pairs(const std::vector<ProbeImage>& images, ResidualTracker& tracker);

/// Residual 1 - T[x].[op(x)] over random rays x (tables: over the stored
/// pairs), where `op` is a candidate vector-level lift of the map.
VerificationReport check_compatibility(const RayMap& map, const std::function<StateVector(const StateVector&)>& op,
                                       std::size_t trials, double tol, Seed seed, Field field = Field::Complex);

}  // namespace projlift
