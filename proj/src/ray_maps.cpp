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

#include "projlift/ray_maps.hpp"

#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace projlift {

namespace {

void require_dim(Eigen::Index expected, Eigen::Index got) {
    if (expected != got) {
        throw Error(ErrorCode::DimensionMismatch,
                    "map acts in dimension " + std::to_string(expected) + ", ray has " + std::to_string(got));
    }
}

std::string describe(const StateVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i].real());
        if (v[i].imag() != 0.0) out += (v[i].imag() < 0 ? "-" : "+") + std::to_string(std::abs(v[i].imag())) + "i";
    }
    return out + ")";
}

}  // namespace

RayMap RayMap::matrix_induced(ComplexMatrix matrix, bool conjugate_first) {
    if (matrix.rows() != matrix.cols()) {
        throw Error(ErrorCode::InvalidMap, "matrix is " + std::to_string(matrix.rows()) + "x" +
                                               std::to_string(matrix.cols()) + ", expected square");
    }
    if (matrix.rows() < 2) throw Error(ErrorCode::DimensionTooSmall, "ray maps need dimension >= 2");
    if (!matrix.allFinite()) throw Error(ErrorCode::InvalidMap, "matrix has non-finite entries");
    const Eigen::VectorXd s = Eigen::JacobiSVD<ComplexMatrix>(matrix).singularValues();
    const double smallest = s[s.size() - 1];
    if (!(smallest > 0.0) || s[0] / smallest > kMaxConditionNumber) {
        throw Error(ErrorCode::InvalidMap, "matrix is singular or has condition number above 1e12");
    }
    return RayMap(MatrixInduced{std::move(matrix), conjugate_first});
}

RayMap RayMap::tabulated(Eigen::Index dim, std::vector<std::pair<Ray, Ray>> pairs) {
    if (dim < 2) throw Error(ErrorCode::DimensionTooSmall, "ray maps need dimension >= 2");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        require_dim(dim, pairs[i].first.dim());
        require_dim(dim, pairs[i].second.dim());
        for (std::size_t j = 0; j < i; ++j) {
            if (rays_equal(pairs[i].first, pairs[j].first, kTableMatchTolerance)) {
                throw Error(ErrorCode::InvalidMap, "table entries " + std::to_string(j) + " and " +
                                                       std::to_string(i) + " share the same input ray");
            }
        }
    }
    return RayMap(Tabulated{dim, std::move(pairs)});
}

RayMap RayMap::oracle(Eigen::Index dim, std::function<Ray(const Ray&)> fn, bool reentrant) {
    if (dim < 2) throw Error(ErrorCode::DimensionTooSmall, "ray maps need dimension >= 2");
    if (!fn) throw Error(ErrorCode::InvalidMap, "oracle has no callable");
    Oracle oracle;
    oracle.dim = dim;
    oracle.fn = std::move(fn);
    oracle.reentrant = reentrant;
    return RayMap(std::move(oracle));
}

Eigen::Index RayMap::dim() const {
    return std::visit(
        [](const auto& r) -> Eigen::Index {
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, MatrixInduced>) {
                return r.matrix.rows();
            } else {
                return r.dim;
            }
        },
        repr_);
}

Ray RayMap::apply(const Ray& a) const {
    require_dim(dim(), a.dim());
    if (const auto* m = as_matrix()) {
        if (m->conjugate_first) return Ray::from_vector(m->matrix * a.representative().conjugate());
        return Ray::from_vector(m->matrix * a.representative());
    }
    if (const auto* t = as_tabulated()) {
        for (const auto& [in, out] : t->pairs) {
            if (rays_equal(in, a, kTableMatchTolerance)) return out;
        }
        throw ProbeNotTabulatedError("no table entry for ray " + describe(a.representative()),
                                     {describe(a.representative())});
    }
    const Oracle& o = *as_oracle();
    Ray out = [&] {
        if (o.reentrant) return o.fn(a);
        std::lock_guard lock(*o.guard);
        return o.fn(a);
    }();
    require_dim(o.dim, out.dim());
    return out;
}

std::vector<Probe> probe_set(Eigen::Index n, Field field) {
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "probe sets need dimension >= 2");
    std::vector<Probe> probes;
    probes.reserve(static_cast<std::size_t>(3 * n));
    const auto unit = [n](Eigen::Index k) { return StateVector(StateVector::Unit(n, k)); };
    for (Eigen::Index k = 0; k < n; ++k) {
        probes.push_back({"[e" + std::to_string(k + 1) + "]", Ray::from_vector(unit(k))});
    }
    for (Eigen::Index k = 1; k < n; ++k) {
        probes.push_back({"[e1+e" + std::to_string(k + 1) + "]", Ray::from_vector(unit(0) + unit(k))});
    }
    if (field == Field::Complex) {
        for (Eigen::Index k = 1; k < n; ++k) {
            probes.push_back({"[e1+ie" + std::to_string(k + 1) + "]",
                              Ray::from_vector(unit(0) + Complex(0.0, 1.0) * unit(k))});
        }
    }
    return probes;
}

std::vector<ProbeImage> images_of(const RayMap& map, const std::vector<Probe>& probes) {
    std::vector<ProbeImage> images;
    std::vector<std::string> missing;
    for (const Probe& p : probes) {
        try {
            images.push_back({p, map.apply(p.ray)});
        } catch (const ProbeNotTabulatedError&) {
            missing.push_back(p.label);
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw ProbeNotTabulatedError("missing probes: " + list, std::move(missing));
    }
    return images;
}

std::vector<ProbeImage> probe_images(const RayMap& map, Field field) {
    return images_of(map, probe_set(map.dim(), field));
}

ProbeResponse organize_probe_images(const std::vector<ProbeImage>& images, Eigen::Index n, Field field) {
    const auto expected = static_cast<std::size_t>(field == Field::Complex ? 3 * n - 2 : 2 * n - 1);
    if (images.size() != expected) {
        throw Error(ErrorCode::InvalidMap, "expected " + std::to_string(expected) + " probe images, got " +
                                               std::to_string(images.size()));
    }
    ProbeResponse r;
    r.field = field;
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const StateVector& v = images[i].image.representative();
        if (i < un) {
            r.basis.push_back(v);
        } else if (i < 2 * un - 1) {
            r.sums.push_back(v);
        } else {
            r.phased.push_back(v);
        }
    }
    return r;
}

VerificationReport check_quasi_unitary(const RayMap& map, std::size_t trials, double tol, Seed seed, Field field) {
    ResidualTracker tracker(tol, seed);
    const auto compare = [&](const Ray& a, const Ray& b, const Ray& ta, const Ray& tb) {
        const double before = transition_probability(a, b);
        const double after = transition_probability(ta, tb);
        tracker.record(std::abs(before - after), [&] {
            return Witness{{a.representative(), b.representative()}, before, after};
        });
    };
    if (const auto* t = map.as_tabulated()) {
        for (std::size_t i = 0; i < t->pairs.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                compare(t->pairs[j].first, t->pairs[i].first, t->pairs[j].second, t->pairs[i].second);
            }
        }
        return tracker.finish();
    }
    check_probe_pairs(probe_images(map, field), tracker);
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Ray a = random_ray(rng, map.dim(), field);
        const Ray b = random_ray(rng, map.dim(), field);
        compare(a, b, map.apply(a), map.apply(b));
    }
    return tracker.finish();
}

namespace {

// Distance of T[c] from the line TA v TB; a collapsed line (TA = TB) scores 1.
double line_residual(const Ray& ta, const Ray& tb, const Ray& tc) {
    if (rays_equal(ta, tb, kJoinTolerance)) return 1.0;
    return join(ta, tb).residual(tc.representative());
}

}  // namespace

VerificationReport check_collineation(const RayMap& map, std::size_t trials, double tol, Seed seed, Field field) {
    if (map.dim() < 3) {
        throw Error(ErrorCode::DimensionTooSmall, "collineation checks need a proper line, i.e. dimension >= 3");
    }
    ResidualTracker tracker(tol, seed);
    if (const auto* t = map.as_tabulated()) {
        const auto& pairs = t->pairs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                if (rays_equal(pairs[i].first, pairs[j].first, kJoinTolerance)) continue;
                const ProjectiveSubspace line = join(pairs[i].first, pairs[j].first);
                for (std::size_t k = j + 1; k < pairs.size(); ++k) {
                    if (!contains(line, pairs[k].first, kJoinTolerance)) continue;
                    const double r = line_residual(pairs[i].second, pairs[j].second, pairs[k].second);
                    tracker.record(r, [&] {
                        return Witness{{pairs[i].first.representative(), pairs[j].first.representative(),
                                        pairs[k].first.representative()},
                                       0.0,
                                       r};
                    });
                }
            }
        }
        return tracker.finish();
    }
    Rng rng(seed);
    const Eigen::Index n = map.dim();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Ray a = random_ray(rng, n, field);
        Ray b = random_ray(rng, n, field);
        while (rays_equal(a, b, kJoinTolerance)) b = random_ray(rng, n, field);
        const StateVector alpha_beta = gaussian_vector(rng, 2, field);
        const StateVector c_vec = alpha_beta[0] * a.representative() + alpha_beta[1] * b.representative();
        const Ray c = Ray::from_vector(c_vec);
        const double r = line_residual(map.apply(a), map.apply(b), map.apply(c));
        tracker.record(r, [&] {
            return Witness{{a.representative(), b.representative(), c.representative()}, 0.0, r};
        });
    }
    return tracker.finish();
}

VerificationReport check_coefficient_magnitudes(const RayMap& map, std::size_t trials, double tol, Seed seed,
                                                Field field) {
    if (!map.samplable()) {
        throw Error(ErrorCode::InvalidMap, "coefficient checks need a map that accepts arbitrary rays");
    }
    const Eigen::Index n = map.dim();
    ResidualTracker tracker(tol, seed);
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const ComplexMatrix basis = haar_unitary(rng, n, field);
        const StateVector mix = gaussian_vector(rng, 2, field);
        const Ray c = Ray::from_vector(mix[0] * basis.col(0) + mix[1] * basis.col(1));
        const StateVector gamma = basis.adjoint() * c.representative();

        ComplexMatrix images(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            images.col(k) = map.apply(Ray::from_vector(basis.col(k))).representative();
        }
        const StateVector c_image = map.apply(c).representative();
        const StateVector gamma_image = images.colPivHouseholderQr().solve(c_image);

        const double r = (gamma_image.cwiseAbs2() - gamma.cwiseAbs2()).cwiseAbs().maxCoeff();
        tracker.record(r, [&] {
            Eigen::Index worst = 0;
            (gamma_image.cwiseAbs2() - gamma.cwiseAbs2()).cwiseAbs().maxCoeff(&worst);
            return Witness{{c.representative(), StateVector(basis.col(worst))}, std::norm(gamma[worst]),
                           std::norm(gamma_image[worst])};
        });
    }
    return tracker.finish();
}

void check_probe_pairs(const std::vector<ProbeImage>& images, ResidualTracker& tracker) {
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double before = transition_probability(images[j].probe.ray, images[i].probe.ray);
            const double after = transition_probability(images[j].image, images[i].image);
            tracker.record(std::abs(before - after), [&] {
                return Witness{{images[j].probe.ray.representative(), images[i].probe.ray.representative()},
                               before,
                               after};
            });
        }
    }
}

VerificationReport check_probe_pairs(const std::vector<ProbeImage>& images, double tol, Seed seed) {
    ResidualTracker tracker(tol, seed);
    check_probe_pairs(images, tracker);
    return tracker.finish();
}

VerificationReport check_compatibility(const RayMap& map, const std::function<StateVector(const StateVector&)>& op,
                                       std::size_t trials, double tol, Seed seed, Field field) {
    ResidualTracker tracker(tol, seed);
    const auto compare = [&](const Ray& x, const Ray& tx) {
        const StateVector y = op(x.representative());
        require_dim(map.dim(), y.size());
        double overlap = 0.0;
        if (y.allFinite() && y.cwiseAbs().maxCoeff() > 1e-300) overlap = transition_probability(tx, Ray::from_vector(y));
        tracker.record(1.0 - overlap, [&] { return Witness{{x.representative()}, 1.0, overlap}; });
    };
    if (const auto* t = map.as_tabulated()) {
        for (const auto& [in, out] : t->pairs) compare(in, out);
        return tracker.finish();
    }
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Ray x = random_ray(rng, map.dim(), field);
        compare(x, map.apply(x));
    }
    return tracker.finish();
}

}  // namespace projlift
