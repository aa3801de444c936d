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
#include <numbers>

#include <gtest/gtest.h>

#include "projlift/testkit.hpp"
#include "test_util.hpp"

using namespace projlift;
using projlift::test::kI;
using projlift::test::ray;
using projlift::test::vec;

namespace {

constexpr double kTol = 1e-8;

ArtinLift lift(const RayMap& f, std::uint64_t seed = 0) {
    return lift_collineation(f, Field::Complex, kTol, 200, Seed{seed});
}

// Multiplies every probe-image representative by an independent random phase.
ProbeResponse randomize_phases(ProbeResponse probes, Rng& rng) {
    for (auto* group : {&probes.basis, &probes.sums, &probes.phased}) {
        for (StateVector& v : *group) v *= std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    }
    return probes;
}

}  // namespace

TEST(lift_collineation, identity) {
    const ArtinLift result = lift(RayMap::matrix_induced(Eigen::MatrixXcd::Identity(3, 3)));
    EXPECT_EQ(result.map.sigma(), Sigma::Identity);
    const Complex lambda = result.map.matrix()(0, 0);
    EXPECT_GT(std::abs(lambda), 0.0);
    EXPECT_LT((result.map.matrix() - lambda * Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(result.diagnostics.verification.passed);
}

TEST(lift_collineation, non_unitary_diagonal) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = 2.0;
    m(2, 2) = 3.0;
    const ArtinLift result = lift(RayMap::matrix_induced(m));
    EXPECT_EQ(result.map.sigma(), Sigma::Identity);
    const ScalarAlignment a = scalar_align(result.map, SemiLinearMap::create(m, Sigma::Identity));
    EXPECT_LE(a.residual, 1e-9);
    // Independent alignment: ratio of first columns.
    const Complex ratio = result.map.matrix()(0, 0) / m(0, 0);
    EXPECT_LE((result.map.matrix() - ratio * m).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(lift_collineation, conjugate_linear_haar) {
    const Eigen::MatrixXcd m = testkit::haar_unitary(4, Seed{31});
    const ArtinLift result = lift(RayMap::matrix_induced(m, true));
    EXPECT_EQ(result.map.sigma(), Sigma::Conjugation);
    EXPECT_LE(scalar_align(result.map, SemiLinearMap::create(m, Sigma::Conjugation)).residual, 1e-9);
}

TEST(lift_collineation, round_trip_property) {
    for (Eigen::Index n : {3, 4, 5, 8}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const Seed seed = derive_seed(Seed{static_cast<std::uint64_t>(n)}, s);
            const Eigen::MatrixXcd m = testkit::random_invertible(n, seed);
            for (bool conjugate : {false, true}) {
                const ArtinLift result = lift(RayMap::matrix_induced(m, conjugate), s);
                const Sigma expected = conjugate ? Sigma::Conjugation : Sigma::Identity;
                ASSERT_EQ(result.map.sigma(), expected) << "n=" << n << " s=" << s;
                ASSERT_LE(scalar_align(result.map, SemiLinearMap::create(m, expected)).residual, 1e-8);
                ASSERT_EQ(result.diagnostics.mus.size(), static_cast<std::size_t>(n - 1));
                for (const Complex& mu : result.diagnostics.mus) ASSERT_EQ(classify_automorphism(mu), expected);
            }
        }
    }
}

TEST(lift_collineation, compatible_on_random_rays) {
    Rng rng(Seed{32});
    for (std::uint64_t s = 0; s < 10; ++s) {
        const RayMap f = RayMap::matrix_induced(testkit::random_invertible(5, Seed{s}), s % 2 == 0);
        const ArtinLift result = lift(f, s);
        for (int i = 0; i < 200; ++i) {
            const Ray x = random_ray(rng, 5);
            const Ray lifted = Ray::from_vector(apply_semilinear(result.map, x.representative()));
            ASSERT_GE(transition_probability(f.apply(x), lifted), 1.0 - 1e-10);
        }
    }
}

TEST(lift_collineation, unique_up_to_scalar_across_probe_gauges) {
    Rng rng(Seed{33});
    for (std::uint64_t s = 0; s < 50; ++s) {
        const RayMap f = RayMap::matrix_induced(testkit::random_invertible(4, Seed{s}), s % 3 == 0);
        const ProbeResponse probes = organize_probe_images(probe_images(f, Field::Complex), 4, Field::Complex);
        LiftDiagnostics d1;
        LiftDiagnostics d2;
        const SemiLinearMap first = assemble_semilinear(probes, kTol, d1);
        const SemiLinearMap second = assemble_semilinear(randomize_phases(probes, rng), kTol, d2);
        const ScalarAlignment a = scalar_align(second, first);
        ASSERT_LE(a.residual, 1e-8);
        ASSERT_NEAR(std::abs(a.scalar), 1.0, 1e-8);
    }
}

TEST(lift_collineation, real_field) {
    Rng rng(Seed{34});
    Eigen::MatrixXcd m(3, 3);
    for (Eigen::Index j = 0; j < 3; ++j) m.col(j) = gaussian_vector(rng, 3, Field::Real);
    const ArtinLift result = lift_collineation(RayMap::matrix_induced(m), Field::Real, kTol, 100, Seed{0});
    EXPECT_EQ(result.map.sigma(), Sigma::Identity);
    EXPECT_TRUE(result.diagnostics.mus.empty());
    EXPECT_EQ(result.map.matrix().imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(scalar_align(result.map, SemiLinearMap::create(m, Sigma::Identity)).residual, 1e-9);
}

TEST(lift_collineation, errors) {
    EXPECT_PROJLIFT_ERROR(lift(RayMap::matrix_induced(Eigen::MatrixXcd::Identity(2, 2))),
                          ErrorCode::DimensionTooSmall);

    const RayMap modulus = RayMap::oracle(3, [](const Ray& r) {
        return Ray::from_vector(r.representative().cwiseAbs().cast<Complex>());
    });
    // |e1 + i e2| = e1 + e2, so the probes already expose mu = 1.
    EXPECT_PROJLIFT_ERROR(lift(modulus), ErrorCode::AutomorphismUndetermined);

    // Identity on every probe (at most two nonzero components), modulus elsewhere:
    // only the verification on random rays can catch it.
    const RayMap sneaky = RayMap::oracle(3, [](const Ray& r) {
        const auto support = (r.representative().array().abs() > 0.0).count();
        if (support <= 2) return r;
        return Ray::from_vector(r.representative().cwiseAbs().cast<Complex>());
    });
    try {
        lift(sneaky);
        ADD_FAILURE() << "expected NotACollineation";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotACollineation);
        EXPECT_TRUE(e.witness());
    }

    const RayMap table = RayMap::tabulated(3, {{ray({1.0, 0.0, 0.0}), ray({1.0, 0.0, 0.0})}});
    EXPECT_PROJLIFT_ERROR(lift(table), ErrorCode::ProbeNotTabulated);
}

TEST(lift_collineation, stray_coefficient_is_not_a_collineation) {
    const RayMap f = RayMap::matrix_induced(testkit::random_invertible(3, Seed{35}));
    std::vector<std::pair<Ray, Ray>> pairs;
    for (const ProbeImage& p : probe_images(f, Field::Complex)) pairs.emplace_back(p.probe.ray, p.image);
    // f[e1+e2] moved onto a point with a component along w3.
    pairs[3].second = Ray::from_vector(pairs[0].second.representative() + pairs[1].second.representative() +
                                       0.1 * pairs[2].second.representative());
    EXPECT_PROJLIFT_ERROR(lift(RayMap::tabulated(3, pairs)), ErrorCode::NotACollineation);
}

TEST(lift_collineation, injected_automorphism_fault) {
    const Eigen::MatrixXcd m = testkit::random_invertible(4, Seed{36});
    const RayMap f = RayMap::matrix_induced(m);
    std::vector<std::pair<Ray, Ray>> pairs;
    for (const ProbeImage& p : probe_images(f, Field::Complex)) pairs.emplace_back(p.probe.ray, p.image);
    // [e1+ie2] -> [w1 + e^{i pi/4} w2]: mu is neither i nor -i.
    const StateVector injected = m.col(0) + std::polar(1.0, std::numbers::pi / 4) * m.col(1);
    pairs[7].second = Ray::from_vector(injected);
    ASSERT_EQ(pairs[7].first.representative()[1], (ray({1.0, kI, 0.0, 0.0}).representative()[1]));
    EXPECT_PROJLIFT_ERROR(lift(RayMap::tabulated(4, pairs)), ErrorCode::AutomorphismUndetermined);
}

TEST(classify_automorphism, decisions) {
    EXPECT_EQ(classify_automorphism(kI), Sigma::Identity);
    EXPECT_EQ(classify_automorphism(-kI), Sigma::Conjugation);
    EXPECT_EQ(classify_automorphism(kI + 5e-7), Sigma::Identity);
    EXPECT_FALSE(classify_automorphism(kI + 2e-6));
    EXPECT_FALSE(classify_automorphism(0.0));
    EXPECT_FALSE(classify_automorphism(std::polar(1.0, std::numbers::pi / 4)));
    EXPECT_EQ(classify_automorphism(kI + 1e-3, 1e-2), Sigma::Identity);
}

TEST(detect_automorphism, probes_must_agree) {
    const std::vector<Complex> agree{kI, kI * (1.0 + 1e-9), kI};
    EXPECT_EQ(detect_automorphism(agree).sigma, Sigma::Identity);
    EXPECT_NEAR(detect_automorphism(agree).residual, 1e-9, 1e-15);
    const std::vector<Complex> disagree{kI, -kI};
    EXPECT_PROJLIFT_ERROR(detect_automorphism(disagree), ErrorCode::AutomorphismUndetermined);
}

TEST(apply_semilinear, examples) {
    const Eigen::MatrixXcd m = testkit::random_invertible(3, Seed{37});
    const StateVector x = vec({1.0, kI, -2.0});
    EXPECT_LT((apply_semilinear(SemiLinearMap::create(m, Sigma::Identity), x) - m * x).norm(), 1e-15);
    const SemiLinearMap conj = SemiLinearMap::create(Eigen::MatrixXcd::Identity(2, 2), Sigma::Conjugation);
    EXPECT_LT((apply_semilinear(conj, vec({kI, 0.0})) - vec({-kI, 0.0})).norm(), 1e-15);
    EXPECT_PROJLIFT_ERROR(apply_semilinear(conj, vec({1.0, 0.0, 0.0})), ErrorCode::DimensionMismatch);
}

TEST(apply_semilinear, semilinearity) {
    Rng rng(Seed{38});
    for (int trial = 0; trial < 100; ++trial) {
        const Sigma sigma = trial % 2 ? Sigma::Conjugation : Sigma::Identity;
        const SemiLinearMap f = SemiLinearMap::create(testkit::random_invertible(4, derive_seed(Seed{38}, trial)), sigma);
        const StateVector x = gaussian_vector(rng, 4, Field::Complex);
        const StateVector y = gaussian_vector(rng, 4, Field::Complex);
        const Complex alpha = rng.complex_normal();
        const Complex sigma_alpha = sigma == Sigma::Conjugation ? std::conj(alpha) : alpha;
        // Direct recomputation: matrix times the componentwise image of alpha * x.
        StateVector scaled = alpha * x;
        if (sigma == Sigma::Conjugation) scaled = scaled.conjugate();
        const StateVector direct = f.matrix() * scaled;
        ASSERT_LE((apply_semilinear(f, alpha * x) - sigma_alpha * apply_semilinear(f, x)).norm(), 1e-12);
        ASSERT_LE((apply_semilinear(f, alpha * x) - direct).norm(), 1e-12);
        ASSERT_LE((apply_semilinear(f, x + y) - apply_semilinear(f, x) - apply_semilinear(f, y)).norm(), 1e-12);
    }
}

TEST(scalar_align, examples) {
    const SemiLinearMap g = SemiLinearMap::create(testkit::random_invertible(3, Seed{39}), Sigma::Identity);
    const SemiLinearMap f = SemiLinearMap::create(2.0 * g.matrix(), Sigma::Identity);
    const ScalarAlignment twice = scalar_align(f, g);
    EXPECT_NEAR(std::abs(twice.scalar - 2.0), 0.0, 1e-14);
    EXPECT_LE(twice.residual, 1e-14);
    const ScalarAlignment same = scalar_align(g, g);
    EXPECT_NEAR(std::abs(same.scalar - 1.0), 0.0, 1e-15);
    EXPECT_LE(same.residual, 1e-15);
    EXPECT_PROJLIFT_ERROR(scalar_align(f, SemiLinearMap::create(g.matrix(), Sigma::Conjugation)),
                          ErrorCode::SigmaMismatch);
}

TEST(semilinear_map, rejects_singular) {
    EXPECT_PROJLIFT_ERROR(SemiLinearMap::create(Eigen::MatrixXcd::Ones(3, 3), Sigma::Identity), ErrorCode::InvalidMap);
}
