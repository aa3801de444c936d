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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projlift/random.hpp"
#include "test_util.hpp"

using namespace projlift;
using projlift::test::kI;
using projlift::test::ray;
using projlift::test::vec;

TEST(ray_from_vector, normalizes_scaled_basis_vector) {
    const Ray r = ray({3.0, 0.0});
    EXPECT_LT((r.representative() - vec({1.0, 0.0})).norm(), 1e-15);
}

TEST(ray_from_vector, gauge_makes_pivot_real_positive) {
    const Ray r = ray({0.0, 2.0 * kI});
    EXPECT_LT((r.representative() - vec({0.0, 1.0})).norm(), 1e-15);
}

TEST(ray_from_vector, negated_vector_gives_same_representative) {
    EXPECT_LT((ray({1.0, 1.0}).representative() - ray({-1.0, -1.0}).representative()).norm(), 1e-15);
}

TEST(ray_from_vector, ties_pick_the_lowest_index) {
    const Ray r = ray({kI, 1.0});
    EXPECT_NEAR(std::abs(r.representative()[0] - Complex(std::numbers::sqrt2 / 2, 0.0)), 0.0, 1e-15);
    EXPECT_EQ(r.representative()[0].imag(), 0.0);
    EXPECT_NEAR(std::abs(r.representative()[1] - Complex(0.0, -std::numbers::sqrt2 / 2)), 0.0, 1e-15);
}

TEST(ray_from_vector, errors) {
    EXPECT_PROJLIFT_ERROR(ray({0.0, 0.0, 0.0}), ErrorCode::ZeroVector);
    EXPECT_PROJLIFT_ERROR(ray({1.0}), ErrorCode::DimensionTooSmall);
    EXPECT_PROJLIFT_ERROR(ray({std::nan(""), 1.0}), ErrorCode::ZeroVector);
    EXPECT_PROJLIFT_ERROR(ray({1e-300, 0.0}), ErrorCode::ZeroVector);
}

TEST(ray_from_vector, huge_and_tiny_components_stay_finite) {
    const Ray big = ray({1e300, 1e300});
    const Ray small = ray({1e-290, -1e-290});
    EXPECT_NEAR(big.representative().norm(), 1.0, 1e-15);
    EXPECT_NEAR(small.representative().norm(), 1.0, 1e-15);
}

TEST(ray_from_vector, scale_invariance_property) {
    Rng rng(Seed{11});
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index n = 2 + trial % 7;
        const StateVector v = gaussian_vector(rng, n, Field::Complex);
        const Complex lambda = rng.complex_normal() * std::exp(6.0 * (rng.uniform() - 0.5));
        const Ray a = Ray::from_vector(v);
        const Ray b = Ray::from_vector(lambda * v);
        ASSERT_LT((a.representative() - b.representative()).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_NEAR(a.representative().norm(), 1.0, 1e-12);
        Eigen::Index pivot = 0;
        a.representative().cwiseAbs().maxCoeff(&pivot);
        ASSERT_EQ(a.representative()[pivot].imag(), 0.0);
        ASSERT_GE(a.representative()[pivot].real(), 0.0);
    }
}

TEST(ray_from_vector, real_vectors_stay_real) {
    Rng rng(Seed{12});
    for (int trial = 0; trial < 200; ++trial) {
        const Ray r = random_ray(rng, 2 + trial % 6, Field::Real);
        ASSERT_TRUE(r.is_real());
    }
}

TEST(transition_probability, examples) {
    EXPECT_EQ(transition_probability(ray({1.0, 0.0}), ray({0.0, 1.0})), 0.0);
    const Ray a = ray({0.3, 0.4 * kI, -1.0});
    EXPECT_NEAR(transition_probability(a, a), 1.0, 1e-15);
    EXPECT_NEAR(transition_probability(ray({1.0, 0.0}), ray({1.0, 1.0})), 0.5, 1e-15);
}

TEST(transition_probability, dimension_mismatch) {
    EXPECT_PROJLIFT_ERROR(transition_probability(ray({1.0, 0.0}), ray({1.0, 0.0, 0.0})),
                          ErrorCode::DimensionMismatch);
}

TEST(transition_probability, symmetric_and_matches_loop_oracle) {
    Rng rng(Seed{13});
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index n = 2 + trial % 9;
        const StateVector u = gaussian_vector(rng, n, Field::Complex);
        const StateVector v = gaussian_vector(rng, n, Field::Complex);
        const Ray a = Ray::from_vector(u);
        const Ray b = Ray::from_vector(v);
        const double ab = transition_probability(a, b);
        ASSERT_LE(std::abs(ab - transition_probability(b, a)), 1e-14);
        ASSERT_NEAR(ab, oracles::overlap(u, v), 1e-13);
        ASSERT_GE(ab, 0.0);
        ASSERT_LE(ab, 1.0);
    }
}

TEST(rays_equal, examples) {
    const Ray a = ray({0.6, 0.8 * kI});
    EXPECT_TRUE(rays_equal(a, a, 1e-8));
    EXPECT_FALSE(rays_equal(ray({1.0, 0.0}), ray({0.0, 1.0}), 1e-8));
    for (double theta : {0.1, 1.0, 2.5, -3.0}) {
        const StateVector v = vec({0.2, -1.3 * kI, 0.7});
        EXPECT_TRUE(rays_equal(Ray::from_vector(v), Ray::from_vector(std::polar(1.0, theta) * v), 1e-8));
    }
}

TEST(join, spans_first_two_coordinates) {
    const ProjectiveSubspace line = join(ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0}));
    EXPECT_EQ(line.linear_dim(), 2);
    EXPECT_EQ(line.projective_dim(), 1);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
    expected(0, 0) = expected(1, 1) = 1.0;
    EXPECT_LT((line.projector() - expected).cwiseAbs().maxCoeff(), 1e-15);
    const Eigen::MatrixXcd gram = line.basis().adjoint() * line.basis();
    EXPECT_LT((gram - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(join, symmetric) {
    Rng rng(Seed{14});
    for (int trial = 0; trial < 100; ++trial) {
        const Ray a = random_ray(rng, 5);
        const Ray b = random_ray(rng, 5);
        ASSERT_LT((join(a, b).projector() - join(b, a).projector()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(join, contains_linear_combinations_of_its_generators) {
    Rng rng(Seed{15});
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 3 + trial % 6;
        const StateVector a = gaussian_vector(rng, n, Field::Complex);
        const StateVector b = gaussian_vector(rng, n, Field::Complex);
        const ProjectiveSubspace line = join(Ray::from_vector(a), Ray::from_vector(b));
        ASSERT_EQ(line.projective_dim(), 1);
        const Ray c = Ray::from_vector(2.0 * a - 3.0 * b);
        ASSERT_TRUE(contains(line, c, 1e-10));
        ASSERT_LE(line.residual(c.representative()), 1e-12);
    }
}

TEST(join, degenerate) {
    const StateVector v = vec({1.0, kI, 2.0});
    EXPECT_PROJLIFT_ERROR(join(Ray::from_vector(v), Ray::from_vector(-3.0 * kI * v)), ErrorCode::DegenerateJoin);
}

TEST(contains, examples) {
    EXPECT_TRUE(contains(join(ray({1.0, 0.0}), ray({0.0, 1.0})), ray({1.0, 1.0}), 1e-12));
    EXPECT_FALSE(contains(join(ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0})), ray({0.0, 0.0, 1.0}), 1e-10));
    EXPECT_PROJLIFT_ERROR(contains(join(ray({1.0, 0.0}), ray({0.0, 1.0})), ray({1.0, 0.0, 0.0}), 1e-10),
                          ErrorCode::DimensionMismatch);
}

TEST(contains, residual_matches_normal_equation_oracle) {
    Rng rng(Seed{16});
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index n = 3 + trial % 6;
        const StateVector a = gaussian_vector(rng, n, Field::Complex);
        const StateVector b = gaussian_vector(rng, n, Field::Complex);
        const StateVector c = gaussian_vector(rng, n, Field::Complex);
        const ProjectiveSubspace line = join(Ray::from_vector(a), Ray::from_vector(b));
        Eigen::MatrixXcd span(n, 2);
        span << a, b;
        const Ray cr = Ray::from_vector(c);
        ASSERT_NEAR(line.residual(cr.representative()), oracles::span_distance(span, cr.representative()), 1e-10);
    }
}

TEST(contains, scale_invariant_in_the_tested_ray) {
    Rng rng(Seed{17});
    for (int trial = 0; trial < 200; ++trial) {
        const StateVector a = gaussian_vector(rng, 4, Field::Complex);
        const StateVector b = gaussian_vector(rng, 4, Field::Complex);
        const ProjectiveSubspace line = join(Ray::from_vector(a), Ray::from_vector(b));
        const StateVector c = trial % 2 ? StateVector(a + rng.complex_normal() * b) : gaussian_vector(rng, 4, Field::Complex);
        const Complex lambda = rng.complex_normal() * 1e3;
        ASSERT_EQ(contains(line, Ray::from_vector(c), 1e-10), contains(line, Ray::from_vector(lambda * c), 1e-10));
    }
}

TEST(projectively_independent, examples) {
    const std::vector<Ray> basis{ray({1.0, 0.0}), ray({0.0, 1.0})};
    EXPECT_TRUE(projectively_independent(basis));
    const std::vector<Ray> equal{ray({1.0, 0.0}), ray({2.0, 0.0})};
    EXPECT_FALSE(projectively_independent(equal));
    const std::vector<Ray> too_many{ray({1.0, 0.0}), ray({0.0, 1.0}), ray({1.0, 1.0})};
    EXPECT_FALSE(projectively_independent(too_many));
}

TEST(projectively_independent, errors) {
    const std::vector<Ray> one{ray({1.0, 0.0})};
    EXPECT_PROJLIFT_ERROR(projectively_independent(one), ErrorCode::TooFewRays);
    const std::vector<Ray> mixed{ray({1.0, 0.0}), ray({1.0, 0.0, 0.0})};
    EXPECT_PROJLIFT_ERROR(projectively_independent(mixed), ErrorCode::DimensionMismatch);
}

TEST(projectively_independent, agrees_with_rank_oracle) {
    Rng rng(Seed{18});
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index n = 2 + trial % 7;
        const auto k = static_cast<int>(2 + rng.uniform() * static_cast<double>(n));  // 2..n+1
        const auto span_rank = static_cast<int>(1 + rng.uniform() * static_cast<double>(k));  // 1..k
        const int rank = std::min<int>(span_rank, static_cast<int>(n));
        // k rays drawn from a random rank-`rank` subspace: independent iff rank == k.
        Eigen::MatrixXcd generators(n, rank);
        for (int j = 0; j < rank; ++j) generators.col(j) = gaussian_vector(rng, n, Field::Complex);
        std::vector<Ray> rays;
        std::vector<Eigen::VectorXcd> vectors;
        for (int j = 0; j < k; ++j) {
            const StateVector v = generators * gaussian_vector(rng, rank, Field::Complex);
            vectors.push_back(v);
            rays.push_back(Ray::from_vector(v));
        }
        const bool expected = rank == k;
        ASSERT_EQ(oracles::gram_schmidt_rank(vectors) == k, expected);
        ASSERT_EQ(projectively_independent(rays), expected) << "n=" << n << " k=" << k << " rank=" << rank;
    }
}

TEST(collinear, examples) {
    const std::vector<Ray> on_line{ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0}), ray({1.0, 1.0, 0.0})};
    EXPECT_TRUE(collinear(on_line));
    const std::vector<Ray> triangle{ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0}), ray({0.0, 0.0, 1.0})};
    EXPECT_FALSE(collinear(triangle));
    const std::vector<Ray> two{ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0})};
    EXPECT_PROJLIFT_ERROR(collinear(two), ErrorCode::TooFewRays);
}

TEST(collinear, random_points_on_a_line) {
    Rng rng(Seed{19});
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector a = gaussian_vector(rng, 5, Field::Complex);
        const StateVector b = gaussian_vector(rng, 5, Field::Complex);
        std::vector<Ray> points{Ray::from_vector(a), Ray::from_vector(b)};
        for (int j = 0; j < 4; ++j) points.push_back(Ray::from_vector(rng.complex_normal() * a + rng.complex_normal() * b));
        ASSERT_TRUE(collinear(points));
        points.push_back(random_ray(rng, 5));
        ASSERT_FALSE(collinear(points));
    }
}

TEST(is_projective_frame, examples) {
    const std::vector<Ray> standard3{ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0}), ray({0.0, 0.0, 1.0}),
                                     ray({1.0, 1.0, 1.0})};
    EXPECT_TRUE(is_projective_frame(standard3));
    const std::vector<Ray> degenerate{ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0}), ray({0.0, 0.0, 1.0}),
                                      ray({1.0, 1.0, 0.0})};
    EXPECT_FALSE(is_projective_frame(degenerate));
    const std::vector<Ray> standard2{ray({1.0, 0.0}), ray({0.0, 1.0}), ray({1.0, 1.0})};
    EXPECT_TRUE(is_projective_frame(standard2));
}

TEST(is_projective_frame, wrong_size) {
    const std::vector<Ray> short_frame{ray({1.0, 0.0, 0.0}), ray({0.0, 1.0, 0.0}), ray({0.0, 0.0, 1.0})};
    EXPECT_PROJLIFT_ERROR(is_projective_frame(short_frame), ErrorCode::WrongFrameSize);
}

TEST(projective_subspace, span_of_drops_dependent_directions) {
    const std::vector<StateVector> vectors{vec({1.0, 0.0, 0.0}), vec({0.0, 1.0, 0.0}), vec({1.0, 1.0, 0.0})};
    const ProjectiveSubspace plane = ProjectiveSubspace::span_of(vectors);
    EXPECT_EQ(plane.linear_dim(), 2);
    EXPECT_EQ(plane.projective_dim(), 1);
    EXPECT_PROJLIFT_ERROR(ProjectiveSubspace::from_orthonormal(Eigen::MatrixXcd::Ones(3, 2)), ErrorCode::InvalidMap);
}
