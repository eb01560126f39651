/*
 * Copyright 2026 The Trisym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "test_support.hpp"
#include "trisym/sphere_grid.hpp"
#include "trisym/sphere_opt.hpp"

using namespace trisym;

namespace {

bool contains_direction(const std::vector<CriticalPoint>& points,
                        const Eigen::Vector3d& direction, double tol = 1e-6) {
  for (const CriticalPoint& p : points) {
    if (angular_distance(p.direction, direction) < tol) return true;
  }
  return false;
}

void check_point_invariants(const TrisymPolynomial& poly,
                            const std::vector<CriticalPoint>& points) {
  for (const CriticalPoint& p : points) {
    CHECK(std::abs(p.direction.norm() - 1.0) < 1e-12);
    const Eigen::Vector3d g = gradient(poly, p.direction);
    CHECK((g - p.multiplier * p.direction).norm() <
          1e-9 * (1.0 + std::abs(p.multiplier)));
  }
}

}  // namespace

TEST_CASE("Fibonacci sphere grid matches its defining formula") {
  const auto nodes = fibonacci_sphere(4);
  REQUIRE(nodes.size() == 4);
  CHECK(nodes[0][2] == 1.0 - 1.0 / 4.0);
  CHECK(nodes[0][1] == 0.0);  // phi_0 = 0
  CHECK(nodes[3][2] == 1.0 - 7.0 / 4.0);
  for (const auto& node : nodes) {
    CHECK(std::abs(node.norm() - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(fibonacci_sphere(0), std::invalid_argument);
}

TEST_CASE("critical points of a linear polynomial") {
  const TrisymPolynomial poly = testing::monomial_poly(1, {{{1, 0, 0}, 1.0}});
  const CriticalPointSet set = critical_points(poly);
  REQUIRE_FALSE(set.constant_polynomial);
  REQUIRE(set.points.size() == 2);
  check_point_invariants(poly, set.points);

  CHECK(set.points[0].kind == CriticalKind::Maximum);
  CHECK(set.points[0].value == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(angular_distance(set.points[0].direction, {1, 0, 0}) < 1e-9);
  CHECK(set.points[1].kind == CriticalKind::Minimum);
  CHECK(angular_distance(set.points[1].direction, {-1, 0, 0}) < 1e-9);
}

TEST_CASE("maxima of a + b sit on the diagonal") {
  TrisymPolynomial poly = zero_polynomial(1);
  poly.coeffs << 1.0, 1.0, 0.0;
  const MaximaSet maxima = global_maxima(poly);
  REQUIRE_FALSE(maxima.constant_polynomial);
  REQUIRE(maxima.points.size() == 1);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(angular_distance(maxima.points[0].direction, {s, s, 0}) < 1e-9);
  CHECK(maxima.max_value == Catch::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(maxima.degenerate_locus);
}

TEST_CASE("constant polynomials signal instead of optimizing") {
  const TrisymPolynomial sphere = testing::monomial_poly(
      2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}, {{0, 0, 2}, 1.0}});
  CHECK(critical_points(sphere).constant_polynomial);
  CHECK(global_maxima(sphere).constant_polynomial);
  CHECK_THROWS_AS(critical_points(zero_polynomial(0)), std::invalid_argument);
}

TEST_CASE("a circle of maxima is flagged as a degenerate locus") {
  // b^2 + c^2 = 1 - a^2 on the sphere: the whole equator a = 0 is maximal.
  const TrisymPolynomial poly = testing::monomial_poly(
      2, {{{0, 2, 0}, 1.0}, {{0, 0, 2}, 1.0}});
  const MaximaSet maxima = global_maxima(poly);
  REQUIRE_FALSE(maxima.constant_polynomial);
  CHECK(maxima.degenerate_locus);
  CHECK(maxima.max_value == Catch::Approx(1.0).epsilon(1e-10));
  CHECK(maxima.points.size() >= 8);
  for (const CriticalPoint& p : maxima.points) {
    CHECK(std::abs(p.direction[0]) < 1e-8);
    CHECK(p.kind == CriticalKind::Degenerate);
  }
}

TEST_CASE("quadratic forms: maxima are the top eigenvector pair") {
  testing::Rng rng(501);
  for (int trial = 0; trial < 20; ++trial) {
    // Random symmetric Q gives p(x) = x^T Q x.
    Eigen::Matrix3d q;
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        q(i, j) = uniform(rng);
        q(j, i) = q(i, j);
      }
    }
    TrisymPolynomial poly = zero_polynomial(2);
    poly.coeffs[monomial_index(2, 2, 0)] = q(0, 0);
    poly.coeffs[monomial_index(2, 0, 2)] = q(1, 1);
    poly.coeffs[monomial_index(2, 0, 0)] = q(2, 2);
    poly.coeffs[monomial_index(2, 1, 1)] = 2.0 * q(0, 1);
    poly.coeffs[monomial_index(2, 1, 0)] = 2.0 * q(0, 2);
    poly.coeffs[monomial_index(2, 0, 1)] = 2.0 * q(1, 2);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(q);
    const double top = eig.eigenvalues()(2);
    const Eigen::Vector3d axis = eig.eigenvectors().col(2);
    if (top - eig.eigenvalues()(1) < 1e-3) continue;  // near-degenerate draw

    const MaximaSet maxima = global_maxima(poly);
    CHECK(maxima.max_value == Catch::Approx(top).epsilon(1e-9));
    REQUIRE(maxima.points.size() == 2);  // antipodal pair
    CHECK(contains_direction(maxima.points, axis, 1e-7));
    CHECK(contains_direction(maxima.points, -axis, 1e-7));
  }
}

TEST_CASE("critical values are antipodally symmetric") {
  testing::Rng rng(502);
  const TrisymPolynomial even = testing::random_polynomial(rng, 2);
  const CriticalPointSet even_set = critical_points(even);
  check_point_invariants(even, even_set.points);
  for (const CriticalPoint& p : even_set.points) {
    bool found = false;
    for (const CriticalPoint& q : even_set.points) {
      if (angular_distance(q.direction, -p.direction) < 1e-6) {
        CHECK(q.value == Catch::Approx(p.value).margin(1e-9));
        found = true;
        break;
      }
    }
    CHECK(found);
  }

  const TrisymPolynomial odd = testing::random_polynomial(rng, 3);
  const CriticalPointSet odd_set = critical_points(odd);
  check_point_invariants(odd, odd_set.points);
  for (const CriticalPoint& p : odd_set.points) {
    bool found = false;
    for (const CriticalPoint& q : odd_set.points) {
      if (angular_distance(q.direction, -p.direction) < 1e-6) {
        CHECK(q.value == Catch::Approx(-p.value).margin(1e-9));
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("global maxima are rotation equivariant") {
  testing::Rng rng(503);
  for (const int degree : {1, 2, 3}) {
    const TrisymPolynomial poly = testing::random_polynomial(rng, degree);
    const MaximaSet base = global_maxima(poly);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::Matrix3d rotation = testing::random_rotation(rng);
      // q(x) = p(R^T x) has maxima at R times the maxima of p.
      const MaximaSet rotated =
          global_maxima(compose_linear(poly, rotation.transpose()));
      REQUIRE(rotated.points.size() == base.points.size());
      CHECK(rotated.max_value == Catch::Approx(base.max_value).epsilon(1e-9));
      for (const CriticalPoint& p : base.points) {
        CHECK(contains_direction(rotated.points,
                                 rotation * p.direction, 1e-6));
      }
    }
  }
}

TEST_CASE("no dense grid node beats the reported maximum") {
  testing::Rng rng(504);
  for (const int degree : {1, 2, 3, 4}) {
    const TrisymPolynomial poly = testing::random_polynomial(rng, degree);
    const MaximaSet maxima = global_maxima(poly);
    for (const Eigen::Vector3d& node : fibonacci_sphere(4096)) {
      CHECK(evaluate(poly, node) <=
            maxima.max_value + 1e-8 * (1.0 + std::abs(maxima.max_value)));
    }
  }
}

TEST_CASE("deduplicated output is sorted and deterministic") {
  testing::Rng rng(505);
  const TrisymPolynomial poly = testing::random_polynomial(rng, 3);
  const CriticalPointSet first = critical_points(poly);
  const CriticalPointSet second = critical_points(poly);
  REQUIRE(first.points.size() == second.points.size());
  for (std::size_t i = 0; i < first.points.size(); ++i) {
    CHECK(testing::max_diff(first.points[i].direction,
                            second.points[i].direction) == 0.0);
    CHECK(first.points[i].value == second.points[i].value);
  }
  for (std::size_t i = 1; i < first.points.size(); ++i) {
    CHECK(first.points[i - 1].value >= first.points[i].value);
  }
}
