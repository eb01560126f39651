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

// Shared generators and independent oracles for the test suites. The
// oracles here deliberately avoid the library's computational paths:
// the Pfaffian is expanded combinatorially, sphere means use a plain
// midpoint rule, determinants come from Eigen.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "trisym/cycles.hpp"
#include "trisym/frame.hpp"
#include "trisym/polynomial.hpp"

namespace trisym::testing {

using Rng = std::mt19937_64;

/// Max-norm difference; `max_diff(a, b) == 0.0` is exact equality.
template <typename A, typename B>
inline double max_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Eigen::Vector3d random_unit_vector(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = {gauss(rng), gauss(rng), gauss(rng)};
  } while (v.norm() < 1e-6);
  return v.normalized();
}

inline Eigen::VectorXd random_vector(Rng& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
  return v;
}

/// Uniform rotation from a random unit quaternion.
inline Eigen::Matrix3d random_rotation(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  q.normalize();
  return q.toRotationMatrix();
}

inline Eigen::MatrixXd random_antisymmetric(Rng& rng, int dim) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      a(i, j) = uniform(rng);
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

/// Combinatorial Pfaffian by expansion along the first row; independent
/// of the elimination-based implementation. Fine up to dim ~ 10.
inline double pfaffian_recursive(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1.0;
  if (n % 2 == 1) return 0.0;
  if (n == 2) return a(0, 1);
  double sum = 0.0;
  double sign = 1.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    Eigen::MatrixXd minor(n - 2, n - 2);
    Eigen::Index row = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
      if (i == j) continue;
      Eigen::Index col = 0;
      for (Eigen::Index k = 1; k < n; ++k) {
        if (k == j) continue;
        minor(row, col++) = a(i, k);
      }
      ++row;
    }
    sum += sign * a(0, j) * pfaffian_recursive(minor);
    sign = -sign;
  }
  return sum;
}

/// Plain 2D midpoint rule mean over the sphere; crude (O(h^2)) oracle,
/// independent of the Gauss-Legendre machinery.
inline double brute_sphere_mean(const TrisymPolynomial& poly,
                                int theta_steps = 800, int phi_steps = 1600) {
  double integral = 0.0;
  const double dtheta = M_PI / theta_steps;
  const double dphi = 2.0 * M_PI / phi_steps;
  for (int i = 0; i < theta_steps; ++i) {
    const double theta = (i + 0.5) * dtheta;
    for (int j = 0; j < phi_steps; ++j) {
      const double phi = (j + 0.5) * dphi;
      const Eigen::Vector3d x(std::sin(theta) * std::cos(phi),
                              std::sin(theta) * std::sin(phi),
                              std::cos(theta));
      integral += evaluate(poly, x) * std::sin(theta) * dtheta * dphi;
    }
  }
  return integral / (4.0 * M_PI);
}

inline Eigen::VectorXd basis_vector(int dim, int index, double scale = 1.0) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[index] = scale;
  return v;
}

// Canonical cycles used across the suites.
inline LinearCycle line_cycle(int dim, int i, int j) {
  return make_linear_cycle({basis_vector(dim, i), basis_vector(dim, j)});
}

/// span{e0, e1 + e2}: complex analytic exactly at (1,1,0)/sqrt(2).
inline LinearCycle diagonal_line_cycle(int dim = 4) {
  Eigen::VectorXd w = basis_vector(dim, 1);
  w[2] = 1.0;
  return make_linear_cycle({basis_vector(dim, 0), w});
}

/// span{e0,e1,e2,e3} in R^8: a quaternionic block, the model trianalytic
/// cycle.
inline LinearCycle quaternionic_block_cycle() {
  return make_linear_cycle({basis_vector(8, 0), basis_vector(8, 1),
                            basis_vector(8, 2), basis_vector(8, 3)});
}

/// span{e0,e4} in R^8: every restricted Kahler form vanishes.
inline LinearCycle null_plane_cycle() {
  return make_linear_cycle({basis_vector(8, 0), basis_vector(8, 4)});
}

inline LinearCycle random_linear_cycle(Rng& rng, int dim, int n) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Eigen::VectorXd> vectors;
    for (int i = 0; i < 2 * n; ++i) vectors.push_back(random_vector(rng, dim));
    try {
      return make_linear_cycle(std::move(vectors));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("random_linear_cycle: generator kept degenerating");
}

/// span{v_1, L v_1, ..., v_n, L v_n}: complex analytic at `direction` by
/// construction.
inline LinearCycle complex_linear_cycle(Rng& rng,
                                        const QuaternionicFrame& frame,
                                        const Eigen::Vector3d& direction,
                                        int n) {
  const InducedStructure structure = induced_structure(frame, direction);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Eigen::VectorXd> vectors;
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd v = random_vector(rng, frame.dim);
      vectors.push_back(v);
      vectors.push_back(structure.matrix * v);
    }
    try {
      return make_linear_cycle(std::move(vectors));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("complex_linear_cycle: generator kept degenerating");
}

inline QuaternionicFrame scale_metric(QuaternionicFrame frame, double factor) {
  frame.metric *= factor;
  return frame;
}

inline TrisymPolynomial monomial_poly(int degree,
                                      std::vector<std::pair<Exponents, double>>
                                          terms) {
  TrisymPolynomial poly = zero_polynomial(degree);
  for (const auto& [e, c] : terms) {
    poly.coeffs[monomial_index(degree, e[0], e[1])] = c;
  }
  return poly;
}

inline TrisymPolynomial random_polynomial(Rng& rng, int degree) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  TrisymPolynomial poly = zero_polynomial(degree);
  for (int i = 0; i < poly.coeffs.size(); ++i) poly.coeffs[i] = uniform(rng);
  return poly;
}

}  // namespace trisym::testing
