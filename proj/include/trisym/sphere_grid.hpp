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

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisym {

/// Golden-ratio conjugate, the azimuthal increment of the Fibonacci grid.
inline constexpr double kGoldenConjugate = 0.6180339887498948482045868343656;

/// Node i of the N-point Fibonacci sphere grid:
/// z = 1 - (2i+1)/N, phi = 2 pi i * golden-ratio-conjugate.
inline Eigen::Vector3d fibonacci_sphere_node(int index, int count) {
  const double z = 1.0 - (2.0 * index + 1.0) / count;
  const double phi = 2.0 * M_PI * index * kGoldenConjugate;
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

/// Quasi-uniform deterministic point set on the unit sphere; used for
/// multistart seeding, dense max scans and the sphere-scan CSV.
inline std::vector<Eigen::Vector3d> fibonacci_sphere(int count) {
  if (count < 1) {
    throw std::invalid_argument("fibonacci_sphere: count must be >= 1, got " +
                                std::to_string(count));
  }
  std::vector<Eigen::Vector3d> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    nodes.push_back(fibonacci_sphere_node(i, count));
  }
  return nodes;
}

/// Angle between two unit vectors. The atan2 form stays accurate for
/// nearly parallel vectors, where acos of the dot product loses half the
/// significant digits.
inline double angular_distance(const Eigen::Vector3d& u,
                               const Eigen::Vector3d& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

}  // namespace trisym
