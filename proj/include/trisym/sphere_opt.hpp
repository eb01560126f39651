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

/**
 * @brief Critical points and global maxima of a homogeneous polynomial on
 * the unit sphere.
 *
 * Multistart projected Newton on the Lagrange system grad p = lambda x,
 * |x| = 1: starts on a Fibonacci grid, Newton steps in an orthonormal
 * tangent basis with a pseudo-inverse solve, deduplication by angular
 * distance, classification by the projected Hessian of the Lagrangian.
 * Positive-dimensional maximum loci are reported with a flag rather than
 * rejected.
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "trisym/errors.hpp"
#include "trisym/polynomial.hpp"
#include "trisym/sphere_grid.hpp"

namespace trisym {

enum class CriticalKind { Maximum, Minimum, Saddle, Degenerate };

inline const char* to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::Maximum: return "maximum";
    case CriticalKind::Minimum: return "minimum";
    case CriticalKind::Saddle: return "saddle";
    default: return "degenerate";
  }
}

struct CriticalPoint {
  Eigen::Vector3d direction;
  double value = 0.0;
  CriticalKind kind = CriticalKind::Degenerate;
  double multiplier = 0.0;  ///< Lagrange multiplier = x . grad p(x)
  double residual = 0.0;    ///< ||grad p(x) - multiplier x||
};

struct CriticalPointOptions {
  int starts = 256;
  int newton_iters = 40;
  double dedupe_angle = 1e-6;   ///< radians
  double residual_tol = 1e-12;  ///< Newton convergence, relative to 1+|lambda|
  double constant_tol = 1e-10;  ///< constancy threshold for the signal
  int dense_grid = 4096;        ///< cross-validation grid for maxima
};

/// Critical points plus the constant-polynomial signal (every point of a
/// constant polynomial is critical, so no list is returned for one).
struct CriticalPointSet {
  bool constant_polynomial = false;
  std::vector<CriticalPoint> points;
};

/// Deduplicated maxima. degenerate_locus flags a cluster of top-value
/// points consistent with a positive-dimensional maximum set.
struct MaximaSet {
  bool constant_polynomial = false;
  std::vector<CriticalPoint> points;
  double max_value = 0.0;
  bool degenerate_locus = false;
};

namespace detail {

inline void tangent_basis(const Eigen::Vector3d& x, Eigen::Vector3d& u,
                          Eigen::Vector3d& v) {
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(x[i]) < std::abs(x[axis])) axis = i;
  }
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e[axis] = 1.0;
  u = (e - e.dot(x) * x).normalized();
  v = x.cross(u);
}

/// Eigenvalues of the projected Lagrangian Hessian P (H - lambda Id) P on
/// the tangent plane, ascending.
inline Eigen::Vector2d projected_hessian_eigenvalues(
    const TrisymPolynomial& poly, const Eigen::Vector3d& x, double lambda) {
  Eigen::Vector3d u, v;
  tangent_basis(x, u, v);
  const Eigen::Matrix3d h = hessian(poly, x);
  Eigen::Matrix2d a;
  a(0, 0) = u.dot(h * u) - lambda;
  a(0, 1) = u.dot(h * v);
  a(1, 0) = a(0, 1);
  a(1, 1) = v.dot(h * v) - lambda;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(a);
  return eig.eigenvalues();
}

inline CriticalKind classify(const Eigen::Vector2d& mu, double lambda) {
  const double scale = std::max({1.0, std::abs(lambda), std::abs(mu[0]),
                                 std::abs(mu[1])});
  const double tol = 1e-8 * scale;
  if (std::abs(mu[0]) <= tol || std::abs(mu[1]) <= tol) {
    return CriticalKind::Degenerate;
  }
  if (mu[1] < 0.0) return CriticalKind::Maximum;
  if (mu[0] > 0.0) return CriticalKind::Minimum;
  return CriticalKind::Saddle;
}

inline std::optional<CriticalPoint> newton_polish(
    const TrisymPolynomial& poly, Eigen::Vector3d x,
    const CriticalPointOptions& opts) {
  x.normalize();
  for (int iter = 0; iter < opts.newton_iters; ++iter) {
    const Eigen::Vector3d g = gradient(poly, x);
    const double lambda = x.dot(g);
    const Eigen::Vector3d r = g - lambda * x;
    if (r.norm() < opts.residual_tol * (1.0 + std::abs(lambda))) break;

    Eigen::Vector3d u, v;
    tangent_basis(x, u, v);
    const Eigen::Matrix3d h = hessian(poly, x);
    Eigen::Matrix2d a;
    a(0, 0) = u.dot(h * u) - lambda;
    a(0, 1) = u.dot(h * v);
    a(1, 0) = a(0, 1);
    a(1, 1) = v.dot(h * v) - lambda;
    const Eigen::Vector2d rhs(-u.dot(g), -v.dot(g));

    // Pseudo-inverse solve: a degenerate tangent direction (positive-
    // dimensional critical manifold) contributes no step.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(a);
    const double mu_scale =
        std::max({std::abs(eig.eigenvalues()[0]), std::abs(eig.eigenvalues()[1]),
                  1e-300});
    Eigen::Vector2d step = Eigen::Vector2d::Zero();
    for (int k = 0; k < 2; ++k) {
      const double mu = eig.eigenvalues()[k];
      if (std::abs(mu) > 1e-12 * mu_scale) {
        const Eigen::Vector2d basis_k = eig.eigenvectors().col(k);
        step += basis_k.dot(rhs) / mu * basis_k;
      }
    }
    double norm = step.norm();
    if (norm > 0.5) step *= 0.5 / norm;  // trust-region cap
    x = (x + step[0] * u + step[1] * v).normalized();
  }

  const Eigen::Vector3d g = gradient(poly, x);
  const double lambda = x.dot(g);
  const double residual = (g - lambda * x).norm();
  if (!(residual < 1e-9 * (1.0 + std::abs(lambda)))) return std::nullopt;

  CriticalPoint point;
  point.direction = x;
  point.value = evaluate(poly, x);
  point.multiplier = lambda;
  point.residual = residual;
  point.kind = classify(projected_hessian_eigenvalues(poly, x, lambda), lambda);
  return point;
}

inline bool lex_less(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Sort by value descending, then lexicographic direction: deterministic
/// output under any evaluation order.
inline void sort_points(std::vector<CriticalPoint>& points) {
  std::sort(points.begin(), points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              if (a.value != b.value) return a.value > b.value;
              return lex_less(a.direction, b.direction);
            });
}

inline std::vector<CriticalPoint> dedupe_points(
    std::vector<CriticalPoint> candidates, double dedupe_angle) {
  // Ties keep the smaller Lagrange residual.
  std::sort(candidates.begin(), candidates.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              return a.residual < b.residual;
            });
  std::vector<CriticalPoint> unique;
  for (const CriticalPoint& c : candidates) {
    bool duplicate = false;
    for (const CriticalPoint& u : unique) {
      if (angular_distance(c.direction, u.direction) <= dedupe_angle) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) unique.push_back(c);
  }
  sort_points(unique);
  return unique;
}

}  // namespace detail

/// Multistart solve of grad p(x) = lambda x on |x| = 1.
inline CriticalPointSet critical_points(
    const TrisymPolynomial& poly,
    const CriticalPointOptions& opts = CriticalPointOptions{}) {
  if (poly.n < 1) {
    throw std::invalid_argument("critical_points: polynomial degree must be >= 1");
  }
  if (is_constant(poly, opts.constant_tol)) {
    return {true, {}};
  }

  std::vector<CriticalPoint> candidates;
  for (const Eigen::Vector3d& start : fibonacci_sphere(opts.starts)) {
    if (auto point = detail::newton_polish(poly, start, opts)) {
      candidates.push_back(*point);
    }
  }
  if (candidates.empty()) {
    throw NumericalFailure("critical_points: no start converged");
  }
  return {false, detail::dedupe_points(std::move(candidates),
                                       opts.dedupe_angle)};
}

/// Global maxima: critical points of maximum (or degenerate) kind within
/// value_tol of the top value, cross-validated against a dense grid scan.
inline MaximaSet global_maxima(
    const TrisymPolynomial& poly, double value_tol = 1e-8,
    const CriticalPointOptions& opts = CriticalPointOptions{}) {
  CriticalPointSet set = critical_points(poly, opts);
  MaximaSet maxima;
  if (set.constant_polynomial) {
    maxima.constant_polynomial = true;
    return maxima;
  }

  const auto collect = [&](const std::vector<CriticalPoint>& points) {
    double top = -std::numeric_limits<double>::infinity();
    for (const CriticalPoint& p : points) top = std::max(top, p.value);
    std::vector<CriticalPoint> out;
    for (const CriticalPoint& p : points) {
      const bool max_like = p.kind == CriticalKind::Maximum ||
                            p.kind == CriticalKind::Degenerate;
      if (max_like && p.value >= top - value_tol * (1.0 + std::abs(top))) {
        out.push_back(p);
      }
    }
    return std::pair{top, out};
  };

  auto [top, points] = collect(set.points);

  // A grid node beating every polished critical value means multistart
  // missed the global maximum; retry once from the offending node.
  const auto grid_max = [&]() {
    double best = -std::numeric_limits<double>::infinity();
    Eigen::Vector3d arg = Eigen::Vector3d::UnitX();
    for (const Eigen::Vector3d& node : fibonacci_sphere(opts.dense_grid)) {
      const double value = evaluate(poly, node);
      if (value > best) {
        best = value;
        arg = node;
      }
    }
    return std::pair{best, arg};
  };

  auto [grid_best, grid_arg] = grid_max();
  if (grid_best > top + value_tol * (1.0 + std::abs(top))) {
    if (auto rescue = detail::newton_polish(poly, grid_arg, opts)) {
      set.points.push_back(*rescue);
      set.points = detail::dedupe_points(std::move(set.points),
                                         opts.dedupe_angle);
      std::tie(top, points) = collect(set.points);
    }
    if (grid_best > top + value_tol * (1.0 + std::abs(top))) {
      throw NumericalFailure(
          "global_maxima: dense grid exceeds polished maxima, grid " +
          std::to_string(grid_best) + " vs " + std::to_string(top));
    }
  }
  if (points.empty()) {
    throw NumericalFailure("global_maxima: no maximum-like critical point");
  }

  maxima.points = std::move(points);
  maxima.max_value = top;
  maxima.degenerate_locus = maxima.points.size() >= 8;
  return maxima;
}

}  // namespace trisym
