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
 * @brief Homogeneous trivariate polynomials in the sphere coordinates
 * (a, b, c), the representation of the trisymplectic volume function.
 *
 * Coefficients are stored over the monomials a^p b^q c^r, p + q + r = n,
 * in lexicographic order with a > b > c (leading monomial a^n first).
 * Includes evaluation with derivatives, linear-change-of-variables
 * composition, exact sphere quadrature statistics and the constancy test.
 */

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisym/errors.hpp"

namespace trisym {

using Exponents = std::array<int, 3>;

/// Monomial exponent triples of total degree n, lexicographic with
/// a > b > c: (n,0,0), (n-1,1,0), (n-1,0,1), ..., (0,0,n).
inline std::vector<Exponents> monomial_exponents(int degree) {
  if (degree < 0) {
    throw std::invalid_argument("monomial_exponents: negative degree");
  }
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2));
  for (int p = degree; p >= 0; --p) {
    for (int q = degree - p; q >= 0; --q) {
      out.push_back({p, q, degree - p - q});
    }
  }
  return out;
}

inline int monomial_count(int degree) {
  return (degree + 1) * (degree + 2) / 2;
}

/// Position of a^p b^q c^r in the monomial order of its degree.
inline int monomial_index(int degree, int p, int q) {
  // Monomials with first exponent > p come first, then those sharing p
  // with second exponent > q.
  const int d = degree - p;
  return d * (d + 1) / 2 + (d - q);
}

inline double multinomial_coefficient(int n, int p, int q, int r) {
  double value = 1.0;
  int k = 0;
  for (int i = 1; i <= p; ++i) value = value * (++k) / i;
  for (int i = 1; i <= q; ++i) value = value * (++k) / i;
  for (int i = 1; i <= r; ++i) value = value * (++k) / i;
  (void)n;
  return value;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Homogeneous degree-n polynomial in (a, b, c); the trisymplectic volume
/// function of a cycle when produced by compute_polynomial.
struct TrisymPolynomial {
  int n = 0;               ///< degree = complex dimension of the source cycle
  Eigen::VectorXd coeffs;  ///< one per monomial, lexicographic order
  std::string provenance;  ///< identifier of the source cycle, may be empty

  double coeff(int p, int q) const { return coeffs[monomial_index(n, p, q)]; }
};

inline TrisymPolynomial zero_polynomial(int degree, std::string provenance = "") {
  TrisymPolynomial poly;
  poly.n = degree;
  poly.coeffs = Eigen::VectorXd::Zero(monomial_count(degree));
  poly.provenance = std::move(provenance);
  return poly;
}

namespace detail {

inline double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace detail

inline double evaluate(const TrisymPolynomial& poly, const Eigen::Vector3d& x) {
  double sum = 0.0;
  int idx = 0;
  for (const auto& [p, q, r] : monomial_exponents(poly.n)) {
    const double c = poly.coeffs[idx++];
    if (c != 0.0) {
      sum += c * detail::ipow(x[0], p) * detail::ipow(x[1], q) *
             detail::ipow(x[2], r);
    }
  }
  return sum;
}

inline Eigen::Vector3d gradient(const TrisymPolynomial& poly,
                                const Eigen::Vector3d& x) {
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  int idx = 0;
  for (const auto& [p, q, r] : monomial_exponents(poly.n)) {
    const double c = poly.coeffs[idx++];
    if (c == 0.0) continue;
    if (p > 0)
      g[0] += c * p * detail::ipow(x[0], p - 1) * detail::ipow(x[1], q) *
              detail::ipow(x[2], r);
    if (q > 0)
      g[1] += c * q * detail::ipow(x[0], p) * detail::ipow(x[1], q - 1) *
              detail::ipow(x[2], r);
    if (r > 0)
      g[2] += c * r * detail::ipow(x[0], p) * detail::ipow(x[1], q) *
              detail::ipow(x[2], r - 1);
  }
  return g;
}

inline Eigen::Matrix3d hessian(const TrisymPolynomial& poly,
                               const Eigen::Vector3d& x) {
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  int idx = 0;
  for (const auto& [p, q, r] : monomial_exponents(poly.n)) {
    const double c = poly.coeffs[idx++];
    if (c == 0.0) continue;
    const std::array<int, 3> e = {p, q, r};
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        std::array<int, 3> d = e;
        double factor = c;
        if (i == j) {
          if (e[i] < 2) continue;
          factor *= e[i] * (e[i] - 1);
          d[i] -= 2;
        } else {
          if (e[i] < 1 || e[j] < 1) continue;
          factor *= e[i] * e[j];
          d[i] -= 1;
          d[j] -= 1;
        }
        const double term = factor * detail::ipow(x[0], d[0]) *
                            detail::ipow(x[1], d[1]) * detail::ipow(x[2], d[2]);
        h(i, j) += term;
        if (i != j) h(j, i) += term;
      }
    }
  }
  return h;
}

inline TrisymPolynomial multiply(const TrisymPolynomial& lhs,
                                 const TrisymPolynomial& rhs) {
  TrisymPolynomial out = zero_polynomial(lhs.n + rhs.n);
  const auto le = monomial_exponents(lhs.n);
  const auto re = monomial_exponents(rhs.n);
  for (std::size_t i = 0; i < le.size(); ++i) {
    if (lhs.coeffs[static_cast<int>(i)] == 0.0) continue;
    for (std::size_t j = 0; j < re.size(); ++j) {
      const double c =
          lhs.coeffs[static_cast<int>(i)] * rhs.coeffs[static_cast<int>(j)];
      if (c == 0.0) continue;
      out.coeffs[monomial_index(out.n, le[i][0] + re[j][0],
                                le[i][1] + re[j][1])] += c;
    }
  }
  return out;
}

/// Coefficients of x -> p(M x); same degree, used for rotation transport.
inline TrisymPolynomial compose_linear(const TrisymPolynomial& poly,
                                       const Eigen::Matrix3d& map) {
  TrisymPolynomial acc = zero_polynomial(poly.n, poly.provenance);
  std::array<TrisymPolynomial, 3> rows;
  for (int i = 0; i < 3; ++i) {
    rows[i] = zero_polynomial(1);
    rows[i].coeffs << map(i, 0), map(i, 1), map(i, 2);
  }
  int idx = 0;
  for (const auto& [p, q, r] : monomial_exponents(poly.n)) {
    const double c = poly.coeffs[idx++];
    if (c == 0.0) continue;
    TrisymPolynomial term = zero_polynomial(0);
    term.coeffs[0] = c;
    for (int i = 0; i < p; ++i) term = multiply(term, rows[0]);
    for (int i = 0; i < q; ++i) term = multiply(term, rows[1]);
    for (int i = 0; i < r; ++i) term = multiply(term, rows[2]);
    acc.coeffs += term.coeffs;
  }
  return acc;
}

/// Gauss-Legendre nodes and weights on [-1, 1], Newton on the recurrence.
inline void gauss_legendre(int count, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  nodes.assign(count, 0.0);
  weights.assign(count, 0.0);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[count - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[count - 1 - i] = w;
  }
}

/// Mean and deviation statistics of the polynomial over the unit sphere.
struct SphereStats {
  double mean = 0.0;           ///< (1/4pi) surface integral of p
  double max_deviation = 0.0;  ///< max |p - mean| over rule nodes
  double l2_deviation = 0.0;   ///< sqrt((1/4pi) surface integral of (p-mean)^2)
};

/// Product quadrature: Gauss-Legendre in the polar cosine, uniform in
/// azimuth. `rule_size` is the polar node count; it must be at least
/// n + 1 so the rule is exact through degree 2n, the degree of
/// (p - mean)^2 after azimuthal averaging. rule_size 0 picks n + 2.
inline SphereStats sphere_stats(const TrisymPolynomial& poly,
                                int rule_size = 0) {
  const int degree = poly.n;
  if (rule_size == 0) rule_size = degree + 2;
  if (rule_size < degree + 1) {
    throw std::invalid_argument(
        "sphere_stats: rule_size " + std::to_string(rule_size) +
        " too small for degree " + std::to_string(degree));
  }
  const int azimuth_count = 2 * rule_size + 1;
  std::vector<double> nodes, weights;
  gauss_legendre(rule_size, nodes, weights);

  std::vector<Eigen::Vector3d> points;
  std::vector<double> point_weights;  // sums to 4 pi
  points.reserve(static_cast<std::size_t>(rule_size) * azimuth_count);
  for (int i = 0; i < rule_size; ++i) {
    const double z = nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < azimuth_count; ++j) {
      const double phi = 2.0 * M_PI * j / azimuth_count;
      points.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
      point_weights.push_back(weights[i] * 2.0 * M_PI / azimuth_count);
    }
  }

  SphereStats stats;
  double integral = 0.0;
  std::vector<double> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    values[k] = evaluate(poly, points[k]);
    integral += point_weights[k] * values[k];
  }
  stats.mean = integral / (4.0 * M_PI);

  double sq = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double d = values[k] - stats.mean;
    stats.max_deviation = std::max(stats.max_deviation, std::abs(d));
    sq += point_weights[k] * d * d;
  }
  stats.l2_deviation = std::sqrt(std::max(0.0, sq) / (4.0 * M_PI));
  return stats;
}

/// Constancy over the sphere, relative to max(1, |mean|). An odd-degree
/// polynomial constant on the sphere is identically zero, so for odd n
/// the mean must vanish below tol as well.
inline bool is_constant(const TrisymPolynomial& poly, double tol = 1e-8) {
  const SphereStats stats = sphere_stats(poly);
  const double scale = std::max(1.0, std::abs(stats.mean));
  bool constant = stats.l2_deviation < tol * scale &&
                  stats.max_deviation < tol * scale;
  if (poly.n % 2 == 1) {
    constant = constant && std::abs(stats.mean) < tol;
  }
  return constant;
}

/// Monomial name like "a^2 b c": serialization order is the coefficient
/// storage order.
inline std::string monomial_name(const Exponents& e) {
  const char* vars = "abc";
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    if (!out.empty()) out += ' ';
    out += vars[i];
    if (e[static_cast<std::size_t>(i)] > 1) {
      out += '^';
      out += std::to_string(e[static_cast<std::size_t>(i)]);
    }
  }
  if (out.empty()) out = "1";
  return out;
}

}  // namespace trisym
