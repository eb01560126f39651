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
 * @brief Compact cycles in flat tori and their Riemannian and symplectic
 * areas.
 *
 * Linear subtori integrate constant forms exactly: the top wedge power of
 * a constant 2-form over the unit parameter cube is n! times a Pfaffian,
 * and the Riemannian area is a Gram determinant. Parametrized cycles use
 * tensor-product trapezoidal quadrature on the periodic grid, which is
 * spectrally accurate for smooth periodic embeddings.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trisym/errors.hpp"
#include "trisym/frame.hpp"
#include "trisym/pfaffian.hpp"
#include "trisym/polynomial.hpp"
#include "trisym/sphere_grid.hpp"

namespace trisym {

/// Linear subtorus spanned by 2n lattice vectors; orientation is the
/// listed order.
struct LinearCycle {
  int n = 0;  ///< complex dimension (vector count / 2)
  std::vector<Eigen::VectorXd> vectors;

  Eigen::MatrixXd basis_matrix() const {
    Eigen::MatrixXd b(vectors.empty() ? 0 : vectors.front().size(),
                      static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      b.col(static_cast<Eigen::Index>(i)) = vectors[i];
    }
    return b;
  }
};

/// Smooth periodic embedding of the parameter torus [0,1)^{2n} with an
/// analytic Jacobian, integrated on a per-axis sample grid.
struct ParametrizedCycle {
  int n = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> position;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
  std::vector<int> grid;  ///< sample counts, one per parameter axis
};

using Cycle = std::variant<LinearCycle, ParametrizedCycle>;

inline LinearCycle make_linear_cycle(std::vector<Eigen::VectorXd> vectors) {
  if (vectors.size() < 2 || vectors.size() % 2 != 0) {
    throw std::invalid_argument(
        "make_linear_cycle: need an even number (>= 2) of vectors, got " +
        std::to_string(vectors.size()));
  }
  const Eigen::Index dim = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw std::invalid_argument("make_linear_cycle: mixed vector dimensions");
    }
  }
  LinearCycle cycle;
  cycle.n = static_cast<int>(vectors.size() / 2);
  cycle.vectors = std::move(vectors);
  const Eigen::MatrixXd b = cycle.basis_matrix();
  const double gram_det = (b.transpose() * b).determinant();
  if (!(gram_det > 1e-12)) {
    throw std::invalid_argument(
        "make_linear_cycle: generators are (nearly) dependent, Gram "
        "determinant " +
        std::to_string(gram_det));
  }
  return cycle;
}

namespace detail {

inline Eigen::VectorXd fixed_probe_point(int axes, int salt) {
  Eigen::VectorXd t(axes);
  for (int i = 0; i < axes; ++i) {
    t[i] = std::fmod(0.137 + 0.41 * i + 0.29 * salt, 1.0);
  }
  return t;
}

}  // namespace detail

/// Validates that the map descends to the torus: position differences
/// across each seam are a constant translation and the Jacobian is
/// periodic, both to 1e-9.
inline ParametrizedCycle make_parametrized_cycle(
    int n, std::function<Eigen::VectorXd(const Eigen::VectorXd&)> position,
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian,
    std::vector<int> grid) {
  if (n < 1) {
    throw std::invalid_argument("make_parametrized_cycle: n must be >= 1");
  }
  const int axes = 2 * n;
  if (static_cast<int>(grid.size()) == 1) {
    grid.assign(static_cast<std::size_t>(axes), grid.front());
  }
  if (static_cast<int>(grid.size()) != axes) {
    throw std::invalid_argument(
        "make_parametrized_cycle: grid needs one sample count per axis");
  }
  for (int g : grid) {
    if (g < 2) {
      throw std::invalid_argument(
          "make_parametrized_cycle: grid must be >= 2 per axis");
    }
  }
  for (int axis = 0; axis < axes; ++axis) {
    Eigen::VectorXd step = Eigen::VectorXd::Zero(axes);
    step[axis] = 1.0;
    const Eigen::VectorXd t0 = detail::fixed_probe_point(axes, axis);
    const Eigen::VectorXd t1 = detail::fixed_probe_point(axes, axis + 7);
    const Eigen::VectorXd d0 = position(t0 + step) - position(t0);
    const Eigen::VectorXd d1 = position(t1 + step) - position(t1);
    const double translation = (d0 - d1).cwiseAbs().maxCoeff();
    const double jac_seam =
        (jacobian(t0 + step) - jacobian(t0)).cwiseAbs().maxCoeff();
    if (translation > 1e-9 || jac_seam > 1e-9) {
      throw std::invalid_argument(
          "make_parametrized_cycle: map is not periodic at the seam of axis " +
          std::to_string(axis));
    }
  }
  ParametrizedCycle cycle;
  cycle.n = n;
  cycle.position = std::move(position);
  cycle.jacobian = std::move(jacobian);
  cycle.grid = std::move(grid);
  return cycle;
}

/// A linear cycle re-expressed as a parametrized one; quadrature oracle
/// for the exact Pfaffian route.
inline ParametrizedCycle flat_embed_cycle(std::vector<Eigen::VectorXd> vectors,
                                          std::vector<int> grid) {
  const LinearCycle base = make_linear_cycle(std::move(vectors));
  const Eigen::MatrixXd basis = base.basis_matrix();
  return make_parametrized_cycle(
      base.n, [basis](const Eigen::VectorXd& t) { return basis * t; },
      [basis](const Eigen::VectorXd&) { return basis; }, std::move(grid));
}

/// Flat 2-torus along two base axes plus an epsilon sin/cos ripple in two
/// transverse axes; a genuinely non-constant-form integrand.
inline ParametrizedCycle wavy_torus_cycle(int dim, double epsilon,
                                          std::vector<int> grid,
                                          int base0 = 0, int base1 = 1,
                                          int ripple0 = 2, int ripple1 = 3) {
  if (dim < 4 || base0 == base1 || ripple0 == ripple1 ||
      std::max({base0, base1, ripple0, ripple1}) >= dim ||
      std::min({base0, base1, ripple0, ripple1}) < 0) {
    throw std::invalid_argument("wavy_torus_cycle: bad axis configuration");
  }
  const double two_pi = 2.0 * M_PI;
  auto position = [=](const Eigen::VectorXd& t) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
    x[base0] = t[0];
    x[base1] = t[1];
    x[ripple0] += epsilon * std::sin(two_pi * t[0]);
    x[ripple1] += epsilon * std::cos(two_pi * t[1]);
    return x;
  };
  auto jacobian = [=](const Eigen::VectorXd& t) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim, 2);
    j(base0, 0) = 1.0;
    j(ripple0, 0) = epsilon * two_pi * std::cos(two_pi * t[0]);
    j(base1, 1) = 1.0;
    j(ripple1, 1) = -epsilon * two_pi * std::sin(two_pi * t[1]);
    return j;
  };
  return make_parametrized_cycle(1, position, jacobian, std::move(grid));
}

inline int complex_dimension(const LinearCycle& cycle) { return cycle.n; }
inline int complex_dimension(const ParametrizedCycle& cycle) { return cycle.n; }
inline int complex_dimension(const Cycle& cycle) {
  return std::visit([](const auto& c) { return c.n; }, cycle);
}

namespace detail {

inline void check_cycle_frame(Eigen::Index cycle_dim,
                              const QuaternionicFrame& frame) {
  if (cycle_dim != frame.dim) {
    throw std::invalid_argument(
        "cycle/frame dimension mismatch: " + std::to_string(cycle_dim) +
        " vs " + std::to_string(frame.dim));
  }
}

inline double gram_area(const Eigen::MatrixXd& basis,
                        const Eigen::MatrixXd& metric) {
  const Eigen::MatrixXd gram = basis.transpose() * metric * basis;
  const double det = gram.determinant();
  if (!(det > 1e-12)) {
    throw DegenerateCycleError("degenerate tangent data, Gram determinant " +
                               std::to_string(det));
  }
  return std::sqrt(det);
}

/// Antisymmetric restriction of a 2-form to a tangent basis; built
/// upper-triangle-first so antisymmetry is exact.
inline Eigen::MatrixXd restrict_form(const Eigen::MatrixXd& form,
                                     const Eigen::MatrixXd& basis) {
  const Eigen::Index k = basis.cols();
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(k, k);
  const Eigen::MatrixXd wb = form * basis;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double value = basis.col(i).dot(wb.col(j));
      omega(i, j) = value;
      omega(j, i) = -value;
    }
  }
  return omega;
}

/// Visits every node of the tensor grid with the node's parameter vector.
template <typename Fn>
void for_each_grid_node(const std::vector<int>& grid, Fn&& fn) {
  const int axes = static_cast<int>(grid.size());
  std::vector<int> index(static_cast<std::size_t>(axes), 0);
  Eigen::VectorXd t(axes);
  while (true) {
    for (int a = 0; a < axes; ++a) {
      t[a] = static_cast<double>(index[static_cast<std::size_t>(a)]) /
             grid[static_cast<std::size_t>(a)];
    }
    fn(static_cast<const Eigen::VectorXd&>(t));
    int a = 0;
    for (; a < axes; ++a) {
      if (++index[static_cast<std::size_t>(a)] <
          grid[static_cast<std::size_t>(a)]) {
        break;
      }
      index[static_cast<std::size_t>(a)] = 0;
    }
    if (a == axes) break;
  }
}

inline double grid_cell_volume(const std::vector<int>& grid) {
  double volume = 1.0;
  for (int g : grid) volume /= g;
  return volume;
}

/// Generators in a canonical (lexicographic) column order plus the sign
/// of the permutation from the listed order. Evaluating the integrals on
/// the canonical basis makes their antisymmetry under generator swaps
/// exact in floating point, not just up to rounding.
inline std::pair<Eigen::MatrixXd, double> canonical_basis(
    const LinearCycle& cycle) {
  const auto& vectors = cycle.vectors;
  std::vector<int> order(vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Eigen::VectorXd& u = vectors[static_cast<std::size_t>(a)];
    const Eigen::VectorXd& v = vectors[static_cast<std::size_t>(b)];
    for (Eigen::Index k = 0; k < u.size(); ++k) {
      if (u[k] != v[k]) return u[k] < v[k];
    }
    return false;
  });
  int inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] > order[j]) ++inversions;
    }
  }
  Eigen::MatrixXd basis(vectors.front().size(),
                        static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    basis.col(static_cast<Eigen::Index>(i)) =
        vectors[static_cast<std::size_t>(order[i])];
  }
  return {std::move(basis), inversions % 2 == 0 ? 1.0 : -1.0};
}

}  // namespace detail

/// Riemannian area of the cycle: sqrt of the metric Gram determinant for
/// linear cycles, periodic trapezoidal quadrature of the area density for
/// parametrized ones.
inline double riemannian_area(const LinearCycle& cycle,
                              const QuaternionicFrame& frame) {
  detail::check_cycle_frame(cycle.vectors.front().size(), frame);
  return detail::gram_area(detail::canonical_basis(cycle).first, frame.metric);
}

inline double riemannian_area(const ParametrizedCycle& cycle,
                              const QuaternionicFrame& frame) {
  double sum = 0.0;
  detail::for_each_grid_node(cycle.grid, [&](const Eigen::VectorXd& t) {
    const Eigen::MatrixXd jac = cycle.jacobian(t);
    detail::check_cycle_frame(jac.rows(), frame);
    sum += detail::gram_area(jac, frame.metric);
  });
  return sum * detail::grid_cell_volume(cycle.grid);
}

/// Unnormalized integral of the n-th wedge power of the Kahler form for
/// an arbitrary real coefficient vector (homogeneous off-sphere
/// extension): n! Pf of the restricted form, exactly for linear cycles,
/// by quadrature otherwise.
inline double symplectic_area_raw(const LinearCycle& cycle,
                                  const QuaternionicFrame& frame,
                                  const Eigen::Vector3d& direction) {
  detail::check_cycle_frame(cycle.vectors.front().size(), frame);
  const Eigen::MatrixXd form = kahler_form(frame, direction);
  const auto [basis, sign] = detail::canonical_basis(cycle);
  const Eigen::MatrixXd omega = detail::restrict_form(form, basis);
  return sign * factorial(cycle.n) * pfaffian(omega);
}

inline double symplectic_area_raw(const ParametrizedCycle& cycle,
                                  const QuaternionicFrame& frame,
                                  const Eigen::Vector3d& direction) {
  const Eigen::MatrixXd form = kahler_form(frame, direction);
  const double n_fact = factorial(cycle.n);
  double sum = 0.0;
  detail::for_each_grid_node(cycle.grid, [&](const Eigen::VectorXd& t) {
    const Eigen::MatrixXd jac = cycle.jacobian(t);
    detail::check_cycle_frame(jac.rows(), frame);
    sum += n_fact * pfaffian(detail::restrict_form(form, jac));
  });
  return sum * detail::grid_cell_volume(cycle.grid);
}

/// Normalization constant c_n fixed by the contract V(I) = Area on the
/// reference complex cycle span{e0, I e0, e4, I e4, ...} with one complex
/// line per quaternionic block. If the frame is too small to host the
/// reference, a standard frame of quaternionic dimension n is used; the
/// constant does not depend on that choice. Evaluates to 1/n! under the
/// adopted conventions.
inline double calibrate_normalization(const QuaternionicFrame& frame, int n) {
  if (n < 1) {
    throw std::invalid_argument("calibrate_normalization: n must be >= 1");
  }
  QuaternionicFrame host;
  if (frame.m < n) host = standard_frame(n);
  const QuaternionicFrame& base = frame.m >= n ? frame : host;
  std::vector<Eigen::VectorXd> generators;
  generators.reserve(static_cast<std::size_t>(2 * n));
  for (int block = 0; block < n; ++block) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(base.dim);
    u[4 * block] = 1.0;
    generators.push_back(u);
    generators.push_back(base.I * u);
  }
  const LinearCycle reference = make_linear_cycle(std::move(generators));
  const double area = riemannian_area(reference, base);
  const double raw = symplectic_area_raw(reference, base, {1.0, 0.0, 0.0});
  if (raw == 0.0) {
    throw NumericalFailure(
        "calibrate_normalization: reference cycle has zero raw volume");
  }
  return area / raw;
}

/// Symplectic area V(a,b,c) = c_n times the raw integral. Defined for all
/// real coefficient vectors; restricted to unit directions it is the
/// trisymplectic volume function.
template <typename CycleT>
inline double symplectic_area(const CycleT& cycle,
                              const QuaternionicFrame& frame,
                              const Eigen::Vector3d& direction) {
  const double c_n = calibrate_normalization(frame, complex_dimension(cycle));
  return c_n * symplectic_area_raw(cycle, frame, direction);
}

/// Area_g(Z) - V_Z(L) for a unit direction. Nonnegative up to rounding;
/// a clearly negative gap violates the area inequality and can only be an
/// internal error, so it is raised rather than returned.
template <typename CycleT>
inline double wirtinger_gap(const CycleT& cycle, const QuaternionicFrame& frame,
                            const Eigen::Vector3d& direction) {
  const Eigen::Vector3d unit = induced_structure(frame, direction).direction;
  const double area = riemannian_area(cycle, frame);
  const double gap = area - symplectic_area(cycle, frame, unit);
  if (gap < -1e-9 * std::max(1.0, area)) {
    throw InconsistencyError("wirtinger_gap: negative gap " +
                             std::to_string(gap));
  }
  return gap;
}

/// Outcome of the tangent-space test for complex analyticity.
struct TangentTest {
  bool pass = false;
  double residual = 0.0;  ///< spectral norm of (Id - P) L P, max over nodes
};

namespace detail {

inline double projector_residual(const Eigen::MatrixXd& basis,
                                 const QuaternionicFrame& frame,
                                 const Eigen::MatrixXd& structure) {
  const Eigen::MatrixXd gram = basis.transpose() * frame.metric * basis;
  if (!(gram.determinant() > 1e-12)) {
    throw DegenerateCycleError(
        "tangent test: degenerate tangent space, Gram determinant " +
        std::to_string(gram.determinant()));
  }
  // g-orthogonal projector onto the tangent space.
  const Eigen::MatrixXd projector =
      basis * gram.ldlt().solve(basis.transpose() * frame.metric);
  const Eigen::MatrixXd id =
      Eigen::MatrixXd::Identity(frame.dim, frame.dim);
  const Eigen::MatrixXd off = (id - projector) * structure * projector;
  return off.jacobiSvd().singularValues()(0);
}

}  // namespace detail

/// Tangent-space test: Z is complex analytic at L iff L maps the tangent
/// space into itself, measured by the projector residual.
inline TangentTest is_complex_analytic(const LinearCycle& cycle,
                                       const QuaternionicFrame& frame,
                                       const Eigen::Vector3d& direction,
                                       double tol = 1e-8) {
  const InducedStructure structure = induced_structure(frame, direction);
  const double residual =
      detail::projector_residual(cycle.basis_matrix(), frame, structure.matrix);
  return {residual < tol, residual};
}

inline TangentTest is_complex_analytic(const ParametrizedCycle& cycle,
                                       const QuaternionicFrame& frame,
                                       const Eigen::Vector3d& direction,
                                       double tol = 1e-8) {
  const InducedStructure structure = induced_structure(frame, direction);
  double residual = 0.0;
  detail::for_each_grid_node(cycle.grid, [&](const Eigen::VectorXd& t) {
    residual = std::max(residual, detail::projector_residual(
                                      cycle.jacobian(t), frame,
                                      structure.matrix));
  });
  return {residual < tol, residual};
}

/// Invariance under I and J implies invariance under K = IJ and under
/// every a I + b J + c K, so two tangent tests decide trianalyticity.
template <typename CycleT>
inline bool is_trianalytic_pointwise(const CycleT& cycle,
                                     const QuaternionicFrame& frame,
                                     double tol = 1e-8) {
  return is_complex_analytic(cycle, frame, {1.0, 0.0, 0.0}, tol).pass &&
         is_complex_analytic(cycle, frame, {0.0, 1.0, 0.0}, tol).pass;
}

/// Mixed wedge integrals of the homology class: the coefficients of the
/// raw volume polynomial in the multinomial basis.
struct CycleHomClass {
  int n = 0;
  Eigen::VectorXd values;  ///< integral of w_I^p w_J^q w_K^r, monomial order
  double interpolation_residual = 0.0;
  double interpolation_condition = 0.0;

  double at(int p, int q) const { return values[monomial_index(n, p, q)]; }
};

/// Recovers the mixed integrals by sampling the raw volume at well-spread
/// directions and solving the multinomial system by least squares. The
/// node count is twice the coefficient count: minimal Fibonacci sets can
/// land nearly coplanar (3 nodes already do), oversampling keeps the
/// system conditioned for every degree.
template <typename CycleT>
inline CycleHomClass mixed_integrals(const CycleT& cycle,
                                     const QuaternionicFrame& frame) {
  const int n = complex_dimension(cycle);
  const int count = monomial_count(n);
  const int samples = 2 * count;
  const auto exponents = monomial_exponents(n);
  const auto nodes = fibonacci_sphere(samples);

  Eigen::MatrixXd system(samples, count);
  Eigen::VectorXd rhs(samples);
  for (int k = 0; k < samples; ++k) {
    const Eigen::Vector3d& d = nodes[static_cast<std::size_t>(k)];
    for (int j = 0; j < count; ++j) {
      const auto& [p, q, r] = exponents[static_cast<std::size_t>(j)];
      system(k, j) = multinomial_coefficient(n, p, q, r) *
                     detail::ipow(d[0], p) * detail::ipow(d[1], q) *
                     detail::ipow(d[2], r);
    }
    rhs[k] = symplectic_area_raw(cycle, frame, d);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      system, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(count - 1);
  const double condition = smin > 0.0 ? smax / smin
                                      : std::numeric_limits<double>::infinity();
  if (!(condition < 1e8)) {
    throw NumericalFailure(
        "mixed_integrals: interpolation system ill-conditioned, cond = " +
        std::to_string(condition));
  }

  CycleHomClass hom;
  hom.n = n;
  hom.values = svd.solve(rhs);
  hom.interpolation_condition = condition;
  hom.interpolation_residual =
      (system * hom.values - rhs).cwiseAbs().maxCoeff();
  return hom;
}

/// The trisymplectic volume function as an explicit polynomial:
/// coeff(p,q,r) = c_n * n!/(p! q! r!) * mixed integral.
template <typename CycleT>
inline TrisymPolynomial compute_polynomial(const CycleT& cycle,
                                           const QuaternionicFrame& frame,
                                           std::string provenance = "") {
  const CycleHomClass hom = mixed_integrals(cycle, frame);
  const double c_n = calibrate_normalization(frame, hom.n);
  TrisymPolynomial poly = zero_polynomial(hom.n, std::move(provenance));
  int idx = 0;
  for (const auto& [p, q, r] : monomial_exponents(hom.n)) {
    poly.coeffs[idx] =
        c_n * multinomial_coefficient(hom.n, p, q, r) * hom.values[idx];
    ++idx;
  }
  return poly;
}

// Variant dispatch.
inline double riemannian_area(const Cycle& cycle,
                              const QuaternionicFrame& frame) {
  return std::visit([&](const auto& c) { return riemannian_area(c, frame); },
                    cycle);
}
inline double symplectic_area_raw(const Cycle& cycle,
                                  const QuaternionicFrame& frame,
                                  const Eigen::Vector3d& direction) {
  return std::visit(
      [&](const auto& c) { return symplectic_area_raw(c, frame, direction); },
      cycle);
}
inline double symplectic_area(const Cycle& cycle,
                              const QuaternionicFrame& frame,
                              const Eigen::Vector3d& direction) {
  return std::visit(
      [&](const auto& c) { return symplectic_area(c, frame, direction); },
      cycle);
}
inline double wirtinger_gap(const Cycle& cycle, const QuaternionicFrame& frame,
                            const Eigen::Vector3d& direction) {
  return std::visit(
      [&](const auto& c) { return wirtinger_gap(c, frame, direction); }, cycle);
}
inline TangentTest is_complex_analytic(const Cycle& cycle,
                                       const QuaternionicFrame& frame,
                                       const Eigen::Vector3d& direction,
                                       double tol = 1e-8) {
  return std::visit(
      [&](const auto& c) {
        return is_complex_analytic(c, frame, direction, tol);
      },
      cycle);
}
inline bool is_trianalytic_pointwise(const Cycle& cycle,
                                     const QuaternionicFrame& frame,
                                     double tol = 1e-8) {
  return std::visit(
      [&](const auto& c) { return is_trianalytic_pointwise(c, frame, tol); },
      cycle);
}
inline CycleHomClass mixed_integrals(const Cycle& cycle,
                                     const QuaternionicFrame& frame) {
  return std::visit([&](const auto& c) { return mixed_integrals(c, frame); },
                    cycle);
}
inline TrisymPolynomial compute_polynomial(const Cycle& cycle,
                                           const QuaternionicFrame& frame,
                                           std::string provenance = "") {
  return std::visit(
      [&](const auto& c) {
        return compute_polynomial(c, frame, std::move(provenance));
      },
      cycle);
}

}  // namespace trisym
