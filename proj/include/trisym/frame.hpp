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
 * @brief Quaternionic frames on flat R^{4m}.
 *
 * A frame bundles a flat metric with three endomorphisms I, J, K obeying
 * the quaternion relations I^2 = J^2 = K^2 = -Id, IJ = K, each compatible
 * with the metric (L^T g L = g). Unit combinations a I + b J + c K sweep
 * the two-sphere of induced complex structures; the associated Kahler
 * forms are the integrands of every area computation downstream.
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trisym/errors.hpp"

namespace trisym {

/// Flat quaternionic frame: metric plus the endomorphism triple on R^{4m}.
struct QuaternionicFrame {
  int m = 0;    ///< quaternionic dimension
  int dim = 0;  ///< 4m
  Eigen::MatrixXd metric;
  Eigen::MatrixXd I, J, K;
};

/// A point of the twistor sphere together with its matrix a I + b J + c K.
struct InducedStructure {
  Eigen::Vector3d direction;
  Eigen::MatrixXd matrix;
};

/// Max-norm residual of every frame relation, plus the metric eigenvalue
/// floor. `pass` is the conjunction at the requested tolerance.
struct FrameCheck {
  double i_squared = 0.0;   ///< ||I^2 + Id||
  double j_squared = 0.0;   ///< ||J^2 + Id||
  double k_squared = 0.0;   ///< ||K^2 + Id||
  double ij_minus_k = 0.0;  ///< ||IJ - K||
  double metric_i = 0.0;    ///< ||I^T g I - g||
  double metric_j = 0.0;
  double metric_k = 0.0;
  double metric_symmetry = 0.0;
  double metric_min_eigenvalue = 0.0;
  bool pass = false;

  double worst_residual() const {
    return std::max({i_squared, j_squared, k_squared, ij_minus_k, metric_i,
                     metric_j, metric_k, metric_symmetry});
  }
};

namespace detail {

// 4x4 blocks of left quaternion multiplication on the basis (e0,e1,e2,e3).
inline Eigen::Matrix4d quaternion_unit_block(int which) {
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  switch (which) {
    case 0:  // I: e0->e1, e1->-e0, e2->e3, e3->-e2
      b(1, 0) = 1.0; b(0, 1) = -1.0; b(3, 2) = 1.0; b(2, 3) = -1.0;
      break;
    case 1:  // J: e0->e2, e2->-e0, e1->-e3, e3->e1
      b(2, 0) = 1.0; b(0, 2) = -1.0; b(3, 1) = -1.0; b(1, 3) = 1.0;
      break;
    default:  // K: e0->e3, e3->-e0, e1->e2, e2->-e1
      b(3, 0) = 1.0; b(0, 3) = -1.0; b(2, 1) = 1.0; b(1, 2) = -1.0;
      break;
  }
  return b;
}

inline double max_abs(const Eigen::MatrixXd& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace detail

/// Canonical flat model: identity metric, I/J/K block-diagonal with m
/// copies of the left-multiplication blocks. All relations hold exactly.
inline QuaternionicFrame standard_frame(int m) {
  if (m < 1) {
    throw std::invalid_argument("standard_frame: m must be >= 1, got " +
                                std::to_string(m));
  }
  const int dim = 4 * m;
  QuaternionicFrame frame;
  frame.m = m;
  frame.dim = dim;
  frame.metric = Eigen::MatrixXd::Identity(dim, dim);
  frame.I = Eigen::MatrixXd::Zero(dim, dim);
  frame.J = Eigen::MatrixXd::Zero(dim, dim);
  frame.K = Eigen::MatrixXd::Zero(dim, dim);
  for (int b = 0; b < m; ++b) {
    frame.I.block<4, 4>(4 * b, 4 * b) = detail::quaternion_unit_block(0);
    frame.J.block<4, 4>(4 * b, 4 * b) = detail::quaternion_unit_block(1);
    frame.K.block<4, 4>(4 * b, 4 * b) = detail::quaternion_unit_block(2);
  }
  return frame;
}

/// Reports the max-norm residual of each quaternion and compatibility
/// relation; passes iff all are below `tol` and the metric is symmetric
/// positive-definite.
inline FrameCheck verify_frame(const QuaternionicFrame& frame, double tol) {
  const int dim = frame.dim;
  const auto square_of = [dim](const Eigen::MatrixXd& a) {
    return a.rows() == dim && a.cols() == dim;
  };
  if (dim <= 0 || dim != 4 * frame.m || !square_of(frame.metric) ||
      !square_of(frame.I) || !square_of(frame.J) || !square_of(frame.K)) {
    throw std::invalid_argument("verify_frame: inconsistent dimensions");
  }

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  FrameCheck check;
  check.i_squared = detail::max_abs(frame.I * frame.I + id);
  check.j_squared = detail::max_abs(frame.J * frame.J + id);
  check.k_squared = detail::max_abs(frame.K * frame.K + id);
  check.ij_minus_k = detail::max_abs(frame.I * frame.J - frame.K);
  check.metric_i =
      detail::max_abs(frame.I.transpose() * frame.metric * frame.I - frame.metric);
  check.metric_j =
      detail::max_abs(frame.J.transpose() * frame.metric * frame.J - frame.metric);
  check.metric_k =
      detail::max_abs(frame.K.transpose() * frame.metric * frame.K - frame.metric);
  check.metric_symmetry = detail::max_abs(frame.metric - frame.metric.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
      0.5 * (frame.metric + frame.metric.transpose()));
  check.metric_min_eigenvalue = eig.eigenvalues().minCoeff();

  check.pass = check.worst_residual() < tol && check.metric_min_eigenvalue > 0.0;
  return check;
}

/// Assembles a frame from explicit matrices and validates it.
inline QuaternionicFrame make_frame(const Eigen::MatrixXd& metric,
                                    const Eigen::MatrixXd& I,
                                    const Eigen::MatrixXd& J,
                                    const Eigen::MatrixXd& K,
                                    double tol = 1e-9) {
  QuaternionicFrame frame;
  if (metric.rows() != metric.cols() || metric.rows() % 4 != 0 ||
      metric.rows() == 0) {
    throw std::invalid_argument("make_frame: metric must be 4m x 4m");
  }
  frame.dim = static_cast<int>(metric.rows());
  frame.m = frame.dim / 4;
  frame.metric = metric;
  frame.I = I;
  frame.J = J;
  frame.K = K;
  const FrameCheck check = verify_frame(frame, tol);
  if (!check.pass) {
    throw std::invalid_argument(
        "make_frame: frame relations violated, worst residual " +
        std::to_string(check.worst_residual()));
  }
  return frame;
}

/// L = a I + b J + c K for unit (a,b,c). Inputs within 1e-9 of unit norm
/// are renormalized; anything else is rejected.
inline InducedStructure induced_structure(const QuaternionicFrame& frame,
                                          const Eigen::Vector3d& direction) {
  const double norm = direction.norm();
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw std::invalid_argument(
        "induced_structure: direction must be unit to 1e-9, |d| = " +
        std::to_string(norm));
  }
  InducedStructure s;
  s.direction = direction / norm;
  s.matrix = s.direction[0] * frame.I + s.direction[1] * frame.J +
             s.direction[2] * frame.K;
  return s;
}

/// Kahler form matrix W with W(u,v) = g(L u, e_v) for L = a I + b J + c K.
/// Defined for any real coefficient vector; exactly linear in (a,b,c) by
/// construction. For unit directions W equals L^T g.
inline Eigen::MatrixXd kahler_form(const QuaternionicFrame& frame,
                                   const Eigen::Vector3d& coefficients) {
  const Eigen::MatrixXd w_i = frame.I.transpose() * frame.metric;
  const Eigen::MatrixXd w_j = frame.J.transpose() * frame.metric;
  const Eigen::MatrixXd w_k = frame.K.transpose() * frame.metric;
  return coefficients[0] * w_i + coefficients[1] * w_j + coefficients[2] * w_k;
}

inline Eigen::MatrixXd kahler_form(const QuaternionicFrame& frame,
                                   const InducedStructure& structure) {
  return kahler_form(frame, structure.direction);
}

/// Transports the endomorphism triple by a rotation of the twistor sphere:
/// the new frame's structure at x equals the old one at R^T x.
inline QuaternionicFrame rotate_frame(const QuaternionicFrame& frame,
                                      const Eigen::Matrix3d& rotation) {
  const double orth =
      (rotation.transpose() * rotation - Eigen::Matrix3d::Identity())
          .cwiseAbs()
          .maxCoeff();
  const double det = rotation.determinant();
  if (orth > 1e-9 || std::abs(det - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "rotate_frame: matrix is not a rotation (orthogonality residual " +
        std::to_string(orth) + ", det " + std::to_string(det) + ")");
  }
  QuaternionicFrame out;
  out.m = frame.m;
  out.dim = frame.dim;
  out.metric = frame.metric;
  out.I = rotation(0, 0) * frame.I + rotation(0, 1) * frame.J +
          rotation(0, 2) * frame.K;
  out.J = rotation(1, 0) * frame.I + rotation(1, 1) * frame.J +
          rotation(1, 2) * frame.K;
  out.K = rotation(2, 0) * frame.I + rotation(2, 1) * frame.J +
          rotation(2, 2) * frame.K;
  return out;
}

}  // namespace trisym
