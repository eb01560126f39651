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
 * @brief Pfaffian of a real antisymmetric matrix.
 *
 * Parlett-Reid skew-symmetric elimination with partial pivoting, O(n^3).
 * Satisfies Pf(A)^2 = det(A); on constant 2-forms it evaluates top wedge
 * powers over linear cycles exactly.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trisym {

/// Pf(A) for antisymmetric A of even dimension. The input must be
/// antisymmetric to 1e-10 in max norm. Taken by value: the elimination
/// works in place on the copy.
inline double pfaffian(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) {
    throw std::invalid_argument("pfaffian: matrix must be square");
  }
  if (n % 2 != 0) {
    throw std::invalid_argument("pfaffian: dimension must be even, got " +
                                std::to_string(n));
  }
  if (n == 0) return 1.0;
  const double skew = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (!(skew < 1e-10)) {
    throw std::invalid_argument(
        "pfaffian: matrix is not antisymmetric, ||A + A^T|| = " +
        std::to_string(skew));
  }

  double pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // Pivot on the largest entry of column k below the diagonal.
    Eigen::Index kp = k + 1;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(kp, k))) kp = i;
    }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    const double pivot = a(k, k + 1);
    if (pivot == 0.0) return 0.0;  // whole column annihilated: Pf vanishes
    pf *= pivot;
    const Eigen::Index rest = n - k - 2;
    if (rest > 0) {
      const Eigen::VectorXd tau = a.row(k).segment(k + 2, rest) / pivot;
      const Eigen::VectorXd col = a.col(k + 1).segment(k + 2, rest);
      a.block(k + 2, k + 2, rest, rest) +=
          tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

}  // namespace trisym
