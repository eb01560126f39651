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
 * @brief Text reports and the sphere-scan CSV.
 *
 * All floating-point evidence is printed at 17 significant digits so
 * reports round-trip bit-exactly; verdict lines use a compact rendering.
 * CSV output is bit-specified: header `index,a,b,c,V`, Fibonacci nodes in
 * index order, LF line endings.
 */

#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "trisym/genericity.hpp"
#include "trisym/polynomial.hpp"
#include "trisym/sphere_grid.hpp"

namespace trisym {

/// 17 significant digits, scientific; round-trips to the same double.
inline std::string fmt17(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", x);
  return buffer;
}

/// Compact rendering for verdict lines: 9 significant digits with
/// sub-rounding noise snapped to zero.
inline std::string fmt_compact(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return buffer;
}

inline std::string format_direction(const Eigen::Vector3d& d) {
  return "(" + fmt_compact(d[0]) + "," + fmt_compact(d[1]) + "," +
         fmt_compact(d[2]) + ")";
}

inline std::string format_classification(const Verdict& verdict) {
  std::string out = to_string(verdict.classification);
  if (verdict.classification == Classification::ComplexOnlyAt) {
    out += " [";
    for (std::size_t i = 0; i < verdict.directions.size(); ++i) {
      if (i > 0) out += ",";
      out += format_direction(verdict.directions[i]);
    }
    out += "]";
  }
  return out;
}

inline void write_polynomial(std::ostream& out, const TrisymPolynomial& poly) {
  int idx = 0;
  for (const Exponents& e : monomial_exponents(poly.n)) {
    out << "  " << monomial_name(e) << ": " << fmt17(poly.coeffs[idx++])
        << "\n";
  }
}

inline void write_verdict_report(std::ostream& out, const Verdict& verdict,
                                 const std::string& kind) {
  out << "cycle: " << verdict.cycle_id << "\n";
  out << "kind: " << kind << "\n";
  out << "n: " << verdict.polynomial.n << "\n";
  out << "riemannian_area: " << fmt17(verdict.area) << "\n";
  out << "polynomial:\n";
  write_polynomial(out, verdict.polynomial);
  out << "sphere_mean: " << fmt17(verdict.stats.mean) << "\n";
  out << "sphere_max_deviation: " << fmt17(verdict.stats.max_deviation)
      << "\n";
  out << "sphere_l2_deviation: " << fmt17(verdict.stats.l2_deviation) << "\n";
  out << "constant: " << (verdict.polynomial_constant ? "yes" : "no") << "\n";
  out << "tangent_residual_at_I: " << fmt17(verdict.tangent_residual_at_i)
      << "\n";
  if (verdict.polynomial_constant) {
    out << "maxima: none (constant polynomial)\n";
  } else {
    out << "maxima:" << (verdict.maxima.degenerate_locus
                             ? " (degenerate locus, sampled)"
                             : "")
        << "\n";
    for (const MaximumEvidence& ev : verdict.maxima_evidence) {
      out << "  direction " << format_direction(ev.point.direction)
          << " value " << fmt17(ev.point.value) << " wirtinger_gap "
          << fmt17(ev.gap) << " tangent_residual "
          << fmt17(ev.tangent_residual) << " kind "
          << to_string(ev.point.kind) << "\n";
    }
  }
  out << "verdict: " << format_classification(verdict) << "\n";
}

inline void write_genericity_report(std::ostream& out,
                                    const GenericityReport& report) {
  out << "suite:";
  for (std::size_t i = 0; i < report.suite.size(); ++i) {
    out << (i == 0 ? " " : ", ") << report.suite[i];
  }
  out << "\n";
  out << "verdicts:\n";
  for (const Verdict& verdict : report.verdicts) {
    out << "  " << verdict.cycle_id << ": " << format_classification(verdict)
        << "\n";
  }
  if (report.points.empty()) {
    out << "non-generic set: empty (suite-relative)\n";
  } else {
    out << "non-generic directions (suite-relative):\n";
    for (const NonGenericPoint& point : report.points) {
      out << "  " << format_direction(point.direction) << " witness "
          << point.witness << " value " << fmt17(point.value)
          << (point.degenerate_locus ? " degenerate-locus" : "") << "\n";
    }
  }
  out << "note: genericity is decided relative to the supplied finite suite "
         "of cycles\n";
}

/// Sphere-scan CSV: header exactly `index,a,b,c,V`, one Fibonacci node
/// per row in index order, floats at 17 significant digits, LF endings.
inline void write_scan_csv(std::ostream& out, const TrisymPolynomial& poly,
                           int grid_points) {
  out << "index,a,b,c,V\n";
  for (int i = 0; i < grid_points; ++i) {
    const Eigen::Vector3d node = fibonacci_sphere_node(i, grid_points);
    out << i << "," << fmt17(node[0]) << "," << fmt17(node[1]) << ","
        << fmt17(node[2]) << "," << fmt17(evaluate(poly, node)) << "\n";
  }
}

}  // namespace trisym
