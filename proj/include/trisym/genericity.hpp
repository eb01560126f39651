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
 * @brief Trianalyticity verdicts and suite-relative genericity reports.
 *
 * A cycle is trianalytic iff its volume function is constant AND it is
 * complex analytic for at least one induced structure; constancy alone is
 * not enough (a cycle with identically vanishing volume function need not
 * be complex anywhere). Non-constant volume functions attain Area exactly
 * at the structures where the cycle is complex analytic, which are global
 * maxima; removing every such maximum over a cycle suite approximates the
 * non-generic set.
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "trisym/cycles.hpp"
#include "trisym/errors.hpp"
#include "trisym/frame.hpp"
#include "trisym/polynomial.hpp"
#include "trisym/sphere_opt.hpp"

namespace trisym {

enum class Classification { Trianalytic, ComplexOnlyAt, NotComplexAnywhere };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Trianalytic: return "Trianalytic";
    case Classification::ComplexOnlyAt: return "ComplexOnlyAt";
    default: return "NotComplexAnywhere";
  }
}

/// All tolerances of the verdict pipeline; config files may override them.
struct Tolerances {
  double frame_tol = 1e-9;      ///< frame validation
  double tangent_tol = 1e-8;    ///< projector residual for complex analyticity
  double constancy_tol = 1e-8;  ///< relative constancy of the polynomial
  double equality_tol = 1e-8;   ///< Wirtinger gap relative to area
  double value_tol = 1e-8;      ///< maxima value filter
  double dedupe_angle = 1e-6;   ///< radians, critical point deduplication
  double angular_tol = 1e-6;    ///< radians, genericity matching
  int starts = 256;
  int newton_iters = 40;
  int dense_grid = 4096;

  CriticalPointOptions critical_point_options() const {
    CriticalPointOptions opts;
    opts.starts = starts;
    opts.newton_iters = newton_iters;
    opts.dedupe_angle = dedupe_angle;
    opts.dense_grid = dense_grid;
    return opts;
  }
};

/// Wirtinger gap and tangent test at one global maximum.
struct MaximumEvidence {
  CriticalPoint point;
  double gap = 0.0;
  double tangent_residual = 0.0;
  bool complex_here = false;
};

struct Verdict {
  std::string cycle_id;
  Classification classification = Classification::NotComplexAnywhere;
  std::vector<Eigen::Vector3d> directions;  ///< where complex, for ComplexOnlyAt
  TrisymPolynomial polynomial;
  SphereStats stats;
  bool polynomial_constant = false;
  double area = 0.0;
  double tangent_residual_at_i = 0.0;
  MaximaSet maxima;  ///< empty for the constant branch
  std::vector<MaximumEvidence> maxima_evidence;
};

/// Full pipeline for one cycle: polynomial, constancy, maxima, Wirtinger
/// equality cross-checked against the tangent test at every maximum.
template <typename CycleT>
inline Verdict trianalyticity_verdict(const CycleT& cycle,
                                      const QuaternionicFrame& frame,
                                      const Tolerances& tols = Tolerances{},
                                      std::string cycle_id = "") {
  Verdict verdict;
  verdict.cycle_id = cycle_id;
  verdict.polynomial = compute_polynomial(cycle, frame, cycle_id);
  verdict.area = riemannian_area(cycle, frame);
  verdict.stats = sphere_stats(verdict.polynomial);
  verdict.polynomial_constant =
      is_constant(verdict.polynomial, tols.constancy_tol);

  const TangentTest at_i =
      is_complex_analytic(cycle, frame, {1.0, 0.0, 0.0}, tols.tangent_tol);
  verdict.tangent_residual_at_i = at_i.residual;

  if (verdict.polynomial_constant) {
    if (at_i.pass) {
      // Complex analytic with constant volume function: trianalytic. An
      // odd complex dimension contradicts the even-codimension property
      // of trianalytic subvarieties, so it can only be a bug.
      if (verdict.polynomial.n % 2 == 1) {
        throw InconsistencyError(
            "trianalyticity_verdict: odd-dimension cycle passed the "
            "trianalyticity tests: " + cycle_id);
      }
      if (!is_trianalytic_pointwise(cycle, frame, tols.tangent_tol)) {
        throw InconsistencyError(
            "trianalyticity_verdict: constant volume function and complex "
            "at I, but pointwise test failed: " + cycle_id);
      }
      verdict.classification = Classification::Trianalytic;
    } else {
      // Constant without complex analyticity at I: were the cycle complex
      // anywhere, equality would force V = Area everywhere and hence
      // trianalyticity, contradicting the failed test.
      verdict.classification = Classification::NotComplexAnywhere;
    }
    return verdict;
  }

  verdict.maxima = global_maxima(verdict.polynomial, tols.value_tol,
                                 tols.critical_point_options());
  const double equality_band = tols.equality_tol * verdict.area;
  constexpr double kStrong = 1e3;  // disagreement buffer between the tests
  for (const CriticalPoint& point : verdict.maxima.points) {
    MaximumEvidence ev;
    ev.point = point;
    ev.gap = wirtinger_gap(cycle, frame, point.direction);
    const TangentTest tangent =
        is_complex_analytic(cycle, frame, point.direction, tols.tangent_tol);
    ev.tangent_residual = tangent.residual;

    const bool equality = ev.gap <= equality_band;
    if (equality && tangent.residual > kStrong * tols.tangent_tol) {
      throw InconsistencyError(
          "trianalyticity_verdict: Wirtinger equality without tangent "
          "invariance at a maximum of " + cycle_id);
    }
    if (tangent.pass && ev.gap > kStrong * equality_band) {
      throw InconsistencyError(
          "trianalyticity_verdict: tangent invariance without Wirtinger "
          "equality at a maximum of " + cycle_id);
    }
    ev.complex_here = equality && tangent.pass;
    if (ev.complex_here) verdict.directions.push_back(point.direction);
    verdict.maxima_evidence.push_back(ev);
  }
  verdict.classification = verdict.directions.empty()
                               ? Classification::NotComplexAnywhere
                               : Classification::ComplexOnlyAt;
  return verdict;
}

struct SuiteEntry {
  std::string id;
  Cycle cycle;
};

/// One direction of the approximated non-generic set.
struct NonGenericPoint {
  Eigen::Vector3d direction;
  std::string witness;  ///< id of a cycle whose maximum sits here
  double value = 0.0;
  bool degenerate_locus = false;
};

/// Suite-relative approximation of the non-generic set: the maxima of all
/// non-constant volume functions in the suite.
struct GenericityReport {
  std::vector<std::string> suite;
  std::vector<Verdict> verdicts;
  std::vector<NonGenericPoint> points;
  Tolerances tolerances;
};

inline GenericityReport nongeneric_set(const std::vector<SuiteEntry>& cycles,
                                       const QuaternionicFrame& frame,
                                       const Tolerances& tols = Tolerances{}) {
  if (cycles.empty()) {
    throw std::invalid_argument("nongeneric_set: empty cycle suite");
  }
  std::vector<const SuiteEntry*> order;
  order.reserve(cycles.size());
  for (const SuiteEntry& entry : cycles) order.push_back(&entry);
  std::sort(order.begin(), order.end(),
            [](const SuiteEntry* a, const SuiteEntry* b) { return a->id < b->id; });

  GenericityReport report;
  report.tolerances = tols;
  for (const SuiteEntry* entry : order) {
    report.suite.push_back(entry->id);
    report.verdicts.push_back(
        trianalyticity_verdict(entry->cycle, frame, tols, entry->id));
    const Verdict& verdict = report.verdicts.back();
    if (verdict.polynomial_constant) continue;  // contributes no maxima
    for (const CriticalPoint& point : verdict.maxima.points) {
      bool duplicate = false;
      for (const NonGenericPoint& existing : report.points) {
        if (angular_distance(existing.direction, point.direction) <=
            tols.dedupe_angle) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) {
        report.points.push_back({point.direction, entry->id, point.value,
                                 verdict.maxima.degenerate_locus});
      }
    }
  }
  return report;
}

/// Classification of a single induced structure against a report. Always
/// relative to the finite suite the report was built over.
struct StructureClass {
  bool generic = true;
  std::string witness;
  Eigen::Vector3d matched = Eigen::Vector3d::Zero();
  double angle = std::numeric_limits<double>::infinity();
};

inline StructureClass classify_structure(const Eigen::Vector3d& direction,
                                         const GenericityReport& report,
                                         double angular_tol = 1e-6) {
  const double norm = direction.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("classify_structure: zero direction");
  }
  const Eigen::Vector3d unit = direction / norm;
  StructureClass out;
  for (const NonGenericPoint& point : report.points) {
    const double angle = angular_distance(unit, point.direction);
    if (angle <= angular_tol && angle < out.angle) {
      out.generic = false;
      out.witness = point.witness;
      out.matched = point.direction;
      out.angle = angle;
    }
  }
  return out;
}

}  // namespace trisym
