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
 * @brief Command implementations behind the CLI: verify, analyze,
 * scan-sphere, genericity.
 *
 * Exit codes: 0 success, 1 invariant violation, 2 configuration error,
 * 3 numerical failure.
 */

#pragma once

#include <iostream>
#include <ostream>
#include <random>
#include <string>

#include "trisym/config.hpp"
#include "trisym/report.hpp"

namespace trisym {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInvariantViolation = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalFailure = 3;

namespace detail {

template <typename Fn>
int guarded_command(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DegenerateCycleError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
}

inline Eigen::Vector3d cli_random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = {gauss(rng), gauss(rng), gauss(rng)};
  } while (v.norm() < 1e-6);
  return v.normalized();
}

inline const CycleSpec& find_cycle_spec(const ScenarioConfig& config,
                                        const std::string& id) {
  for (const CycleSpec& spec : config.cycles) {
    if (spec.id == id) return spec;
  }
  throw ConfigError("unknown cycle id '" + id + "'");
}

}  // namespace detail

/// Invariant suites over the configured model: frame relations, Pfaffian
/// properties, the Wirtinger bound and polynomial reconstruction on the
/// configured cycles. One line per check with the worst residual.
inline int cmd_verify(const ScenarioConfig& config, std::ostream& out,
                      std::ostream& err = std::cerr) {
  return detail::guarded_command(err, [&]() {
    const QuaternionicFrame frame = build_frame(config);
    const std::vector<SuiteEntry> suite = build_suite(config, frame);
    out << "model: m=" << config.m << " dim=" << frame.dim << "\n";

    bool all_pass = true;
    const auto check_line = [&](const std::string& name, bool pass,
                                const std::string& detail_text) {
      out << "check " << name << ": " << (pass ? "pass" : "FAIL") << " ("
          << detail_text << ")\n";
      all_pass = all_pass && pass;
    };

    const FrameCheck frame_check =
        verify_frame(frame, config.tolerances.frame_tol);
    check_line("frame_relations", frame_check.pass,
               "worst residual " + fmt17(frame_check.worst_residual()));

    std::mt19937_64 rng(0x7269737975ULL);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    double worst_pf = 0.0;
    for (int dim = 2; dim <= 10; dim += 2) {
      for (int trial = 0; trial < 25; ++trial) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) {
          for (int j = i + 1; j < dim; ++j) {
            a(i, j) = uniform(rng);
            a(j, i) = -a(i, j);
          }
        }
        const double pf = pfaffian(a);
        const double det = a.determinant();
        worst_pf = std::max(
            worst_pf, std::abs(pf * pf - det) / std::max(1.0, std::abs(det)));
      }
    }
    check_line("pfaffian_determinant", worst_pf < 1e-9,
               "worst relative residual " + fmt17(worst_pf));

    double worst_violation = 0.0;
    double worst_reconstruction = 0.0;
    for (const SuiteEntry& entry : suite) {
      const double area = riemannian_area(entry.cycle, frame);
      const TrisymPolynomial poly =
          compute_polynomial(entry.cycle, frame, entry.id);
      for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Vector3d d = detail::cli_random_unit(rng);
        const double value = symplectic_area(entry.cycle, frame, d);
        worst_violation = std::max(worst_violation, value - area);
        if (trial < 50) {
          worst_reconstruction =
              std::max(worst_reconstruction,
                       std::abs(evaluate(poly, d) - value) / (1.0 + area));
        }
      }
    }
    check_line("wirtinger_bound", worst_violation <= 1e-9,
               "worst violation " + fmt17(worst_violation));
    check_line("polynomial_reconstruction", worst_reconstruction < 1e-9,
               "worst relative residual " + fmt17(worst_reconstruction));

    out << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitSuccess : kExitInvariantViolation;
  });
}

/// Polynomial, areas, maxima and verdict for a single cycle.
inline int cmd_analyze(const ScenarioConfig& config, const std::string& id,
                       std::ostream& out, std::ostream& err = std::cerr) {
  return detail::guarded_command(err, [&]() {
    const CycleSpec& spec = detail::find_cycle_spec(config, id);
    const QuaternionicFrame frame = build_frame(config);
    const Cycle cycle = build_cycle(spec, frame);
    const Verdict verdict =
        trianalyticity_verdict(cycle, frame, config.tolerances, spec.id);
    write_verdict_report(out, verdict, spec.kind);
    return kExitSuccess;
  });
}

/// CSV tabulation of the volume function on the Fibonacci grid.
inline int cmd_scan_sphere(const ScenarioConfig& config, const std::string& id,
                           int grid_override, std::ostream& out,
                           std::ostream& err = std::cerr) {
  return detail::guarded_command(err, [&]() {
    const int grid_points =
        grid_override != 0 ? grid_override : config.scan.grid_points;
    if (grid_points < 2) {
      throw ConfigError("scan grid_points must be >= 2, got " +
                        std::to_string(grid_points));
    }
    const CycleSpec& spec = detail::find_cycle_spec(config, id);
    const QuaternionicFrame frame = build_frame(config);
    const Cycle cycle = build_cycle(spec, frame);
    const TrisymPolynomial poly = compute_polynomial(cycle, frame, spec.id);
    write_scan_csv(out, poly, grid_points);
    return kExitSuccess;
  });
}

/// Per-cycle verdicts plus the deduplicated non-generic directions of the
/// whole suite.
inline int cmd_genericity(const ScenarioConfig& config, std::ostream& out,
                          std::ostream& err = std::cerr) {
  return detail::guarded_command(err, [&]() {
    const QuaternionicFrame frame = build_frame(config);
    const std::vector<SuiteEntry> suite = build_suite(config, frame);
    const GenericityReport report =
        nongeneric_set(suite, frame, config.tolerances);
    write_genericity_report(out, report);
    return kExitSuccess;
  });
}

}  // namespace trisym
