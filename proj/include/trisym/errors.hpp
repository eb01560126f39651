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

#include <stdexcept>
#include <string>

namespace trisym {

/// Cycle data with rank-deficient tangent information (degenerate Gram
/// matrix or Jacobian). Rejected rather than regularized.
class DegenerateCycleError : public std::runtime_error {
 public:
  explicit DegenerateCycleError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A numerical procedure (interpolation, eigen solve, optimization) failed
/// beyond its conditioning or convergence budget.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

/// Two independent tests that must agree by construction disagreed beyond
/// tolerance. Signals a bug, never swallowed.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

/// Malformed or self-contradictory scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trisym
