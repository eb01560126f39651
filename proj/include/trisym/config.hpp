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
 * @brief Scenario configuration: the flat model, the cycle suite and
 * tolerance overrides, read from a JSON document.
 *
 * Lattice data is exact, so rational entries may be written as integers
 * or as "p/q" strings and are parsed exactly before conversion to
 * floating point.
 */

#pragma once

#include <json.hpp>

#include <Eigen/Dense>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "trisym/cycles.hpp"
#include "trisym/errors.hpp"
#include "trisym/frame.hpp"
#include "trisym/genericity.hpp"

namespace trisym {

struct CycleSpec {
  std::string id;
  std::string kind;                      ///< "linear" | "parametrized-preset"
  std::vector<Eigen::VectorXd> vectors;  ///< linear and flat-embed cycles
  std::string preset;                    ///< "flat-embed" | "wavy-torus"
  double epsilon = 0.01;                 ///< wavy-torus ripple amplitude
  std::vector<int> grid = {16};          ///< per axis; singletons broadcast
};

struct ScanConfig {
  int grid_points = 64;
};

struct ScenarioConfig {
  int m = 1;
  Eigen::MatrixXd metric;  ///< empty: identity
  bool has_rotation = false;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  std::vector<CycleSpec> cycles;
  Tolerances tolerances;
  ScanConfig scan;
};

/// Exact rational entry: JSON integer, float, or "p/q" / "p" string.
inline double parse_rational(const nlohmann::json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      const long long num =
          std::stoll(text.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? text.size() : slash)) {
        throw ConfigError("trailing characters in rational '" + text + "'");
      }
      if (slash == std::string::npos) return static_cast<double>(num);
      const std::string den_text = text.substr(slash + 1);
      const long long den = std::stoll(den_text, &used);
      if (used != den_text.size()) {
        throw ConfigError("trailing characters in rational '" + text + "'");
      }
      if (den == 0) throw ConfigError("zero denominator in '" + text + "'");
      return static_cast<double>(num) / static_cast<double>(den);
    } catch (const std::invalid_argument&) {
      throw ConfigError("cannot parse rational '" + text + "'");
    } catch (const std::out_of_range&) {
      throw ConfigError("rational out of range '" + text + "'");
    }
  }
  throw ConfigError("rational entries must be numbers or 'p/q' strings");
}

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& node,
                                         const std::string& key,
                                         const std::string& where) {
  if (!node.contains(key)) {
    throw ConfigError(where + ": missing key '" + key + "'");
  }
  return node.at(key);
}

inline Eigen::MatrixXd parse_matrix(const nlohmann::json& rows,
                                    const std::string& where) {
  if (!rows.is_array() || rows.empty()) {
    throw ConfigError(where + ": expected an array of rows");
  }
  const auto nrows = rows.size();
  const auto ncols = rows.front().is_array() ? rows.front().size() : 0;
  if (ncols == 0) throw ConfigError(where + ": empty rows");
  Eigen::MatrixXd out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols) {
      throw ConfigError(where + ": ragged rows");
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_rational(rows[i][j]);
    }
  }
  return out;
}

}  // namespace detail

inline ScenarioConfig parse_config(const nlohmann::json& root) {
  ScenarioConfig config;
  const nlohmann::json& model = detail::require_key(root, "model", "config");

  const nlohmann::json& m_value = detail::require_key(model, "m", "model");
  if (!m_value.is_number_integer() || m_value.get<int>() < 1) {
    throw ConfigError("model.m must be a positive integer");
  }
  config.m = m_value.get<int>();
  const int dim = 4 * config.m;

  if (model.contains("metric") && !(model.at("metric").is_string() &&
                                    model.at("metric") == "identity")) {
    config.metric = detail::parse_matrix(model.at("metric"), "model.metric");
    if (config.metric.rows() != dim || config.metric.cols() != dim) {
      throw ConfigError("model.metric must be " + std::to_string(dim) + "x" +
                        std::to_string(dim));
    }
  }
  if (model.contains("lattice") && model.at("lattice") != "standard") {
    throw ConfigError("model.lattice: only \"standard\" is supported");
  }
  if (model.contains("rotation")) {
    const Eigen::MatrixXd r =
        detail::parse_matrix(model.at("rotation"), "model.rotation");
    if (r.rows() != 3 || r.cols() != 3) {
      throw ConfigError("model.rotation must be 3x3");
    }
    config.rotation = r;
    config.has_rotation = true;
  }

  const nlohmann::json& cycles = detail::require_key(root, "cycles", "config");
  if (!cycles.is_array() || cycles.empty()) {
    throw ConfigError("config.cycles must be a non-empty array");
  }
  std::set<std::string> seen_ids;
  for (const nlohmann::json& entry : cycles) {
    CycleSpec spec;
    spec.id = detail::require_key(entry, "id", "cycle").get<std::string>();
    if (spec.id.empty()) throw ConfigError("cycle ids must be non-empty");
    if (!seen_ids.insert(spec.id).second) {
      throw ConfigError("duplicate cycle id '" + spec.id + "'");
    }
    spec.kind = detail::require_key(entry, "kind", "cycle " + spec.id)
                    .get<std::string>();
    if (spec.kind != "linear" && spec.kind != "parametrized-preset") {
      throw ConfigError("cycle " + spec.id + ": unknown kind '" + spec.kind +
                        "'");
    }

    if (entry.contains("vectors")) {
      const nlohmann::json& rows = entry.at("vectors");
      if (!rows.is_array() || rows.empty()) {
        throw ConfigError("cycle " + spec.id + ": vectors must be an array");
      }
      for (const nlohmann::json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
          throw ConfigError("cycle " + spec.id + ": vectors need " +
                            std::to_string(dim) + " entries");
        }
        Eigen::VectorXd v(dim);
        for (int j = 0; j < dim; ++j) v[j] = parse_rational(row[j]);
        spec.vectors.push_back(std::move(v));
      }
    }

    if (spec.kind == "linear") {
      if (spec.vectors.empty()) {
        throw ConfigError("cycle " + spec.id + ": linear cycles need vectors");
      }
    } else {
      spec.preset = detail::require_key(entry, "preset", "cycle " + spec.id)
                        .get<std::string>();
      if (spec.preset != "flat-embed" && spec.preset != "wavy-torus") {
        throw ConfigError("cycle " + spec.id + ": unknown preset '" +
                          spec.preset + "'");
      }
      if (spec.preset == "flat-embed" && spec.vectors.empty()) {
        throw ConfigError("cycle " + spec.id + ": flat-embed needs vectors");
      }
      if (entry.contains("epsilon")) {
        spec.epsilon = parse_rational(entry.at("epsilon"));
      }
      if (entry.contains("grid")) {
        const nlohmann::json& grid = entry.at("grid");
        spec.grid.clear();
        if (grid.is_number_integer()) {
          spec.grid.push_back(grid.get<int>());
        } else if (grid.is_array()) {
          for (const nlohmann::json& g : grid) {
            if (!g.is_number_integer()) {
              throw ConfigError("cycle " + spec.id + ": grid must be integer");
            }
            spec.grid.push_back(g.get<int>());
          }
        } else {
          throw ConfigError("cycle " + spec.id + ": bad grid");
        }
        for (int g : spec.grid) {
          if (g < 2) {
            throw ConfigError("cycle " + spec.id + ": grid must be >= 2");
          }
        }
      }
    }
    config.cycles.push_back(std::move(spec));
  }

  if (root.contains("tolerances")) {
    const nlohmann::json& tols = root.at("tolerances");
    if (!tols.is_object()) throw ConfigError("tolerances must be an object");
    for (const auto& [key, value] : tols.items()) {
      if (key == "frame_tol") config.tolerances.frame_tol = value.get<double>();
      else if (key == "tangent_tol") config.tolerances.tangent_tol = value.get<double>();
      else if (key == "constancy_tol") config.tolerances.constancy_tol = value.get<double>();
      else if (key == "equality_tol") config.tolerances.equality_tol = value.get<double>();
      else if (key == "value_tol") config.tolerances.value_tol = value.get<double>();
      else if (key == "dedupe_angle") config.tolerances.dedupe_angle = value.get<double>();
      else if (key == "angular_tol") config.tolerances.angular_tol = value.get<double>();
      else if (key == "starts") config.tolerances.starts = value.get<int>();
      else if (key == "newton_iters") config.tolerances.newton_iters = value.get<int>();
      else if (key == "dense_grid") config.tolerances.dense_grid = value.get<int>();
      else throw ConfigError("unknown tolerance key '" + key + "'");
    }
  }

  if (root.contains("scan")) {
    const nlohmann::json& scan = root.at("scan");
    if (scan.contains("grid_points")) {
      if (!scan.at("grid_points").is_number_integer()) {
        throw ConfigError("scan.grid_points must be an integer");
      }
      config.scan.grid_points = scan.at("grid_points").get<int>();
    }
  }
  return config;
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  return parse_config(root);
}

/// Standard frame of the configured size, with the optional explicit
/// metric and twistor-sphere rotation applied and re-validated.
inline QuaternionicFrame build_frame(const ScenarioConfig& config) {
  QuaternionicFrame frame = standard_frame(config.m);
  try {
    if (config.metric.size() > 0) {
      frame = make_frame(config.metric, frame.I, frame.J, frame.K,
                         config.tolerances.frame_tol);
    }
    if (config.has_rotation) {
      frame = rotate_frame(frame, config.rotation);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid model: ") + e.what());
  }
  return frame;
}

inline Cycle build_cycle(const CycleSpec& spec,
                         const QuaternionicFrame& frame) {
  try {
    if (spec.kind == "linear") {
      return make_linear_cycle(spec.vectors);
    }
    if (spec.preset == "flat-embed") {
      return flat_embed_cycle(spec.vectors, spec.grid);
    }
    return wavy_torus_cycle(frame.dim, spec.epsilon, spec.grid);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("cycle " + spec.id + ": " + e.what());
  }
}

inline std::vector<SuiteEntry> build_suite(const ScenarioConfig& config,
                                           const QuaternionicFrame& frame) {
  std::vector<SuiteEntry> suite;
  suite.reserve(config.cycles.size());
  for (const CycleSpec& spec : config.cycles) {
    suite.push_back({spec.id, build_cycle(spec, frame)});
  }
  return suite;
}

}  // namespace trisym
