// Copyright 2026 The pmlkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pml/config.h"

#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "pml/io.h"

namespace pml {

absl::Status ValidateConfig(const AnalysisConfig& config) {
  if (!(config.numeric_tolerance > 0.0) ||
      !(config.equivalence_tolerance > 0.0)) {
    return absl::InvalidArgumentError("tolerances must be positive");
  }
  if (config.eps_sequence.empty()) {
    return absl::InvalidArgumentError("eps_sequence must be nonempty");
  }
  for (size_t k = 0; k < config.eps_sequence.size(); ++k) {
    const double e = config.eps_sequence[k];
    if (!(e > 0.0 && e < 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("eps_sequence values must lie in (0, 1), got ", e));
    }
    if (k > 0 && !(e < config.eps_sequence[k - 1])) {
      return absl::InvalidArgumentError(
          "eps_sequence must be strictly decreasing");
    }
  }
  if (config.simplex_resolution < 1 || config.laplace_y_grid_points < 2) {
    return absl::InvalidArgumentError("grid sizes are too small");
  }
  if (config.output_format != "text" && config.output_format != "json" &&
      config.output_format != "csv") {
    return absl::InvalidArgumentError(absl::StrCat(
        "output_format must be text, json or csv, got '",
        config.output_format, "'"));
  }
  if (!(config.singling_out_threshold >= 0.0)) {
    return absl::InvalidArgumentError(
        "singling_out_threshold must be nonnegative");
  }
  return absl::OkStatus();
}

absl::StatusOr<AnalysisConfig> LoadConfig(const std::string& path) {
  absl::StatusOr<Json> json = ReadJsonFile(path);
  if (!json.ok()) return json.status();
  if (!json->is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  AnalysisConfig config;
  try {
    const Json& j = *json;
    if (j.contains("numeric_tolerance")) {
      config.numeric_tolerance = j["numeric_tolerance"].get<double>();
    }
    if (j.contains("equivalence_tolerance")) {
      config.equivalence_tolerance = j["equivalence_tolerance"].get<double>();
    }
    if (j.contains("eps_sequence")) {
      config.eps_sequence = j["eps_sequence"].get<std::vector<double>>();
    }
    if (j.contains("simplex_resolution")) {
      config.simplex_resolution = j["simplex_resolution"].get<size_t>();
    }
    if (j.contains("laplace_y_grid_points")) {
      config.laplace_y_grid_points = j["laplace_y_grid_points"].get<size_t>();
    }
    if (j.contains("output_format")) {
      config.output_format = j["output_format"].get<std::string>();
    }
    if (j.contains("singling_out_threshold")) {
      config.singling_out_threshold =
          j["singling_out_threshold"].get<double>();
    }
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad config value in '", path, "': ", e.what()));
  }
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  return config;
}

absl::StatusOr<AnalysisConfig> ConfigFromEnvironment() {
  const char* path = std::getenv(kConfigEnvVar);
  if (path == nullptr || *path == '\0') return AnalysisConfig{};
  return LoadConfig(path);
}

}  // namespace pml
