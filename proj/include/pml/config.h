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

#ifndef PML_CONFIG_H_
#define PML_CONFIG_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace pml {

// Environment variable naming a JSON file that overrides the defaults below.
inline constexpr char kConfigEnvVar[] = "PMLTOOL_CONFIG";

struct AnalysisConfig {
  double numeric_tolerance = 1e-9;
  double equivalence_tolerance = 1e-4;
  std::vector<double> eps_sequence = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  size_t simplex_resolution = 10;
  size_t laplace_y_grid_points = 1001;
  // One of "text", "json", "csv".
  std::string output_format = "text";
  double singling_out_threshold = 1e-9;
};

absl::Status ValidateConfig(const AnalysisConfig& config);

// Reads the keys present in the file on top of the defaults.
absl::StatusOr<AnalysisConfig> LoadConfig(const std::string& path);

// Defaults, or the file named by PMLTOOL_CONFIG when it is set.
absl::StatusOr<AnalysisConfig> ConfigFromEnvironment();

}  // namespace pml

#endif  // PML_CONFIG_H_
