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

#ifndef PML_IO_H_
#define PML_IO_H_

#include <optional>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "pml/database.h"
#include "pml/distribution.h"

namespace pml {

using Json = nlohmann::json;

// Mechanism: {"input_labels": [...], "output_labels": [...], "rows": [[...]]}.
// Database mechanisms add "entry_alphabet" and "n"; their rows follow the
// row-major database order and the input labels may be omitted.
// Prior: {"labels": [...], "probs": [...]}.

absl::StatusOr<Json> ReadJsonFile(const std::string& path);
absl::Status WriteJsonFile(const std::string& path, const Json& value);

absl::StatusOr<Pmf> PmfFromJson(const Json& value);
Json PmfToJson(const Pmf& pmf);

absl::StatusOr<Channel> ChannelFromJson(const Json& value);
Json ChannelToJson(const Channel& channel);

struct MechanismSpec {
  Channel channel;
  // Set for database mechanisms.
  std::optional<DatabaseSchema> schema;
};

absl::StatusOr<MechanismSpec> MechanismFromJson(const Json& value);
Json DatabaseMechanismToJson(const DatabaseMechanism& m);

// {"mechanism": {...}, "prior": {...}, "u_kernel": {...}}; the kernel is
// optional.
struct Instance {
  MechanismSpec mechanism;
  std::optional<Pmf> prior;
  std::optional<Channel> u_kernel;
};

absl::StatusOr<Instance> InstanceFromJson(const Json& value);

// "%.6f", switching to "%.6e" for 0 < |v| < 1e-4; infinities print as "inf"
// and "-inf".
std::string FormatReal(double v);

}  // namespace pml

#endif  // PML_IO_H_
