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

#include "pml/alphabet.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pml {

Alphabet::Alphabet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

absl::StatusOr<Alphabet> Alphabet::Create(std::vector<std::string> labels) {
  if (labels.empty()) {
    return absl::InvalidArgumentError("alphabet must be nonempty");
  }
  Alphabet alphabet(std::move(labels));
  if (alphabet.index_.size() != alphabet.labels_.size()) {
    for (size_t i = 0; i < alphabet.labels_.size(); ++i) {
      if (alphabet.index_.at(alphabet.labels_[i]) != i) {
        return absl::InvalidArgumentError(
            absl::StrCat("duplicate alphabet label '", alphabet.labels_[i],
                         "'"));
      }
    }
  }
  return alphabet;
}

Alphabet Alphabet::Indexed(size_t k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (size_t i = 0; i < k; ++i) labels.push_back(absl::StrCat(i));
  return Alphabet(std::move(labels));
}

std::optional<size_t> Alphabet::IndexOf(std::string_view label) const {
  auto it = index_.find(absl::string_view(label.data(), label.size()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<size_t> Alphabet::Find(std::string_view label) const {
  std::optional<size_t> index = IndexOf(label);
  if (!index.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown symbol '", std::string(label), "'"));
  }
  return *index;
}

}  // namespace pml
