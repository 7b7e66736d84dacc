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

#ifndef PML_ALPHABET_H_
#define PML_ALPHABET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"

namespace pml {

// Ordered set of distinct symbol labels. The index order is the canonical
// order used by every distribution and kernel defined over the alphabet.
class Alphabet {
 public:
  // Fails if `labels` is empty or contains duplicates.
  static absl::StatusOr<Alphabet> Create(std::vector<std::string> labels);

  // Labels "0", "1", ..., "k-1". Requires k >= 1.
  static Alphabet Indexed(size_t k);

  size_t size() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<size_t> IndexOf(std::string_view label) const;

  // Like IndexOf, but unknown labels are an InvalidArgument error.
  absl::StatusOr<size_t> Find(std::string_view label) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  explicit Alphabet(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  absl::flat_hash_map<std::string, size_t> index_;
};

}  // namespace pml

#endif  // PML_ALPHABET_H_
