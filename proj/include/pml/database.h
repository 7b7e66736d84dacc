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

#ifndef PML_DATABASE_H_
#define PML_DATABASE_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/alphabet.h"
#include "pml/distribution.h"

namespace pml {

// Largest database alphabet |D|^n that is enumerated exactly.
inline constexpr size_t kMaxDatabases = 4096;

// Databases of n entries over a finite entry alphabet D. Databases are
// indexed in row-major order with entry 0 most significant, so for binary
// D and n = 2 the order is 00, 01, 10, 11.
//
// A context of entry i is the tuple d_{-i} of the other n - 1 entries,
// indexed in the same row-major order over the remaining positions.
class DatabaseSchema {
 public:
  static absl::StatusOr<DatabaseSchema> Create(Alphabet entry_alphabet,
                                               size_t n);

  const Alphabet& entry_alphabet() const { return entry_alphabet_; }
  // Labels are the entry labels joined with ','.
  const Alphabet& database_alphabet() const { return database_alphabet_; }
  size_t n() const { return n_; }
  size_t entry_size() const { return entry_alphabet_.size(); }
  size_t num_databases() const { return database_alphabet_.size(); }
  size_t num_contexts() const { return num_databases() / entry_size(); }

  std::vector<size_t> Decode(size_t database) const;
  size_t Encode(std::span<const size_t> entries) const;
  size_t Entry(size_t database, size_t i) const;

  size_t ContextOf(size_t database, size_t i) const;
  // Database whose entry i is `value` and whose other entries are `context`.
  size_t Compose(size_t i, size_t value, size_t context) const;
  std::string ContextLabel(size_t i, size_t context) const;

 private:
  DatabaseSchema(Alphabet entry_alphabet, size_t n, Alphabet databases);

  Alphabet entry_alphabet_;
  size_t n_;
  Alphabet database_alphabet_;
  // stride_[i] = |D|^(n - 1 - i)
  std::vector<size_t> stride_;
};

// A mechanism whose secret is a whole database.
class DatabaseMechanism {
 public:
  // The channel's input alphabet must equal the schema's database alphabet
  // in size; its labels are replaced by the canonical database labels.
  static absl::StatusOr<DatabaseMechanism> Create(DatabaseSchema schema,
                                                  const Channel& channel);

  const DatabaseSchema& schema() const { return schema_; }
  const Channel& channel() const { return channel_; }

 private:
  DatabaseMechanism(DatabaseSchema schema, Channel channel)
      : schema_(std::move(schema)), channel_(std::move(channel)) {}

  DatabaseSchema schema_;
  Channel channel_;
};

// Full-support prior over databases, held either as an explicit pmf or as a
// product of per-entry pmfs. The joint masses are always materialized.
class DatabasePrior {
 public:
  static absl::StatusOr<DatabasePrior> Explicit(const DatabaseSchema& schema,
                                                Pmf joint);
  static absl::StatusOr<DatabasePrior> Product(const DatabaseSchema& schema,
                                               std::vector<Pmf> factors);

  bool is_product() const { return !factors_.empty(); }
  // Per-entry factors; empty for explicit priors.
  const std::vector<Pmf>& factors() const { return factors_; }
  const Pmf& joint() const { return joint_; }

 private:
  DatabasePrior(Pmf joint, std::vector<Pmf> factors)
      : joint_(std::move(joint)), factors_(std::move(factors)) {}

  Pmf joint_;
  std::vector<Pmf> factors_;
};

// Marginal of entry i under `prior`.
Pmf EntryMarginal(const DatabaseSchema& schema, const DatabasePrior& prior,
                  size_t i);

// Product prior whose every entry j puts 1 - eps on target[j] and spreads
// eps evenly over the other symbols. Requires eps in (0, 1).
absl::StatusOr<DatabasePrior> ProductTargetPrior(
    const DatabaseSchema& schema, std::span<const size_t> target, double eps);

}  // namespace pml

#endif  // PML_DATABASE_H_
