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

#include "pml/database.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace pml {
namespace {

// Returns 0 when the power exceeds `limit`.
size_t BoundedPow(size_t base, size_t exp, size_t limit) {
  size_t result = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (result > limit / base) return 0;
    result *= base;
  }
  return result;
}

absl::Status CheckFullSupport(const Pmf& p, std::string_view what) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p.prob(i) <= 0.0) {
      return absl::InvalidArgumentError(absl::StrCat(
          std::string(what), " must have full support; '", p.alphabet().label(i),
          "' has probability zero"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

DatabaseSchema::DatabaseSchema(Alphabet entry_alphabet, size_t n,
                               Alphabet databases)
    : entry_alphabet_(std::move(entry_alphabet)),
      n_(n),
      database_alphabet_(std::move(databases)),
      stride_(n) {
  size_t s = 1;
  for (size_t i = n; i-- > 0;) {
    stride_[i] = s;
    s *= entry_alphabet_.size();
  }
}

absl::StatusOr<DatabaseSchema> DatabaseSchema::Create(Alphabet entry_alphabet,
                                                      size_t n) {
  if (entry_alphabet.size() < 2) {
    return absl::InvalidArgumentError(
        "entry alphabet needs at least two symbols");
  }
  if (n < 1) {
    return absl::InvalidArgumentError("database needs at least one entry");
  }
  const size_t k = entry_alphabet.size();
  const size_t total = BoundedPow(k, n, kMaxDatabases);
  if (total == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "database alphabet |D|^n = ", k, "^", n, " exceeds the limit of ",
        kMaxDatabases, " for exact enumeration"));
  }
  std::vector<std::string> labels;
  labels.reserve(total);
  std::vector<std::string> parts(n);
  for (size_t index = 0; index < total; ++index) {
    size_t rest = index;
    for (size_t i = n; i-- > 0;) {
      parts[i] = entry_alphabet.label(rest % k);
      rest /= k;
    }
    labels.push_back(absl::StrJoin(parts, ","));
  }
  absl::StatusOr<Alphabet> databases = Alphabet::Create(std::move(labels));
  if (!databases.ok()) {
    return absl::InvalidArgumentError(
        "entry labels containing ',' make database labels ambiguous");
  }
  return DatabaseSchema(std::move(entry_alphabet), n, *std::move(databases));
}

std::vector<size_t> DatabaseSchema::Decode(size_t database) const {
  std::vector<size_t> entries(n_);
  for (size_t i = 0; i < n_; ++i) entries[i] = Entry(database, i);
  return entries;
}

size_t DatabaseSchema::Encode(std::span<const size_t> entries) const {
  size_t index = 0;
  for (size_t i = 0; i < n_; ++i) index += entries[i] * stride_[i];
  return index;
}

size_t DatabaseSchema::Entry(size_t database, size_t i) const {
  return (database / stride_[i]) % entry_size();
}

size_t DatabaseSchema::ContextOf(size_t database, size_t i) const {
  // Drop digit i: the high part keeps its place value divided by |D|.
  const size_t high = database / (stride_[i] * entry_size());
  const size_t low = database % stride_[i];
  return high * stride_[i] + low;
}

size_t DatabaseSchema::Compose(size_t i, size_t value, size_t context) const {
  const size_t high = context / stride_[i];
  const size_t low = context % stride_[i];
  return (high * entry_size() + value) * stride_[i] + low;
}

std::string DatabaseSchema::ContextLabel(size_t i, size_t context) const {
  const std::vector<size_t> entries = Decode(Compose(i, 0, context));
  std::vector<std::string> parts;
  for (size_t j = 0; j < n_; ++j) {
    parts.push_back(j == i ? "*" : entry_alphabet_.label(entries[j]));
  }
  return absl::StrJoin(parts, ",");
}

absl::StatusOr<DatabaseMechanism> DatabaseMechanism::Create(
    DatabaseSchema schema, const Channel& channel) {
  if (channel.num_inputs() != schema.num_databases()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "database mechanism has ", channel.num_inputs(), " rows but |D|^n = ",
        schema.num_databases()));
  }
  absl::StatusOr<Channel> relabeled = Channel::Create(
      schema.database_alphabet(), channel.outputs(), channel.Rows());
  if (!relabeled.ok()) return relabeled.status();
  return DatabaseMechanism(std::move(schema), *std::move(relabeled));
}

absl::StatusOr<DatabasePrior> DatabasePrior::Explicit(
    const DatabaseSchema& schema, Pmf joint) {
  if (joint.size() != schema.num_databases()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "database prior has ", joint.size(), " masses but |D|^n = ",
        schema.num_databases()));
  }
  if (absl::Status s = CheckFullSupport(joint, "database prior"); !s.ok()) {
    return s;
  }
  Pmf relabeled = Pmf::FromWeights(
      schema.database_alphabet(),
      std::vector<double>(joint.probs().begin(), joint.probs().end()));
  return DatabasePrior(std::move(relabeled), {});
}

absl::StatusOr<DatabasePrior> DatabasePrior::Product(
    const DatabaseSchema& schema, std::vector<Pmf> factors) {
  if (factors.size() != schema.n()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "product prior has ", factors.size(), " factors for n = ",
        schema.n()));
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    if (!(factors[i].alphabet() == schema.entry_alphabet())) {
      return absl::InvalidArgumentError(absl::StrCat(
          "factor ", i, " is not over the entry alphabet"));
    }
    if (absl::Status s =
            CheckFullSupport(factors[i], absl::StrCat("factor ", i));
        !s.ok()) {
      return s;
    }
  }
  std::vector<double> masses(schema.num_databases());
  for (size_t x = 0; x < masses.size(); ++x) {
    double mass = 1.0;
    for (size_t i = 0; i < schema.n(); ++i) {
      mass *= factors[i].prob(schema.Entry(x, i));
    }
    masses[x] = mass;
  }
  return DatabasePrior(
      Pmf::FromWeights(schema.database_alphabet(), std::move(masses)),
      std::move(factors));
}

Pmf EntryMarginal(const DatabaseSchema& schema, const DatabasePrior& prior,
                  size_t i) {
  if (prior.is_product()) return prior.factors()[i];
  std::vector<double> masses(schema.entry_size(), 0.0);
  for (size_t x = 0; x < schema.num_databases(); ++x) {
    masses[schema.Entry(x, i)] += prior.joint().prob(x);
  }
  return Pmf::FromWeights(schema.entry_alphabet(), std::move(masses));
}

absl::StatusOr<DatabasePrior> ProductTargetPrior(
    const DatabaseSchema& schema, std::span<const size_t> target, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("construction eps must lie in (0, 1), got ", eps));
  }
  if (target.size() != schema.n()) {
    return absl::InvalidArgumentError("target database has the wrong length");
  }
  const size_t k = schema.entry_size();
  std::vector<Pmf> factors;
  factors.reserve(schema.n());
  for (size_t j = 0; j < schema.n(); ++j) {
    if (target[j] >= k) {
      return absl::InvalidArgumentError("target symbol out of range");
    }
    std::vector<double> masses(k, eps / static_cast<double>(k - 1));
    masses[target[j]] = 1.0 - eps;
    factors.push_back(
        Pmf::FromWeights(schema.entry_alphabet(), std::move(masses)));
  }
  return DatabasePrior::Product(schema, std::move(factors));
}

}  // namespace pml
