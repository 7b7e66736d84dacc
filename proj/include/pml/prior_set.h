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

#ifndef PML_PRIOR_SET_H_
#define PML_PRIOR_SET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/statusor.h"
#include "pml/database.h"
#include "pml/distribution.h"

namespace pml {

// A family of full-support priors over one alphabet. Explicit sets are
// evaluated exactly; the parametric kinds are enumerated on a finite grid or
// sequence, so a sup over their members only estimates the family's sup
// from below.
class PriorSet {
 public:
  enum class Kind { kExplicit, kSimplexGrid, kProductFamily, kPredicateFamily };

  static absl::StatusOr<PriorSet> Explicit(std::vector<Pmf> members);

  // Every full-support pmf whose masses are multiples of 1 / resolution.
  static absl::StatusOr<PriorSet> SimplexGrid(Alphabet alphabet,
                                              size_t resolution);

  // Product priors that concentrate 1 - eps on some target database for
  // each eps in `eps_sequence`, plus the uniform prior.
  static absl::StatusOr<PriorSet> ProductFamily(DatabaseSchema schema,
                                                std::vector<double> eps_sequence);

  // i.i.d. entries whose predicate f(D_i) = 1 has probability p in (c, 1 - c),
  // with that mass spread evenly over the symbols where f holds. p runs over
  // c + (1 - 2c) k / 10 for k = 1..9 and c + eps, 1 - c - eps for each eps.
  static absl::StatusOr<PriorSet> PredicateFamily(
      DatabaseSchema schema, std::vector<bool> predicate, double c,
      std::vector<double> eps_sequence);

  Kind kind() const { return kind_; }
  bool parametric() const { return kind_ != Kind::kExplicit; }
  const Alphabet& alphabet() const { return alphabet_; }

  // Calls `fn` once per member, in a deterministic order.
  void ForEach(absl::FunctionRef<void(const Pmf&)> fn) const;

 private:
  PriorSet(Kind kind, Alphabet alphabet) : kind_(kind), alphabet_(alphabet) {}

  Kind kind_;
  Alphabet alphabet_;
  std::vector<Pmf> members_;
  size_t resolution_ = 0;
  std::optional<DatabaseSchema> schema_;
  std::vector<double> eps_sequence_;
  std::vector<bool> predicate_;
  double c_ = 0.0;
};

struct EpsPmlCertificate {
  bool holds = false;
  // True when the set is parametric and the reported sup is a grid or
  // sequence lower estimate.
  bool lower_estimate = false;
  std::optional<Pmf> worst_prior;
  std::string worst_output;
  double worst_value = 0.0;
  size_t members_checked = 0;
};

// Checks sup over the set and over outputs of l(X -> y) <= eps.
absl::StatusOr<EpsPmlCertificate> CheckEpsPml(const Channel& channel,
                                              const PriorSet& priors,
                                              double eps);

}  // namespace pml

#endif  // PML_PRIOR_SET_H_
