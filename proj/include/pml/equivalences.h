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

#ifndef PML_EQUIVALENCES_H_
#define PML_EQUIVALENCES_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/database.h"
#include "pml/distribution.h"

namespace pml {

// Pure differential privacy parameter: the largest log-likelihood ratio
// between databases that differ in exactly one entry. Infinite when some
// output is possible under one neighbor and impossible under the other.
double DpEpsilon(const DatabaseMechanism& m);

// Free-lunch parameter: the same ratio over all pairs of databases. This is
// the leakage capacity of the database channel.
double FreeLunchEpsilon(const DatabaseMechanism& m);

// Joint of (D_i, Y) obtained by marginalizing the database joint.
absl::StatusOr<Joint> EntryJoint(const DatabaseMechanism& m,
                                 const DatabasePrior& prior, size_t i);

// l(D_i -> y), with i zero-based.
absl::StatusOr<double> EntryPml(const DatabaseMechanism& m,
                                const DatabasePrior& prior, size_t i,
                                size_t y);

// l(D_i -> y | d_{-i}) for one context d_{-i} of entry i.
absl::StatusOr<double> ConditionalEntryPml(const DatabaseMechanism& m,
                                           const DatabasePrior& prior,
                                           size_t i, size_t context,
                                           size_t y);

// Per-entry pmf putting 1 - eps on the value of entry i that makes y least
// likely given `context`, and spreading eps evenly elsewhere.
absl::StatusOr<Pmf> ConditionalEntryPrior(const DatabaseMechanism& m,
                                          size_t i, size_t context, size_t y,
                                          double eps);

// Kernel from entry i's value to its context. Row `value` puts 1 - eps on
// the context that makes y most likely, row `other` puts 1 - eps on the
// context that makes y least likely, and every remaining row is uniform.
// With a single context all rows are degenerate.
absl::StatusOr<Channel> CorrelatedEntryKernel(const DatabaseMechanism& m,
                                              size_t i, size_t value,
                                              size_t other, size_t y,
                                              double eps);

// Prior with entry marginal `entry` and context kernel `kernel`.
absl::StatusOr<DatabasePrior> PriorFromEntryKernel(const DatabaseMechanism& m,
                                                   size_t i, const Pmf& entry,
                                                   const Channel& kernel);

// The six adversarial formulations whose suprema equal the DP and
// free-lunch parameters.
enum class Formulation {
  // sup over all priors of the conditional entry leakage -> DP.
  kDpConditionalAllPriors,
  // sup over product priors of the conditional entry leakage -> DP.
  kDpConditionalProductPriors,
  // sup over product priors of the entry leakage -> DP.
  kDpEntryProductPriors,
  // sup over all priors of the database leakage -> free lunch.
  kFlpJointAllPriors,
  // sup over product priors of the database leakage -> free lunch.
  kFlpJointProductPriors,
  // sup over all priors of the entry leakage -> free lunch.
  kFlpEntryAllPriors,
};

inline constexpr Formulation kAllFormulations[] = {
    Formulation::kDpConditionalAllPriors,
    Formulation::kDpConditionalProductPriors,
    Formulation::kDpEntryProductPriors,
    Formulation::kFlpJointAllPriors,
    Formulation::kFlpJointProductPriors,
    Formulation::kFlpEntryAllPriors,
};

std::string_view FormulationName(Formulation f);
bool TargetsDp(Formulation f);

// Leakage of the adversarial prior sequence, one value per construction eps.
struct SupremumTrace {
  Formulation formulation;
  std::vector<double> eps;
  std::vector<double> values;
  double target = 0.0;
  double limit_estimate = 0.0;
  double gap = 0.0;
  bool unbounded = false;
  bool monotone = true;
  bool strictly_below = true;
  // Set by VerifyEquivalences, which owns the tolerance.
  bool passed = false;
};

std::vector<double> DefaultEpsSequence();

// Evaluates one formulation along `eps_sequence`, which must be strictly
// decreasing in (0, 1). The pass flag is left unset.
absl::StatusOr<SupremumTrace> PmlSupremum(
    const DatabaseMechanism& m, Formulation formulation,
    const std::vector<double>& eps_sequence);

struct EquivalenceReport {
  double dp_eps = 0.0;
  double flp_eps = 0.0;
  double tolerance = 0.0;
  std::vector<SupremumTrace> traces;
  bool passed = false;
};

// Runs all six formulations. A finite-target trace passes when it is
// nondecreasing, never exceeds the target, stays strictly below a positive
// target and ends within `tol` of it. An infinite-target trace passes when
// it is strictly increasing.
absl::StatusOr<EquivalenceReport> VerifyEquivalences(
    const DatabaseMechanism& m, double tol,
    const std::vector<double>& eps_sequence = DefaultEpsSequence());

}  // namespace pml

#endif  // PML_EQUIVALENCES_H_
