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

#ifndef PML_DISCLOSURE_H_
#define PML_DISCLOSURE_H_

#include <cstddef>
#include <string>

#include "absl/status/statusor.h"
#include "pml/distribution.h"

namespace pml {

// The outcome with the smallest posterior min-entropy about an attribute.
struct DisclosureWitness {
  size_t y_index = 0;
  std::string y;
  size_t u_index = 0;
  std::string u;
  // Posterior mass of the MAP attribute value at y.
  double posterior_mass = 0.0;
  double posterior_entropy = 0.0;
  // All other attribute values have posterior mass at or below
  // kSupportFloor; mass and entropy are then reported as exactly 1 and 0.
  bool exact_zero = false;
};

struct DisclosureResult {
  bool disclosed = false;
  DisclosureWitness witness;
};

// Searches the outcomes of positive probability for the smallest
// H_inf(Q_{U|Y=y}) under the adversary's prior. Disclosure is declared when
// that entropy falls strictly below `threshold`, which must be >= 0.
absl::StatusOr<DisclosureResult> DetectDisclosure(const Channel& channel,
                                                  const Pmf& adversary_prior,
                                                  const Channel& u_kernel,
                                                  double threshold);

// Disclosure of X itself.
absl::StatusOr<DisclosureResult> DetectSingleOut(const Channel& channel,
                                                 const Pmf& prior,
                                                 double threshold);

// max(0, H_inf(P_U) - l(X -> y)): a lower bound on H_inf(P_{U|Y=y}).
absl::StatusOr<double> PosteriorEntropyFloor(double prior_entropy_u,
                                             double pml_at_y);

// log(1 + q_min / (1 - q_min) * exp(-capacity)): the posterior min-entropy
// every deterministic non-constant function of X keeps at every outcome.
// Infinite capacity gives 0.
absl::StatusOr<double> CapacityEntropyFloor(const Pmf& adversary_prior,
                                            double capacity);

// Smallest admissible lambda for ConstructLowEntropyAttribute:
// (max_u p_U(u) - p_U(d)) / (1 - p_U(d)).
absl::StatusOr<double> LowEntropyLambdaThreshold(const Pmf& p_u,
                                                 size_t disclosed);

// Kernel P_{W|U} over the alphabet of U. Row `disclosed` is degenerate on
// itself and every other row u puts lambda on `disclosed` and 1 - lambda on
// u. Requires lambda in (0, 1) strictly above the threshold above, which
// makes H_inf(P_W) < H_inf(P_U).
absl::StatusOr<Channel> ConstructLowEntropyAttribute(const Pmf& p_u,
                                                     size_t disclosed,
                                                     double lambda);

struct MinCostConstruction {
  // Binary outputs "0" and "1": p(0|x_min) = 0 and p(0|x) = alpha otherwise.
  Channel mechanism;
  // U = 1{X != x_min} with labels "0" and "1".
  Channel attribute;
  size_t x_min = 0;
  double p_min = 0.0;
};

// Mechanism of least leakage that still discloses an attribute exactly.
// x_min is the least likely symbol, ties broken by the lexicographically
// first label. Its leakage is log(1 / (1 - p_min)) at y = 0, which is the
// sup only when alpha (1 - p_min) <= p_min; larger alpha is rejected.
absl::StatusOr<MinCostConstruction> ConstructMinCostDisclosure(const Pmf& prior,
                                                               double alpha);

}  // namespace pml

#endif  // PML_DISCLOSURE_H_
