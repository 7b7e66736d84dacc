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

#ifndef PML_LEAKAGE_H_
#define PML_LEAKAGE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/distribution.h"

namespace pml {

// Per-outcome pointwise maximal leakage of a joint distribution.
struct LeakageProfile {
  // (output label, leakage in nats), in output alphabet order.
  std::vector<std::pair<std::string, double>> per_outcome;
  double sup = 0.0;
  // Lexicographically first label attaining the sup (within 1e-12).
  std::string witness;
  size_t witness_index = 0;
};

// l(X -> y) = D_inf(P_{X|Y=y} || P_X), computed as
// max_x log p(y|x) - log p_Y(y) over the prior's support. Outcomes of
// probability zero leak nothing.
double Pml(const Joint& joint, size_t y);
absl::StatusOr<double> Pml(const Joint& joint, std::string_view y);

LeakageProfile PmlProfile(const Joint& joint);

// Leakage about one randomized function U of X, measured by the MAP guessing
// gain log(max_u p_{U|Y=y}(u) / max_u p_U(u)). Never exceeds Pml(joint, y).
absl::StatusOr<double> PmlRandomizedFunctionLower(const Joint& joint,
                                                  size_t y,
                                                  const Channel& u_kernel);

// D_inf(P_{X|Y=y,Z=z} || P_{X|Z=z}) for one fixed side-information value z.
// The caller supplies the conditional channel and conditional prior.
absl::StatusOr<double> ConditionalPml(const Channel& channel_given_z,
                                      const Pmf& prior_given_z, size_t y);

// log sup_y max_{x,x'} p(y|x) / p(y|x'). Infinite when some output has a
// zero entry in one row and a positive entry in another.
double LeakageCapacity(const Channel& channel);

// log(1 / min_d p(d)). Fails if the pmf has a zero mass.
absl::StatusOr<double> EpsilonMax(const Pmf& marginal);

// Joint of (U, Y) for the Markov chain U - X - Y formed by `u_kernel` and
// `joint`. Rows for attribute values of probability zero copy the output
// marginal.
absl::StatusOr<Joint> AttributeJoint(const Joint& joint,
                                     const Channel& u_kernel);

}  // namespace pml

#endif  // PML_LEAKAGE_H_
