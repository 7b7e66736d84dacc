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

#ifndef PML_VERIFICATION_H_
#define PML_VERIFICATION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pml/database.h"
#include "pml/distribution.h"
#include "pml/io.h"

namespace pml {

// Property suites that check the library's guarantees on concrete or
// randomly generated instances.
enum class Suite {
  // MAP gain about any function of X and leakage about it never exceed
  // the leakage about X.
  kDominance,
  // H(P_{U|Y=y}) >= H(P_U) - l(X -> y) for every attribute and outcome.
  kPosteriorEntropyFloor,
  // Same with the sup leakage, and no exact disclosure when H(P_U) > sup.
  kDisclosurePrevention,
  // The constructed low-entropy attribute inherits disclosure.
  kLowEntropyAttribute,
  // Posterior min-entropy of deterministic features stays above the
  // capacity floor.
  kCapacityFloor,
  // The min-cost mechanism's leakage and exact disclosure, and the leakage
  // floor for mechanisms of infinite capacity.
  kMinCostDisclosure,
  // Adversarial prior sequences converge to the DP parameter.
  kDpEquivalence,
  // Adversarial prior sequences converge to the free-lunch parameter.
  kFlpEquivalence,
  // No member of those sequences attains its target.
  kNonAttainment,
  // A mechanism certified below H(P_X) does not single out X.
  kSinglingOut,
};

std::string_view SuiteName(Suite suite);

struct SuiteReport {
  std::string name;
  size_t instances = 0;
  size_t checks = 0;
  size_t violations = 0;
  // Descriptions of the first few violations.
  std::vector<std::string> failures;

  bool passed() const { return violations == 0 && checks > 0; }
  void Record(bool ok, absl::FunctionRef<std::string()> describe);
};

struct VerifyOptions {
  double tolerance = 1e-9;
  double equivalence_tolerance = 1e-4;
  std::vector<double> eps_sequence = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
};

// Per-instance checks. Each appends its checks to `report`.
void CheckDominance(const Joint& joint, double tol, SuiteReport& report);
void CheckPosteriorEntropyFloor(const Joint& joint,
                                const std::vector<Channel>& kernels,
                                double tol, SuiteReport& report);
void CheckDisclosurePrevention(const Joint& joint,
                               const std::vector<Channel>& kernels, double tol,
                               SuiteReport& report);
// `lambda_fraction` in (0, 1) places lambda between the admissible threshold
// and 1. `level` is the disclosure level whose inheritance is checked.
absl::Status CheckLowEntropyAttribute(const Channel& channel,
                                      const Pmf& true_prior,
                                      const Pmf& adversary_prior,
                                      const Channel& u_kernel, double level,
                                      double lambda_fraction,
                                      SuiteReport& report);
void CheckCapacityFloor(const Joint& joint, double tol, SuiteReport& report);
absl::Status CheckMinCostDisclosure(const Pmf& prior, double alpha,
                                    SuiteReport& report);
void CheckInfiniteCapacityFloor(const Joint& joint, double tol,
                                SuiteReport& report);
absl::Status CheckEquivalences(const DatabaseMechanism& m, Suite suite,
                               const VerifyOptions& options,
                               SuiteReport& report);
absl::Status CheckSinglingOut(const Joint& joint, double tol,
                              SuiteReport& report);

// Runs `suite` on `count` instances drawn from a generator seeded with
// `seed`.
absl::StatusOr<SuiteReport> RunRandomSuite(Suite suite, uint64_t seed,
                                           size_t count,
                                           const VerifyOptions& options);

// Runs `suite` on one parsed instance.
absl::StatusOr<SuiteReport> RunInstanceSuite(Suite suite,
                                             const Instance& instance,
                                             const VerifyOptions& options);

}  // namespace pml

#endif  // PML_VERIFICATION_H_
