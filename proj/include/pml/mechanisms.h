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

#ifndef PML_MECHANISMS_H_
#define PML_MECHANISMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "pml/distribution.h"

namespace pml {

// k-ary randomized response: keep the input with probability `stay`,
// otherwise report one of the other k - 1 symbols uniformly. Labels are
// "0".."k-1". Requires k >= 2 and stay in [1/k, 1).
absl::StatusOr<Channel> RandomizedResponse(size_t k, double stay);

// Deterministic query "are more than m of the n entries positive?" where
// each entry is positive independently with probability p.
struct ThresholdQuerySpec {
  int64_t n = 0;
  int64_t m = 0;
  double p = 0.0;
  int answer = 1;
};

struct ThresholdLeakage {
  // l(X -> answer) = -log P(Y = answer).
  double exact = 0.0;
  // -log(1 - Chernoff tail bound) when the bound's direction holds. Infinite
  // when m/n sits exactly at p and the bound degenerates.
  std::optional<double> chernoff_bound;
  // The requested answer has probability zero; exact is 0 by convention.
  bool impossible_outcome = false;
};

absl::StatusOr<ThresholdLeakage> ThresholdQueryLeakage(
    const ThresholdQuerySpec& spec);

// Counting query sum_i f(d_i) / n released with Laplace noise of scale b,
// with f(D_i) i.i.d. Bernoulli(p). Let t = 1 / (n b).

// Leakage at outcomes above 1: t - log((1 - p) + p e^t).
absl::StatusOr<double> LaplaceUpperTailLeakage(int64_t n, double b, double p);
// Leakage at outcomes below 0: t - log(p + (1 - p) e^t).
absl::StatusOr<double> LaplaceLowerTailLeakage(int64_t n, double b, double p);

// sup over y of l(D_i -> y): the larger of the two tails.
absl::StatusOr<double> LaplaceCountingLeakageExact(int64_t n, double b,
                                                   double p);

// sup over p in (c, 1 - c) of the exact leakage, reached at the endpoints:
// t - log((1 - c) + c e^t). Requires c in [0, 0.5).
absl::StatusOr<double> LaplaceCountingLeakageBound(int64_t n, double b,
                                                   double c);

// (1 - c) t + c^2 t^2 / 2, an upper bound on the above for n b >= 1.
absl::StatusOr<double> LaplaceCountingLeakageSimplified(int64_t n, double b,
                                                        double c);

// Largest database size accepted by LaplaceCountingPmlAtY.
inline constexpr int64_t kMaxLaplaceOracleN = 5000;

// l(D_1 -> y) from exact binomial-weighted sums of Laplace densities.
absl::StatusOr<double> LaplaceCountingPmlAtY(int64_t n, double b, double p,
                                             double y);

}  // namespace pml

#endif  // PML_MECHANISMS_H_
