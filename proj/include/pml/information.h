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

#ifndef PML_INFORMATION_H_
#define PML_INFORMATION_H_

#include "absl/status/statusor.h"
#include "pml/distribution.h"

namespace pml {

// H_inf(p) = -log max_x p(x), in nats.
double MinEntropy(const Pmf& p);

// D_inf(p || q) = log max over the support of p of p(x) / q(x). Returns
// +infinity when q vanishes (at or below kSupportFloor) somewhere on the
// support of p. Fails if the alphabets differ.
absl::StatusOr<double> RenyiDivInf(const Pmf& p, const Pmf& q);

// Binary relative entropy q log(q/r) + (1-q) log((1-q)/(1-r)) with the
// convention 0 log 0 = 0. Requires q in [0, 1] and r in (0, 1).
absl::StatusOr<double> KlBernoulli(double q, double r);

}  // namespace pml

#endif  // PML_INFORMATION_H_
