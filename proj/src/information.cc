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

#include "pml/information.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pml {

double MinEntropy(const Pmf& p) {
  // Written as a negated log so a degenerate pmf gives +0, not -0.
  return 0.0 - std::log(p.MaxProb());
}

absl::StatusOr<double> RenyiDivInf(const Pmf& p, const Pmf& q) {
  if (!(p.alphabet() == q.alphabet())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch in Renyi divergence");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < p.size(); ++i) {
    if (!p.InSupport(i)) continue;
    if (!q.InSupport(i)) return std::numeric_limits<double>::infinity();
    best = std::max(best, p.log_prob(i) - q.log_prob(i));
  }
  return std::max(best, 0.0);
}

absl::StatusOr<double> KlBernoulli(double q, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("KL reference probability must lie in (0, 1), got ", r));
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("KL probability must lie in [0, 1], got ", q));
  }
  double kl = 0.0;
  if (q > 0.0) kl += q * std::log(q / r);
  if (q < 1.0) kl += (1.0 - q) * std::log((1.0 - q) / (1.0 - r));
  return std::max(kl, 0.0);
}

}  // namespace pml
