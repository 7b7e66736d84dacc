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

#ifndef PML_BINOMIAL_H_
#define PML_BINOMIAL_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace pml {

// log P[Bin(n, p) <= m], summed with a streaming log-sum-exp so n in the
// tens of thousands never overflows. Requires 0 <= m <= n and p in (0, 1).
absl::StatusOr<double> LogBinomialCdf(int64_t n, int64_t m, double p);

// log P[Bin(n, p) > m]. Returns -infinity when m == n.
absl::StatusOr<double> LogBinomialSurvival(int64_t n, int64_t m, double p);

absl::StatusOr<double> BinomialCdf(int64_t n, int64_t m, double p);

// exp(-n KL(m/n || p)), an upper bound on P[Bin(n, p) <= m]. Requires
// m / n <= p.
absl::StatusOr<double> ChernoffTailBound(int64_t n, int64_t m, double p);

// The exponent n KL(m/n || p) of the bound above, for callers that need to
// stay in the log domain.
absl::StatusOr<double> ChernoffExponent(int64_t n, int64_t m, double p);

}  // namespace pml

#endif  // PML_BINOMIAL_H_
