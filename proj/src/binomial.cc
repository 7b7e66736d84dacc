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

#include "pml/binomial.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pml/information.h"

namespace pml {
namespace {

absl::Status CheckArgs(int64_t n, int64_t m, double p) {
  if (n < 1) {
    return absl::InvalidArgumentError(absl::StrCat("n must be >= 1, got ", n));
  }
  if (m < 0 || m > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("m must lie in [0, n], got m=", m, " n=", n));
  }
  if (!(p > 0.0 && p < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("p must lie in (0, 1), got ", p));
  }
  return absl::OkStatus();
}

double LogBinomialPmf(int64_t n, int64_t k, double log_p, double log_q) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0) + k * log_p + (n - k) * log_q;
}

// log sum_{k=lo}^{hi} C(n,k) p^k (1-p)^(n-k). Terms are generated by the
// ratio recurrence from an lgamma anchor and accumulated with a running
// maximum, which keeps every intermediate in range.
double LogBinomialRange(int64_t n, int64_t lo, int64_t hi, double p) {
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double term = LogBinomialPmf(n, lo, log_p, log_q);
  double running_max = term;
  double scaled_sum = 1.0;  // sum of exp(term_k - running_max)
  for (int64_t k = lo + 1; k <= hi; ++k) {
    term += std::log(static_cast<double>(n - k + 1)) -
            std::log(static_cast<double>(k)) + log_p - log_q;
    if (term > running_max) {
      scaled_sum = scaled_sum * std::exp(running_max - term) + 1.0;
      running_max = term;
    } else {
      scaled_sum += std::exp(term - running_max);
    }
  }
  return running_max + std::log(scaled_sum);
}

}  // namespace

absl::StatusOr<double> LogBinomialCdf(int64_t n, int64_t m, double p) {
  if (absl::Status s = CheckArgs(n, m, p); !s.ok()) return s;
  if (m == n) return 0.0;
  // Sum the smaller tail directly and complement only when that tail is
  // the lower one, so tiny CDF values keep full relative precision.
  const double mean = n * p;
  if (m <= mean) return std::min(0.0, LogBinomialRange(n, 0, m, p));
  const double log_upper = LogBinomialRange(n, m + 1, n, p);
  return std::log1p(-std::exp(log_upper));
}

absl::StatusOr<double> LogBinomialSurvival(int64_t n, int64_t m, double p) {
  if (absl::Status s = CheckArgs(n, m, p); !s.ok()) return s;
  if (m == n) return -std::numeric_limits<double>::infinity();
  const double mean = n * p;
  if (m + 1 >= mean) return std::min(0.0, LogBinomialRange(n, m + 1, n, p));
  const double log_lower = LogBinomialRange(n, 0, m, p);
  return std::log1p(-std::exp(log_lower));
}

absl::StatusOr<double> BinomialCdf(int64_t n, int64_t m, double p) {
  absl::StatusOr<double> log_cdf = LogBinomialCdf(n, m, p);
  if (!log_cdf.ok()) return log_cdf.status();
  return std::exp(*log_cdf);
}

absl::StatusOr<double> ChernoffExponent(int64_t n, int64_t m, double p) {
  if (absl::Status s = CheckArgs(n, m, p); !s.ok()) return s;
  const double ratio = static_cast<double>(m) / static_cast<double>(n);
  if (ratio > p) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Chernoff tail bound needs m/n <= p, got m/n=", ratio, " p=", p));
  }
  absl::StatusOr<double> kl = KlBernoulli(ratio, p);
  if (!kl.ok()) return kl.status();
  return n * *kl;
}

absl::StatusOr<double> ChernoffTailBound(int64_t n, int64_t m, double p) {
  absl::StatusOr<double> exponent = ChernoffExponent(n, m, p);
  if (!exponent.ok()) return exponent.status();
  return std::exp(-*exponent);
}

}  // namespace pml
