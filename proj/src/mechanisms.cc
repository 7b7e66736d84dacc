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

#include "pml/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pml/binomial.h"

namespace pml {
namespace {

absl::Status CheckLaplace(int64_t n, double b) {
  if (n < 1) {
    return absl::InvalidArgumentError(absl::StrCat("n must be >= 1, got ", n));
  }
  if (!(b > 0.0) || std::isinf(b)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Laplace scale b must be positive, got ", b));
  }
  return absl::OkStatus();
}

absl::Status CheckOpenUnit(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("p must lie in (0, 1), got ", p));
  }
  return absl::OkStatus();
}

absl::Status CheckC(double c) {
  if (!(c >= 0.0 && c < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("c must lie in [0, 0.5), got ", c));
  }
  return absl::OkStatus();
}

double InverseScale(int64_t n, double b) {
  return 1.0 / (static_cast<double>(n) * b);
}

// t - log(1 + w (e^t - 1)) = t - log((1 - w) + w e^t); exact at w = 0.
double TailLeakage(double t, double w) {
  return t - std::log1p(w * std::expm1(t));
}

double LogSumExp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

absl::StatusOr<Channel> RandomizedResponse(size_t k, double stay) {
  if (k < 2) {
    return absl::InvalidArgumentError("randomized response needs k >= 2");
  }
  const double floor = 1.0 / static_cast<double>(k);
  if (!(stay >= floor && stay < 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "stay probability must lie in [1/k, 1), got ", stay));
  }
  const double move = (1.0 - stay) / static_cast<double>(k - 1);
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, move));
  for (size_t x = 0; x < k; ++x) rows[x][x] = stay;
  const Alphabet labels = Alphabet::Indexed(k);
  return Channel::Create(labels, labels, std::move(rows));
}

absl::StatusOr<ThresholdLeakage> ThresholdQueryLeakage(
    const ThresholdQuerySpec& spec) {
  if (spec.answer != 0 && spec.answer != 1) {
    return absl::InvalidArgumentError("answer must be 0 or 1");
  }
  const int64_t n = spec.n;
  const int64_t m = spec.m;
  const double p = spec.p;
  ThresholdLeakage out;
  if (spec.answer == 1) {
    // P(Y = 1) = P(S > m).
    absl::StatusOr<double> log_survival = LogBinomialSurvival(n, m, p);
    if (!log_survival.ok()) return log_survival.status();
    if (std::isinf(*log_survival)) {
      out.impossible_outcome = true;
      return out;
    }
    out.exact = -*log_survival;
    if (static_cast<double>(m) / static_cast<double>(n) <= p) {
      absl::StatusOr<double> e = ChernoffExponent(n, m, p);
      if (!e.ok()) return e.status();
      out.chernoff_bound = -std::log1p(-std::exp(-*e));
    }
  } else {
    // P(Y = 0) = P(S <= m); its complement is a lower tail of n - S.
    absl::StatusOr<double> log_cdf = LogBinomialCdf(n, m, p);
    if (!log_cdf.ok()) return log_cdf.status();
    out.exact = -*log_cdf;
    if (m < n && static_cast<double>(m + 1) / static_cast<double>(n) >= p) {
      absl::StatusOr<double> e = ChernoffExponent(n, n - m - 1, 1.0 - p);
      if (!e.ok()) return e.status();
      out.chernoff_bound = -std::log1p(-std::exp(-*e));
    }
  }
  out.exact = std::max(out.exact, 0.0);
  return out;
}

absl::StatusOr<double> LaplaceUpperTailLeakage(int64_t n, double b, double p) {
  if (absl::Status s = CheckLaplace(n, b); !s.ok()) return s;
  if (absl::Status s = CheckOpenUnit(p); !s.ok()) return s;
  return TailLeakage(InverseScale(n, b), p);
}

absl::StatusOr<double> LaplaceLowerTailLeakage(int64_t n, double b, double p) {
  if (absl::Status s = CheckLaplace(n, b); !s.ok()) return s;
  if (absl::Status s = CheckOpenUnit(p); !s.ok()) return s;
  return TailLeakage(InverseScale(n, b), 1.0 - p);
}

absl::StatusOr<double> LaplaceCountingLeakageExact(int64_t n, double b,
                                                   double p) {
  absl::StatusOr<double> upper = LaplaceUpperTailLeakage(n, b, p);
  if (!upper.ok()) return upper.status();
  absl::StatusOr<double> lower = LaplaceLowerTailLeakage(n, b, p);
  if (!lower.ok()) return lower.status();
  return std::max(*upper, *lower);
}

absl::StatusOr<double> LaplaceCountingLeakageBound(int64_t n, double b,
                                                   double c) {
  if (absl::Status s = CheckLaplace(n, b); !s.ok()) return s;
  if (absl::Status s = CheckC(c); !s.ok()) return s;
  return TailLeakage(InverseScale(n, b), c);
}

absl::StatusOr<double> LaplaceCountingLeakageSimplified(int64_t n, double b,
                                                        double c) {
  if (absl::Status s = CheckLaplace(n, b); !s.ok()) return s;
  if (absl::Status s = CheckC(c); !s.ok()) return s;
  const double t = InverseScale(n, b);
  return (1.0 - c) * t + c * c * t * t / 2.0;
}

absl::StatusOr<double> LaplaceCountingPmlAtY(int64_t n, double b, double p,
                                             double y) {
  if (absl::Status s = CheckLaplace(n, b); !s.ok()) return s;
  if (absl::Status s = CheckOpenUnit(p); !s.ok()) return s;
  if (n > kMaxLaplaceOracleN) {
    return absl::InvalidArgumentError(absl::StrCat(
        "exact Laplace oracle supports n <= ", kMaxLaplaceOracleN, ", got ",
        n));
  }
  if (!std::isfinite(y)) {
    return absl::InvalidArgumentError("outcome y must be finite");
  }
  // log f(y | d_1) up to the common 1/(2b) factor, for d_1 in {0, 1}.
  const int64_t rest = n - 1;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double nd = static_cast<double>(n);
  double log_f[2];
  for (int d = 0; d < 2; ++d) {
    double acc = -std::numeric_limits<double>::infinity();
    for (int64_t s = 0; s <= rest; ++s) {
      const double log_w = std::lgamma(rest + 1.0) - std::lgamma(s + 1.0) -
                           std::lgamma(rest - s + 1.0) + s * log_p +
                           (rest - s) * log_q;
      const double mean = static_cast<double>(d + s) / nd;
      acc = LogSumExp(acc, log_w - std::abs(y - mean) / b);
    }
    log_f[d] = acc;
  }
  const double log_marginal = LogSumExp(log_q + log_f[0], log_p + log_f[1]);
  return std::max(0.0, std::max(log_f[0], log_f[1]) - log_marginal);
}

}  // namespace pml
