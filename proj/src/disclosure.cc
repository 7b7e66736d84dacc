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

#include "pml/disclosure.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pml {

absl::StatusOr<DisclosureResult> DetectDisclosure(const Channel& channel,
                                                  const Pmf& adversary_prior,
                                                  const Channel& u_kernel,
                                                  double threshold) {
  if (!(threshold >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("disclosure threshold must be >= 0, got ", threshold));
  }
  if (!(u_kernel.inputs() == channel.inputs())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: attribute kernel inputs differ from the mechanism");
  }
  absl::StatusOr<Joint> joint = Joint::Create(channel, adversary_prior);
  if (!joint.ok()) return joint.status();

  DisclosureResult result;
  bool found = false;
  for (size_t y = 0; y < channel.num_outputs(); ++y) {
    if (joint->output_prob(y) <= 0.0) continue;
    absl::StatusOr<Pmf> q_u = PushForward(u_kernel, Posterior(*joint, y));
    if (!q_u.ok()) return q_u.status();
    DisclosureWitness w;
    w.y_index = y;
    w.y = channel.outputs().label(y);
    w.u_index = q_u->ArgMax();
    w.u = q_u->alphabet().label(w.u_index);
    w.exact_zero = true;
    for (size_t u = 0; u < q_u->size(); ++u) {
      if (u != w.u_index && q_u->InSupport(u)) w.exact_zero = false;
    }
    w.posterior_mass = w.exact_zero ? 1.0 : q_u->prob(w.u_index);
    w.posterior_entropy = w.exact_zero ? 0.0 : -std::log(w.posterior_mass);
    if (!found || w.posterior_entropy < result.witness.posterior_entropy) {
      result.witness = std::move(w);
      found = true;
    }
  }
  result.disclosed = result.witness.posterior_entropy < threshold;
  return result;
}

absl::StatusOr<DisclosureResult> DetectSingleOut(const Channel& channel,
                                                 const Pmf& prior,
                                                 double threshold) {
  return DetectDisclosure(channel, prior, Channel::Identity(channel.inputs()),
                          threshold);
}

absl::StatusOr<double> PosteriorEntropyFloor(double prior_entropy_u,
                                             double pml_at_y) {
  if (!(prior_entropy_u >= 0.0) || !(pml_at_y >= 0.0)) {
    return absl::InvalidArgumentError(
        "entropy and leakage arguments must be nonnegative");
  }
  return std::max(0.0, prior_entropy_u - pml_at_y);
}

absl::StatusOr<double> CapacityEntropyFloor(const Pmf& adversary_prior,
                                            double capacity) {
  if (!(capacity >= 0.0)) {
    return absl::InvalidArgumentError("capacity must be nonnegative");
  }
  if (adversary_prior.size() < 2) {
    return absl::InvalidArgumentError(
        "entropy floor needs at least two symbols");
  }
  const double q_min = adversary_prior.MinProb();
  if (!(q_min > 0.0)) {
    return absl::InvalidArgumentError(
        "entropy floor needs a full-support adversary prior");
  }
  if (std::isinf(capacity)) return 0.0;
  return std::log1p(q_min / (1.0 - q_min) * std::exp(-capacity));
}

absl::StatusOr<double> LowEntropyLambdaThreshold(const Pmf& p_u,
                                                 size_t disclosed) {
  if (disclosed >= p_u.size()) {
    return absl::InvalidArgumentError("disclosed symbol out of range");
  }
  const double pd = p_u.prob(disclosed);
  if (!(pd < 1.0)) {
    return absl::InvalidArgumentError(
        "disclosed symbol already has probability one");
  }
  return (p_u.MaxProb() - pd) / (1.0 - pd);
}

absl::StatusOr<Channel> ConstructLowEntropyAttribute(const Pmf& p_u,
                                                     size_t disclosed,
                                                     double lambda) {
  absl::StatusOr<double> threshold = LowEntropyLambdaThreshold(p_u, disclosed);
  if (!threshold.ok()) return threshold.status();
  if (!(lambda > 0.0 && lambda < 1.0) || !(lambda > *threshold)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "lambda must lie in (0, 1) and exceed the threshold %.6f, got %g",
        *threshold, lambda));
  }
  const size_t k = p_u.size();
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
  for (size_t u = 0; u < k; ++u) {
    if (u == disclosed) {
      rows[u][u] = 1.0;
    } else {
      rows[u][disclosed] = lambda;
      rows[u][u] = 1.0 - lambda;
    }
  }
  return Channel::Create(p_u.alphabet(), p_u.alphabet(), std::move(rows));
}

absl::StatusOr<MinCostConstruction> ConstructMinCostDisclosure(const Pmf& prior,
                                                               double alpha) {
  if (prior.size() < 2 || !(prior.MinProb() > 0.0)) {
    return absl::InvalidArgumentError(
        "min-cost construction needs a full-support prior on two or more "
        "symbols");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must lie in (0, 1), got ", alpha));
  }
  const double p_min = prior.MinProb();
  size_t x_min = prior.size();
  for (size_t x = 0; x < prior.size(); ++x) {
    if (prior.prob(x) != p_min) continue;
    if (x_min == prior.size() ||
        prior.alphabet().label(x) < prior.alphabet().label(x_min)) {
      x_min = x;
    }
  }
  if (alpha * (1.0 - p_min) > p_min) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "alpha %g too large: need alpha * (1 - p_min) <= p_min, i.e. alpha <= "
        "%.6f",
        alpha, p_min / (1.0 - p_min)));
  }
  const Alphabet binary = *Alphabet::Create({"0", "1"});
  std::vector<std::vector<double>> mech_rows;
  std::vector<std::vector<double>> attr_rows;
  for (size_t x = 0; x < prior.size(); ++x) {
    if (x == x_min) {
      mech_rows.push_back({0.0, 1.0});
      attr_rows.push_back({1.0, 0.0});
    } else {
      mech_rows.push_back({alpha, 1.0 - alpha});
      attr_rows.push_back({0.0, 1.0});
    }
  }
  absl::StatusOr<Channel> mechanism =
      Channel::Create(prior.alphabet(), binary, std::move(mech_rows));
  if (!mechanism.ok()) return mechanism.status();
  absl::StatusOr<Channel> attribute =
      Channel::Create(prior.alphabet(), binary, std::move(attr_rows));
  if (!attribute.ok()) return attribute.status();
  return MinCostConstruction{*std::move(mechanism), *std::move(attribute),
                             x_min, p_min};
}

}  // namespace pml
