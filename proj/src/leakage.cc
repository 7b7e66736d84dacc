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

#include "pml/leakage.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pml {
namespace {

constexpr double kWitnessTieTolerance = 1e-12;

}  // namespace

double Pml(const Joint& joint, size_t y) {
  const double py = joint.output_prob(y);
  if (py <= 0.0) return 0.0;
  const double log_py = std::log(py);
  const Channel& channel = joint.channel();
  double best = 0.0;
  for (size_t x = 0; x < channel.num_inputs(); ++x) {
    // Exact positivity: adversarial priors put masses far below the support
    // floor on some symbols and those symbols still count.
    if (joint.prior().prob(x) <= 0.0) continue;
    best = std::max(best, channel.log_prob(x, y) - log_py);
  }
  return best;
}

absl::StatusOr<double> Pml(const Joint& joint, std::string_view y) {
  absl::StatusOr<size_t> index = joint.channel().outputs().Find(y);
  if (!index.ok()) return index.status();
  return Pml(joint, *index);
}

LeakageProfile PmlProfile(const Joint& joint) {
  LeakageProfile profile;
  const Alphabet& outputs = joint.channel().outputs();
  profile.per_outcome.reserve(outputs.size());
  double sup = 0.0;
  for (size_t y = 0; y < outputs.size(); ++y) {
    const double value = Pml(joint, y);
    profile.per_outcome.emplace_back(outputs.label(y), value);
    sup = std::max(sup, value);
  }
  profile.sup = sup;
  bool found = false;
  for (size_t y = 0; y < outputs.size(); ++y) {
    if (profile.per_outcome[y].second < sup - kWitnessTieTolerance) continue;
    if (!found || outputs.label(y) < profile.witness) {
      profile.witness = outputs.label(y);
      profile.witness_index = y;
      found = true;
    }
  }
  return profile;
}

absl::StatusOr<double> PmlRandomizedFunctionLower(const Joint& joint,
                                                  size_t y,
                                                  const Channel& u_kernel) {
  if (!(u_kernel.inputs() == joint.prior().alphabet())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: attribute kernel inputs differ from the prior");
  }
  if (y >= joint.channel().num_outputs()) {
    return absl::InvalidArgumentError("output index out of range");
  }
  absl::StatusOr<Pmf> p_u = PushForward(u_kernel, joint.prior());
  if (!p_u.ok()) return p_u.status();
  absl::StatusOr<Pmf> post_u = PushForward(u_kernel, Posterior(joint, y));
  if (!post_u.ok()) return post_u.status();
  return std::log(post_u->MaxProb()) - std::log(p_u->MaxProb());
}

absl::StatusOr<double> ConditionalPml(const Channel& channel_given_z,
                                      const Pmf& prior_given_z, size_t y) {
  if (y >= channel_given_z.num_outputs()) {
    return absl::InvalidArgumentError("output index out of range");
  }
  absl::StatusOr<Joint> joint = Joint::Create(channel_given_z, prior_given_z);
  if (!joint.ok()) return joint.status();
  return Pml(*joint, y);
}

double LeakageCapacity(const Channel& channel) {
  double best = 0.0;
  for (size_t y = 0; y < channel.num_outputs(); ++y) {
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (size_t x = 0; x < channel.num_inputs(); ++x) {
      hi = std::max(hi, channel.prob(x, y));
      lo = std::min(lo, channel.prob(x, y));
    }
    if (hi <= 0.0) continue;
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    best = std::max(best, std::log(hi) - std::log(lo));
  }
  return best;
}

absl::StatusOr<double> EpsilonMax(const Pmf& marginal) {
  const double min_prob = marginal.MinProb();
  if (min_prob <= 0.0) {
    return absl::InvalidArgumentError(
        "epsilon_max needs a full-support marginal");
  }
  return -std::log(min_prob);
}

absl::StatusOr<Joint> AttributeJoint(const Joint& joint,
                                     const Channel& u_kernel) {
  if (!(u_kernel.inputs() == joint.prior().alphabet())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: attribute kernel inputs differ from the prior");
  }
  const Channel& channel = joint.channel();
  const Pmf& prior = joint.prior();
  const size_t nu = u_kernel.num_outputs();
  const size_t ny = channel.num_outputs();
  // joint_uy[u][y] = sum_x p(u|x) p(x) p(y|x)
  std::vector<std::vector<double>> rows(nu, std::vector<double>(ny, 0.0));
  std::vector<double> p_u(nu, 0.0);
  for (size_t x = 0; x < channel.num_inputs(); ++x) {
    const double px = prior.prob(x);
    if (px <= 0.0) continue;
    for (size_t u = 0; u < nu; ++u) {
      const double pxu = px * u_kernel.prob(x, u);
      if (pxu <= 0.0) continue;
      p_u[u] += pxu;
      for (size_t y = 0; y < ny; ++y) rows[u][y] += pxu * channel.prob(x, y);
    }
  }
  for (size_t u = 0; u < nu; ++u) {
    if (p_u[u] <= 0.0) {
      for (size_t y = 0; y < ny; ++y) rows[u][y] = joint.output_prob(y);
    }
    double sum = 0.0;
    for (double v : rows[u]) sum += v;
    for (double& v : rows[u]) v /= sum;
  }
  absl::StatusOr<Channel> uy = Channel::Create(
      u_kernel.outputs(), channel.outputs(), std::move(rows));
  if (!uy.ok()) return uy.status();
  return Joint::Create(*std::move(uy),
                       Pmf::FromWeights(u_kernel.outputs(), std::move(p_u)));
}

}  // namespace pml
