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

#include "pml/distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pml {
namespace {

std::vector<double> LogOf(const std::vector<double>& values) {
  std::vector<double> logs(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    logs[i] = values[i] > 0 ? std::log(values[i])
                            : -std::numeric_limits<double>::infinity();
  }
  return logs;
}

// Validates a probability vector and renormalizes it in place.
absl::Status ValidateAndNormalize(std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("pmf entries must be finite and nonnegative, got ", p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "pmf sum out of tolerance: sum is %.12g, expected 1 within %g", sum,
        kSumTolerance));
  }
  for (double& p : probs) p /= sum;
  return absl::OkStatus();
}

}  // namespace

Pmf::Pmf(Alphabet alphabet, std::vector<double> probs)
    : alphabet_(std::move(alphabet)),
      probs_(std::move(probs)),
      log_probs_(LogOf(probs_)) {}

absl::StatusOr<Pmf> Pmf::Create(Alphabet alphabet, std::vector<double> probs) {
  if (probs.size() != alphabet.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("pmf has ", probs.size(), " probabilities for ",
                     alphabet.size(), " labels"));
  }
  if (absl::Status s = ValidateAndNormalize(probs); !s.ok()) return s;
  return Pmf(std::move(alphabet), std::move(probs));
}

absl::StatusOr<Pmf> Pmf::Create(std::vector<std::string> labels,
                                std::vector<double> probs) {
  absl::StatusOr<Alphabet> alphabet = Alphabet::Create(std::move(labels));
  if (!alphabet.ok()) return alphabet.status();
  return Create(*std::move(alphabet), std::move(probs));
}

Pmf Pmf::Uniform(Alphabet alphabet) {
  const size_t k = alphabet.size();
  return Pmf(std::move(alphabet), std::vector<double>(k, 1.0 / k));
}

Pmf Pmf::FromWeights(Alphabet alphabet, std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) sum += w;
  for (double& w : weights) w /= sum;
  return Pmf(std::move(alphabet), std::move(weights));
}

double Pmf::MaxProb() const {
  return *std::max_element(probs_.begin(), probs_.end());
}

double Pmf::MinProb() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

size_t Pmf::ArgMax() const {
  return static_cast<size_t>(std::max_element(probs_.begin(), probs_.end()) -
                             probs_.begin());
}

Channel::Channel(Alphabet inputs, Alphabet outputs, std::vector<double> probs)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      probs_(std::move(probs)),
      log_probs_(LogOf(probs_)) {}

absl::StatusOr<Channel> Channel::Create(
    Alphabet inputs, Alphabet outputs, std::vector<std::vector<double>> rows) {
  if (rows.size() != inputs.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("channel has ", rows.size(), " rows for ", inputs.size(),
                     " input labels"));
  }
  std::vector<double> flat;
  flat.reserve(inputs.size() * outputs.size());
  for (size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != outputs.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("channel row '", inputs.label(x), "' has ",
                       rows[x].size(), " entries for ", outputs.size(),
                       " output labels"));
    }
    if (absl::Status s = ValidateAndNormalize(rows[x]); !s.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "channel row '", inputs.label(x), "': ", s.message()));
    }
    flat.insert(flat.end(), rows[x].begin(), rows[x].end());
  }
  return Channel(std::move(inputs), std::move(outputs), std::move(flat));
}

absl::StatusOr<Channel> Channel::Create(
    std::vector<std::string> input_labels,
    std::vector<std::string> output_labels,
    std::vector<std::vector<double>> rows) {
  absl::StatusOr<Alphabet> inputs = Alphabet::Create(std::move(input_labels));
  if (!inputs.ok()) return inputs.status();
  absl::StatusOr<Alphabet> outputs =
      Alphabet::Create(std::move(output_labels));
  if (!outputs.ok()) return outputs.status();
  return Create(*std::move(inputs), *std::move(outputs), std::move(rows));
}

Channel Channel::Identity(const Alphabet& alphabet) {
  const size_t k = alphabet.size();
  std::vector<double> flat(k * k, 0.0);
  for (size_t i = 0; i < k; ++i) flat[i * k + i] = 1.0;
  return Channel(alphabet, alphabet, std::move(flat));
}

Channel Channel::Constant(Alphabet inputs, Alphabet outputs, size_t output) {
  const size_t nx = inputs.size();
  const size_t ny = outputs.size();
  std::vector<double> flat(nx * ny, 0.0);
  for (size_t x = 0; x < nx; ++x) flat[x * ny + output] = 1.0;
  return Channel(std::move(inputs), std::move(outputs), std::move(flat));
}

absl::StatusOr<Channel> Channel::FromFunction(Alphabet inputs,
                                              Alphabet outputs,
                                              std::span<const size_t> map) {
  if (map.size() != inputs.size()) {
    return absl::InvalidArgumentError("function map size differs from inputs");
  }
  const size_t ny = outputs.size();
  std::vector<double> flat(inputs.size() * ny, 0.0);
  for (size_t x = 0; x < map.size(); ++x) {
    if (map[x] >= ny) {
      return absl::InvalidArgumentError("function maps outside the outputs");
    }
    flat[x * ny + map[x]] = 1.0;
  }
  return Channel(std::move(inputs), std::move(outputs), std::move(flat));
}

std::vector<std::vector<double>> Channel::Rows() const {
  std::vector<std::vector<double>> rows;
  rows.reserve(num_inputs());
  for (size_t x = 0; x < num_inputs(); ++x) {
    std::span<const double> r = row(x);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

Joint::Joint(Channel channel, Pmf prior, std::vector<double> output_probs)
    : channel_(std::move(channel)),
      prior_(std::move(prior)),
      output_probs_(output_probs),
      output_marginal_(
          Pmf::FromWeights(channel_.outputs(), std::move(output_probs))) {}

absl::StatusOr<Joint> Joint::Create(Channel channel, Pmf prior) {
  if (!(channel.inputs() == prior.alphabet())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: prior alphabet differs from channel inputs");
  }
  std::vector<double> output_probs(channel.num_outputs(), 0.0);
  for (size_t x = 0; x < channel.num_inputs(); ++x) {
    const double px = prior.prob(x);
    if (px == 0.0) continue;
    for (size_t y = 0; y < channel.num_outputs(); ++y) {
      output_probs[y] += channel.prob(x, y) * px;
    }
  }
  return Joint(std::move(channel), std::move(prior), std::move(output_probs));
}

Pmf OutputMarginal(const Joint& joint) { return joint.output_marginal(); }

Pmf Posterior(const Joint& joint, size_t y) {
  const double py = joint.output_prob(y);
  if (py <= 0.0) return joint.prior();
  const Channel& channel = joint.channel();
  std::vector<double> weights(channel.num_inputs());
  for (size_t x = 0; x < channel.num_inputs(); ++x) {
    weights[x] = channel.prob(x, y) * joint.prior().prob(x) / py;
  }
  return Pmf::FromWeights(channel.inputs(), std::move(weights));
}

absl::StatusOr<Pmf> Posterior(const Joint& joint, std::string_view y) {
  absl::StatusOr<size_t> index = joint.channel().outputs().Find(y);
  if (!index.ok()) return index.status();
  return Posterior(joint, *index);
}

absl::StatusOr<Pmf> PushForward(const Channel& kernel, const Pmf& p) {
  if (!(kernel.inputs() == p.alphabet())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: distribution alphabet differs from kernel inputs");
  }
  std::vector<double> weights(kernel.num_outputs(), 0.0);
  for (size_t x = 0; x < kernel.num_inputs(); ++x) {
    const double px = p.prob(x);
    if (px == 0.0) continue;
    for (size_t u = 0; u < kernel.num_outputs(); ++u) {
      weights[u] += kernel.prob(x, u) * px;
    }
  }
  return Pmf::FromWeights(kernel.outputs(), std::move(weights));
}

absl::StatusOr<Channel> Compose(const Channel& first, const Channel& second) {
  if (!(first.outputs() == second.inputs())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: kernels do not compose");
  }
  std::vector<std::vector<double>> rows(
      first.num_inputs(), std::vector<double>(second.num_outputs(), 0.0));
  for (size_t x = 0; x < first.num_inputs(); ++x) {
    for (size_t u = 0; u < first.num_outputs(); ++u) {
      const double pu = first.prob(x, u);
      if (pu == 0.0) continue;
      for (size_t w = 0; w < second.num_outputs(); ++w) {
        rows[x][w] += pu * second.prob(u, w);
      }
    }
  }
  return Channel::Create(first.inputs(), second.outputs(), std::move(rows));
}

}  // namespace pml
