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

#ifndef PML_DISTRIBUTION_H_
#define PML_DISTRIBUTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pml/alphabet.h"

namespace pml {

// Probabilities at or below this value are treated as exact zeros when a
// support set is needed (posterior support, divergence support, disclosure).
inline constexpr double kSupportFloor = 1e-12;

// Maximum deviation of a probability vector's sum from 1 that is silently
// renormalized. Larger deviations are rejected.
inline constexpr double kSumTolerance = 1e-9;

// Finite probability mass function over a labeled alphabet. Each mass is
// stored in both the linear and the log domain. Immutable after creation.
class Pmf {
 public:
  static absl::StatusOr<Pmf> Create(Alphabet alphabet,
                                    std::vector<double> probs);
  static absl::StatusOr<Pmf> Create(std::vector<std::string> labels,
                                    std::vector<double> probs);

  static Pmf Uniform(Alphabet alphabet);

  // Normalizes nonnegative `weights` with a positive sum. Intended for values
  // computed from already-valid distributions; callers guarantee the
  // preconditions.
  static Pmf FromWeights(Alphabet alphabet, std::vector<double> weights);

  const Alphabet& alphabet() const { return alphabet_; }
  size_t size() const { return probs_.size(); }
  double prob(size_t i) const { return probs_[i]; }
  double log_prob(size_t i) const { return log_probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  std::span<const double> log_probs() const { return log_probs_; }

  bool InSupport(size_t i) const { return probs_[i] > kSupportFloor; }
  double MaxProb() const;
  double MinProb() const;
  // Index of the most probable symbol; ties go to the lowest index.
  size_t ArgMax() const;

 private:
  Pmf(Alphabet alphabet, std::vector<double> probs);

  Alphabet alphabet_;
  std::vector<double> probs_;
  std::vector<double> log_probs_;
};

// Row-stochastic kernel from a finite input alphabet to a finite output
// alphabet, stored as a dense row-major matrix.
class Channel {
 public:
  static absl::StatusOr<Channel> Create(Alphabet inputs, Alphabet outputs,
                                        std::vector<std::vector<double>> rows);
  static absl::StatusOr<Channel> Create(std::vector<std::string> input_labels,
                                        std::vector<std::string> output_labels,
                                        std::vector<std::vector<double>> rows);

  static Channel Identity(const Alphabet& alphabet);
  // Every input maps to `output` with probability one.
  static Channel Constant(Alphabet inputs, Alphabet outputs, size_t output);
  // Deterministic kernel: input x maps to outputs[map[x]].
  static absl::StatusOr<Channel> FromFunction(Alphabet inputs,
                                              Alphabet outputs,
                                              std::span<const size_t> map);

  const Alphabet& inputs() const { return inputs_; }
  const Alphabet& outputs() const { return outputs_; }
  size_t num_inputs() const { return inputs_.size(); }
  size_t num_outputs() const { return outputs_.size(); }

  double prob(size_t x, size_t y) const { return probs_[x * num_outputs() + y]; }
  double log_prob(size_t x, size_t y) const {
    return log_probs_[x * num_outputs() + y];
  }
  std::span<const double> row(size_t x) const {
    return std::span<const double>(probs_).subspan(x * num_outputs(),
                                                   num_outputs());
  }
  std::vector<std::vector<double>> Rows() const;

 private:
  Channel(Alphabet inputs, Alphabet outputs, std::vector<double> probs);

  Alphabet inputs_;
  Alphabet outputs_;
  std::vector<double> probs_;
  std::vector<double> log_probs_;
};

// Joint distribution P_XY = P_{Y|X} x P_X, with the output marginal cached.
class Joint {
 public:
  static absl::StatusOr<Joint> Create(Channel channel, Pmf prior);

  const Channel& channel() const { return channel_; }
  const Pmf& prior() const { return prior_; }
  const Pmf& output_marginal() const { return output_marginal_; }
  // Unnormalized marginal sum_x p(y|x) p(x), exactly zero for impossible y.
  double output_prob(size_t y) const { return output_probs_[y]; }

 private:
  Joint(Channel channel, Pmf prior, std::vector<double> output_probs);

  Channel channel_;
  Pmf prior_;
  std::vector<double> output_probs_;
  Pmf output_marginal_;
};

// p_Y(y) = sum_x p(y|x) p(x).
Pmf OutputMarginal(const Joint& joint);

// Bayes posterior P_{X|Y=y}. Outcomes of probability zero return the prior
// unchanged.
Pmf Posterior(const Joint& joint, size_t y);
absl::StatusOr<Pmf> Posterior(const Joint& joint, std::string_view y);

// Composition of a kernel with a distribution on its input alphabet.
absl::StatusOr<Pmf> PushForward(const Channel& kernel, const Pmf& p);

// Kernel composition: X -> U via `first`, then U -> W via `second`.
absl::StatusOr<Channel> Compose(const Channel& first, const Channel& second);

}  // namespace pml

#endif  // PML_DISTRIBUTION_H_
