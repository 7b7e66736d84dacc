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

#include "pml/random_instances.h"

#include <algorithm>
#include <utility>

namespace pml {
namespace {

Channel MakeChannel(const Alphabet& inputs, size_t num_outputs,
                    std::vector<std::vector<double>> rows) {
  for (auto& row : rows) {
    double sum = 0.0;
    for (double v : row) sum += v;
    for (double& v : row) v /= sum;
  }
  return *Channel::Create(inputs, Alphabet::Indexed(num_outputs),
                          std::move(rows));
}

}  // namespace

size_t InstanceGenerator::Size(size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(engine_);
}

double InstanceGenerator::Uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::vector<double> InstanceGenerator::Row(size_t k, double lo) {
  std::vector<double> row(k);
  for (double& v : row) v = Uniform(lo, 1.0);
  return row;
}

Pmf InstanceGenerator::RandomPmf(size_t k) {
  return RandomPmf(Alphabet::Indexed(k));
}

Pmf InstanceGenerator::RandomPmf(const Alphabet& alphabet) {
  return Pmf::FromWeights(alphabet, Row(alphabet.size(), 0.05));
}

Channel InstanceGenerator::RandomChannel(const Alphabet& inputs,
                                         size_t num_outputs, double lo) {
  std::vector<std::vector<double>> rows;
  for (size_t x = 0; x < inputs.size(); ++x) {
    rows.push_back(Row(num_outputs, lo));
  }
  return MakeChannel(inputs, num_outputs, std::move(rows));
}

Channel InstanceGenerator::RandomSparseChannel(const Alphabet& inputs,
                                               size_t num_outputs) {
  std::vector<std::vector<double>> rows;
  for (size_t x = 0; x < inputs.size(); ++x) {
    std::vector<double> row = Row(num_outputs, 0.05);
    for (double& v : row) {
      if (Size(0, 2) == 0) v = 0.0;
    }
    bool any = false;
    for (double v : row) any = any || v > 0.0;
    if (!any) row[Size(0, num_outputs - 1)] = Uniform(0.05, 1.0);
    rows.push_back(std::move(row));
  }
  return MakeChannel(inputs, num_outputs, std::move(rows));
}

Channel InstanceGenerator::RandomInfiniteCapacityChannel(const Alphabet& inputs,
                                                         size_t num_outputs) {
  std::vector<std::vector<double>> rows;
  for (size_t x = 0; x < inputs.size(); ++x) {
    std::vector<double> row = Row(num_outputs, 0.05);
    for (double& v : row) {
      if (Size(0, 3) == 0) v = 0.0;
    }
    rows.push_back(std::move(row));
  }
  // Force one zero opposite a positive entry, then repair empty rows.
  const size_t y = Size(0, num_outputs - 1);
  const size_t x0 = Size(0, inputs.size() - 1);
  size_t x1 = Size(0, inputs.size() - 2);
  if (x1 >= x0) ++x1;
  rows[x0][y] = 0.0;
  if (rows[x1][y] == 0.0) rows[x1][y] = Uniform(0.05, 1.0);
  for (auto& row : rows) {
    bool any = false;
    for (double v : row) any = any || v > 0.0;
    if (!any) row[(y + 1) % num_outputs] = Uniform(0.05, 1.0);
  }
  return MakeChannel(inputs, num_outputs, std::move(rows));
}

DatabaseMechanism InstanceGenerator::RandomDatabaseMechanism(
    const DatabaseSchema& schema, size_t num_outputs) {
  return *DatabaseMechanism::Create(
      schema, RandomChannel(schema.database_alphabet(), num_outputs, 0.2));
}

std::vector<Channel> AllDeterministicKernels(const Alphabet& inputs) {
  const size_t k = inputs.size();
  const Alphabet outputs = Alphabet::Indexed(k);
  std::vector<size_t> map(k, 0);
  std::vector<Channel> kernels;
  while (true) {
    kernels.push_back(*Channel::FromFunction(inputs, outputs, map));
    size_t pos = 0;
    while (pos < k && ++map[pos] == k) map[pos++] = 0;
    if (pos == k) break;
  }
  return kernels;
}

std::vector<Channel> NonConstantDeterministicKernels(const Alphabet& inputs) {
  std::vector<Channel> kernels;
  for (Channel& kernel : AllDeterministicKernels(inputs)) {
    bool constant = true;
    for (size_t x = 1; x < kernel.num_inputs() && constant; ++x) {
      constant = std::ranges::equal(kernel.row(x), kernel.row(0));
    }
    if (!constant) kernels.push_back(std::move(kernel));
  }
  return kernels;
}

}  // namespace pml
