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

#ifndef PML_RANDOM_INSTANCES_H_
#define PML_RANDOM_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pml/database.h"
#include "pml/distribution.h"

namespace pml {

// Seeded source of random test instances. Identical seeds give identical
// instance streams on every platform that implements std::mt19937_64.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  size_t Size(size_t lo, size_t hi);
  double Uniform(double lo, double hi);

  // Full-support pmf with weights drawn from U(0.05, 1), labels "0".."k-1".
  Pmf RandomPmf(size_t k);
  Pmf RandomPmf(const Alphabet& alphabet);

  // Rows with weights from U(lo, 1); positive everywhere, so the leakage
  // capacity is finite.
  Channel RandomChannel(const Alphabet& inputs, size_t num_outputs,
                        double lo = 0.05);

  // Rows where each entry is zero with probability 1/3 (every row keeps at
  // least one positive entry).
  Channel RandomSparseChannel(const Alphabet& inputs, size_t num_outputs);

  // Channel with some output impossible under one input and possible under
  // another. Requires at least two inputs and two outputs.
  Channel RandomInfiniteCapacityChannel(const Alphabet& inputs,
                                        size_t num_outputs);

  // Database mechanism with row weights from U(0.2, 1).
  DatabaseMechanism RandomDatabaseMechanism(const DatabaseSchema& schema,
                                            size_t num_outputs);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::vector<double> Row(size_t k, double lo);

  std::mt19937_64 engine_;
};

// Every deterministic kernel from `inputs` to {0, ..., |inputs| - 1}; these
// realize every partition of the inputs. There are |X|^|X| of them.
std::vector<Channel> AllDeterministicKernels(const Alphabet& inputs);

// The kernels above that are not constant.
std::vector<Channel> NonConstantDeterministicKernels(const Alphabet& inputs);

}  // namespace pml

#endif  // PML_RANDOM_INSTANCES_H_
