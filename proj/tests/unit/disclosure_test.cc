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

#include <cmath>
#include <limits>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include "pml/distribution.h"
#include "pml/information.h"
#include "pml/leakage.h"
#include "pml/random_instances.h"
#include "test_util.h"

namespace pml {
namespace {

using ::pml::testing::Binary;
using ::pml::testing::ConstantBinary;
using ::pml::testing::Flip;
using ::pml::testing::IdentityBinary;
using ::pml::testing::StatusHasSubstr;

constexpr double kTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

Pmf ThreeWay() { return *Pmf::Create({"a", "b", "c"}, {0.2, 0.5, 0.3}); }

TEST(DetectDisclosureTest, IdentityChannelDiscloses) {
  ASSERT_OK_AND_ASSIGN(
      DisclosureResult r,
      DetectDisclosure(IdentityBinary(), Binary(0.3), IdentityBinary(), 1e-9));
  EXPECT_TRUE(r.disclosed);
  EXPECT_TRUE(r.witness.exact_zero);
  EXPECT_EQ(r.witness.posterior_mass, 1.0);
  EXPECT_EQ(r.witness.posterior_entropy, 0.0);
}

TEST(DetectDisclosureTest, ConstantChannelNeverDiscloses) {
  const Pmf prior = Binary(0.3);
  const double h = MinEntropy(prior);
  ASSERT_OK_AND_ASSIGN(
      DisclosureResult r,
      DetectDisclosure(ConstantBinary(), prior, IdentityBinary(), h - 1e-9));
  EXPECT_FALSE(r.disclosed);
  EXPECT_NEAR(r.witness.posterior_entropy, h, kTol);
}

TEST(DetectDisclosureTest, MinCostAttributeDisclosedAtZero) {
  ASSERT_OK_AND_ASSIGN(MinCostConstruction mc,
                       ConstructMinCostDisclosure(Binary(0.7), 0.1));
  ASSERT_OK_AND_ASSIGN(
      DisclosureResult r,
      DetectDisclosure(mc.mechanism, Binary(0.7), mc.attribute, 1e-9));
  EXPECT_TRUE(r.disclosed);
  EXPECT_EQ(r.witness.y, "0");
  EXPECT_EQ(r.witness.u, "1");
  EXPECT_EQ(r.witness.posterior_mass, 1.0);
}

TEST(DetectDisclosureTest, RejectsNegativeThreshold) {
  EXPECT_FALSE(
      DetectDisclosure(Flip(0.25), Binary(0.5), IdentityBinary(), -1.0).ok());
}

TEST(DetectSingleOutTest, Examples) {
  ASSERT_OK_AND_ASSIGN(DisclosureResult identity,
                       DetectSingleOut(IdentityBinary(), Binary(0.5), 1e-9));
  EXPECT_TRUE(identity.disclosed);
  ASSERT_OK_AND_ASSIGN(DisclosureResult flip,
                       DetectSingleOut(Flip(0.25), Binary(0.5), 0.2));
  EXPECT_FALSE(flip.disclosed);
  EXPECT_NEAR(flip.witness.posterior_mass, 0.75, kTol);
  EXPECT_NEAR(flip.witness.posterior_entropy, 0.28768207245178092744, kTol);
}

TEST(PosteriorEntropyFloorTest, Examples) {
  ASSERT_OK_AND_ASSIGN(double a, PosteriorEntropyFloor(1.0, 0.4));
  EXPECT_NEAR(a, 0.6, kTol);
  ASSERT_OK_AND_ASSIGN(double b, PosteriorEntropyFloor(0.36, 0.36));
  EXPECT_EQ(b, 0.0);
  ASSERT_OK_AND_ASSIGN(double c, PosteriorEntropyFloor(0.3, 0.9));
  EXPECT_EQ(c, 0.0);
}

TEST(PosteriorEntropyFloorTest, TightOnFlip) {
  ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(Flip(0.25), Binary(0.5)));
  ASSERT_OK_AND_ASSIGN(double floor,
                       PosteriorEntropyFloor(std::log(2.0), Pml(j, 0)));
  EXPECT_NEAR(floor, 0.28768207245178092744, kTol);
  EXPECT_NEAR(MinEntropy(Posterior(j, 0)), floor, kTol);
}

TEST(CapacityEntropyFloorTest, Examples) {
  ASSERT_OK_AND_ASSIGN(double zero_capacity,
                       CapacityEntropyFloor(Binary(0.75), 0.0));
  EXPECT_NEAR(zero_capacity, -std::log(0.75), kTol);
  ASSERT_OK_AND_ASSIGN(double f,
                       CapacityEntropyFloor(Binary(0.75), std::log(3.0)));
  EXPECT_NEAR(f, 0.10536051565782630123, kTol);
  ASSERT_OK_AND_ASSIGN(double infinite, CapacityEntropyFloor(Binary(0.75), kInf));
  EXPECT_EQ(infinite, 0.0);
  ASSERT_OK_AND_ASSIGN(double large, CapacityEntropyFloor(Binary(0.75), 50.0));
  EXPECT_LT(large, 1e-20);
}

TEST(LowEntropyAttributeTest, ThresholdValue) {
  ASSERT_OK_AND_ASSIGN(double t, LowEntropyLambdaThreshold(ThreeWay(), 0));
  EXPECT_NEAR(t, 0.375, kTol);
  ASSERT_OK_AND_ASSIGN(double mode, LowEntropyLambdaThreshold(ThreeWay(), 1));
  EXPECT_EQ(mode, 0.0);
}

TEST(LowEntropyAttributeTest, PushForwardOfKernel) {
  ASSERT_OK_AND_ASSIGN(Channel k,
                       ConstructLowEntropyAttribute(ThreeWay(), 0, 0.5));
  ASSERT_OK_AND_ASSIGN(Pmf w, PushForward(k, ThreeWay()));
  EXPECT_NEAR(w.prob(0), 0.6, kTol);
  EXPECT_NEAR(w.prob(1), 0.25, kTol);
  EXPECT_NEAR(w.prob(2), 0.15, kTol);
  EXPECT_NEAR(MinEntropy(w), 0.51082562376599068321, kTol);
  EXPECT_LT(MinEntropy(w), MinEntropy(ThreeWay()));
}

TEST(LowEntropyAttributeTest, LambdaNearOneCollapses) {
  ASSERT_OK_AND_ASSIGN(Channel k,
                       ConstructLowEntropyAttribute(ThreeWay(), 0, 1 - 1e-9));
  ASSERT_OK_AND_ASSIGN(Pmf w, PushForward(k, ThreeWay()));
  EXPECT_LT(MinEntropy(w), 1e-8);
}

TEST(LowEntropyAttributeTest, ModeAcceptsAnyLambda) {
  for (double lambda : {0.01, 0.5, 0.99}) {
    ASSERT_OK_AND_ASSIGN(Channel k,
                         ConstructLowEntropyAttribute(ThreeWay(), 1, lambda));
    ASSERT_OK_AND_ASSIGN(Pmf w, PushForward(k, ThreeWay()));
    EXPECT_LT(MinEntropy(w), MinEntropy(ThreeWay()));
  }
}

TEST(LowEntropyAttributeTest, RejectsLambdaBelowThreshold) {
  EXPECT_THAT(ConstructLowEntropyAttribute(ThreeWay(), 0, 0.1),
              StatusHasSubstr("0.375000"));
  EXPECT_FALSE(ConstructLowEntropyAttribute(ThreeWay(), 0, 1.0).ok());
}

TEST(MinCostTest, BinaryExample) {
  ASSERT_OK_AND_ASSIGN(MinCostConstruction mc,
                       ConstructMinCostDisclosure(Binary(0.7), 0.1));
  EXPECT_EQ(mc.x_min, 1);
  EXPECT_DOUBLE_EQ(mc.p_min, 0.3);
  EXPECT_EQ(mc.mechanism.prob(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(mc.mechanism.prob(0, 0), 0.1);
}

TEST(MinCostTest, UniformPriorLeaksLogKOverKMinusOne) {
  for (size_t k : {2, 3, 5}) {
    const Pmf prior = Pmf::Uniform(Alphabet::Indexed(k));
    ASSERT_OK_AND_ASSIGN(MinCostConstruction mc,
                         ConstructMinCostDisclosure(prior, 0.1));
    EXPECT_EQ(mc.x_min, 0);
    ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(mc.mechanism, prior));
    EXPECT_NEAR(PmlProfile(j).sup, std::log(k / (k - 1.0)), kTol);
  }
}

TEST(MinCostTest, SmallAlphaSilencesTheOtherOutcome) {
  ASSERT_OK_AND_ASSIGN(MinCostConstruction mc,
                       ConstructMinCostDisclosure(Binary(0.7), 1e-9));
  ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(mc.mechanism, Binary(0.7)));
  EXPECT_NEAR(Pml(j, 0), 0.35667494393873237891, kTol);
  EXPECT_LT(Pml(j, 1), 1e-9);
}

TEST(MinCostTest, RejectsLargeAlpha) {
  EXPECT_THAT(ConstructMinCostDisclosure(Binary(0.7), 0.9),
              StatusHasSubstr("0.428571"));
  EXPECT_FALSE(ConstructMinCostDisclosure(Binary(0.7), 0.0).ok());
}

// Properties over random instances.

TEST(DisclosurePropertyTest, CapacityFloorHoldsForNonConstantFunctions) {
  InstanceGenerator gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    Pmf prior = gen.RandomPmf(gen.Size(2, 4));
    Channel c = gen.RandomChannel(prior.alphabet(), gen.Size(2, 4));
    ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(c, prior));
    ASSERT_OK_AND_ASSIGN(double floor,
                         CapacityEntropyFloor(prior, LeakageCapacity(c)));
    for (const Channel& v : NonConstantDeterministicKernels(prior.alphabet())) {
      ASSERT_OK_AND_ASSIGN(Joint vj, AttributeJoint(j, v));
      for (size_t y = 0; y < c.num_outputs(); ++y) {
        EXPECT_GE(MinEntropy(Posterior(vj, y)), floor - 1e-9);
      }
    }
  }
}

TEST(DisclosurePropertyTest, PosteriorEntropyFloor) {
  InstanceGenerator gen(19);
  for (int trial = 0; trial < 200; ++trial) {
    Pmf prior = gen.RandomPmf(gen.Size(2, 4));
    Channel c = gen.RandomChannel(prior.alphabet(), gen.Size(2, 4));
    ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(c, prior));
    for (const Channel& k : AllDeterministicKernels(prior.alphabet())) {
      ASSERT_OK_AND_ASSIGN(Joint uj, AttributeJoint(j, k));
      const double h_u = MinEntropy(uj.prior());
      for (size_t y = 0; y < c.num_outputs(); ++y) {
        ASSERT_OK_AND_ASSIGN(double floor,
                             PosteriorEntropyFloor(h_u, Pml(j, y)));
        EXPECT_GE(MinEntropy(Posterior(uj, y)), floor - 1e-9);
      }
    }
  }
}

TEST(DisclosurePropertyTest, MinCostRandomPriors) {
  InstanceGenerator gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    Pmf prior = gen.RandomPmf(gen.Size(2, 5));
    const double alpha = gen.Uniform(0.0, 1.0) * prior.MinProb() /
                         (1.0 - prior.MinProb());
    if (alpha <= 0.0) continue;
    ASSERT_OK_AND_ASSIGN(MinCostConstruction mc,
                         ConstructMinCostDisclosure(prior, alpha));
    ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(mc.mechanism, prior));
    EXPECT_NEAR(PmlProfile(j).sup, -std::log1p(-mc.p_min), 1e-12);
  }
}

}  // namespace
}  // namespace pml
