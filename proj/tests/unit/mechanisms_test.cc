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

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include "pml/binomial.h"
#include "pml/distribution.h"
#include "pml/information.h"
#include "pml/leakage.h"
#include "test_util.h"

namespace pml {
namespace {

constexpr double kTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Frozen mpmath oracle values (tests/oracle/oracle_values.json).
constexpr double kUpperNb10 = 0.068936238135108887622;
constexpr double kLowerNb10 = 0.028964216869354649948;
constexpr double kHalfNb10 = 0.048750520486374414587;
constexpr double kBoundC049 = 0.049750187486128593686;

TEST(RandomizedResponseTest, Capacities) {
  ASSERT_OK_AND_ASSIGN(Channel binary, RandomizedResponse(2, 0.75));
  EXPECT_NEAR(LeakageCapacity(binary), std::log(3.0), kTol);
  ASSERT_OK_AND_ASSIGN(Channel flat, RandomizedResponse(2, 0.5));
  EXPECT_NEAR(LeakageCapacity(flat), 0.0, kTol);
  ASSERT_OK_AND_ASSIGN(Channel four, RandomizedResponse(4, 0.7));
  EXPECT_NEAR(LeakageCapacity(four), std::log(7.0), 1e-12);
}

TEST(RandomizedResponseTest, RejectsBadParameters) {
  EXPECT_FALSE(RandomizedResponse(2, 0.4).ok());
  EXPECT_FALSE(RandomizedResponse(2, 1.0).ok());
  EXPECT_FALSE(RandomizedResponse(1, 0.9).ok());
}

TEST(ThresholdQueryTest, AffirmativeAnswerMatchesOracle) {
  ASSERT_OK_AND_ASSIGN(ThresholdLeakage t,
                       ThresholdQueryLeakage({1000, 100, 0.3, 1}));
  EXPECT_NEAR(t.exact / 1.7183404004684617114e-52, 1.0, 1e-9);
  ASSERT_TRUE(t.chernoff_bound.has_value());
  EXPECT_NEAR(*t.chernoff_bound / 3.0346107321447330986e-51, 1.0, 1e-9);
  EXPECT_LE(t.exact, *t.chernoff_bound);
  EXPECT_FALSE(t.impossible_outcome);
}

TEST(ThresholdQueryTest, ImpossibleAffirmativeAnswer) {
  ASSERT_OK_AND_ASSIGN(ThresholdLeakage t,
                       ThresholdQueryLeakage({20, 20, 0.3, 1}));
  EXPECT_TRUE(t.impossible_outcome);
  EXPECT_EQ(t.exact, 0.0);
}

TEST(ThresholdQueryTest, ChernoffUnavailableAtOrAboveMean) {
  ASSERT_OK_AND_ASSIGN(ThresholdLeakage t,
                       ThresholdQueryLeakage({1000, 300, 0.3, 1}));
  EXPECT_TRUE(!t.chernoff_bound.has_value() || *t.chernoff_bound == kInf);
}

TEST(ThresholdQueryTest, SmallRatiosStayBelowGenderEntropy) {
  const double reference = MinEntropy(*Pmf::Create({"f", "m"}, {0.7, 0.3}));
  EXPECT_NEAR(reference, 0.35667494393873237891, kTol);
  for (int64_t m = 0; m <= 100; ++m) {
    ASSERT_OK_AND_ASSIGN(ThresholdLeakage t,
                         ThresholdQueryLeakage({1000, m, 0.3, 1}));
    EXPECT_LT(t.exact, reference) << m;
  }
}

TEST(ThresholdQueryTest, RejectsBadSpecs) {
  EXPECT_FALSE(ThresholdQueryLeakage({10, 11, 0.3, 1}).ok());
  EXPECT_FALSE(ThresholdQueryLeakage({10, 5, 1.0, 1}).ok());
  EXPECT_FALSE(ThresholdQueryLeakage({10, 5, 0.3, 2}).ok());
}

// Brute force: X ~ Bin(n, p), Y = 1{X > m}, S_i | X = k ~ Bernoulli(k / n).
TEST(ThresholdQueryPropertyTest, MatchesBruteForceAndPreProcessing) {
  for (int64_t n = 1; n <= 10; ++n) {
    std::vector<std::string> counts;
    std::vector<double> prior;
    for (int64_t k = 0; k <= n; ++k) {
      counts.push_back(std::to_string(k));
      ASSERT_OK_AND_ASSIGN(double upto, BinomialCdf(n, k, 0.3));
      double below = 0.0;
      if (k > 0) {
        ASSERT_OK_AND_ASSIGN(below, BinomialCdf(n, k - 1, 0.3));
      }
      prior.push_back(upto - below);
    }
    ASSERT_OK_AND_ASSIGN(Pmf px, Pmf::Create(counts, prior));
    std::vector<std::vector<double>> s_rows;
    for (int64_t k = 0; k <= n; ++k) {
      const double q = static_cast<double>(k) / static_cast<double>(n);
      s_rows.push_back({1.0 - q, q});
    }
    ASSERT_OK_AND_ASSIGN(Channel s_kernel,
                         Channel::Create(counts, {"0", "1"}, s_rows));
    for (int64_t m = 0; m < n; ++m) {
      std::vector<std::vector<double>> rows;
      for (int64_t k = 0; k <= n; ++k) {
        rows.push_back(k > m ? std::vector<double>{0.0, 1.0}
                             : std::vector<double>{1.0, 0.0});
      }
      ASSERT_OK_AND_ASSIGN(Channel c, Channel::Create(counts, {"0", "1"}, rows));
      ASSERT_OK_AND_ASSIGN(Joint j, Joint::Create(c, px));
      ASSERT_OK_AND_ASSIGN(Joint sj, AttributeJoint(j, s_kernel));
      for (int answer : {0, 1}) {
        ASSERT_OK_AND_ASSIGN(ThresholdLeakage t,
                             ThresholdQueryLeakage({n, m, 0.3, answer}));
        EXPECT_NEAR(t.exact, Pml(j, answer), 1e-9) << n << " " << m;
        EXPECT_LE(Pml(sj, answer), t.exact + 1e-9);
        if (t.chernoff_bound.has_value()) {
          EXPECT_LE(t.exact, *t.chernoff_bound + 1e-12);
        }
      }
    }
  }
}

TEST(LaplaceTest, TailBranches) {
  ASSERT_OK_AND_ASSIGN(double upper, LaplaceUpperTailLeakage(1000, 0.01, 0.3));
  EXPECT_NEAR(upper, kUpperNb10, kTol);
  ASSERT_OK_AND_ASSIGN(double lower, LaplaceLowerTailLeakage(1000, 0.01, 0.3));
  EXPECT_NEAR(lower, kLowerNb10, kTol);
  ASSERT_OK_AND_ASSIGN(double exact,
                       LaplaceCountingLeakageExact(1000, 0.01, 0.3));
  EXPECT_NEAR(exact, kUpperNb10, kTol);
}

TEST(LaplaceTest, SymmetricPrior) {
  ASSERT_OK_AND_ASSIGN(double upper, LaplaceUpperTailLeakage(1000, 0.01, 0.5));
  ASSERT_OK_AND_ASSIGN(double lower, LaplaceLowerTailLeakage(1000, 0.01, 0.5));
  EXPECT_NEAR(upper, kHalfNb10, kTol);
  EXPECT_NEAR(lower, kHalfNb10, kTol);
}

TEST(LaplaceTest, ExtremePriorsApproachDpParameter) {
  ASSERT_OK_AND_ASSIGN(double near_zero,
                       LaplaceCountingLeakageExact(1000, 0.01, 1e-9));
  ASSERT_OK_AND_ASSIGN(double near_one,
                       LaplaceCountingLeakageExact(1000, 0.01, 1 - 1e-9));
  EXPECT_NEAR(near_zero, 0.1, 1e-9);
  EXPECT_NEAR(near_one, 0.1, 1e-9);
}

TEST(LaplaceTest, Bound) {
  ASSERT_OK_AND_ASSIGN(double bound,
                       LaplaceCountingLeakageBound(1000, 0.01, 0.3));
  EXPECT_NEAR(bound, kUpperNb10, kTol);
  ASSERT_OK_AND_ASSIGN(double at_zero,
                       LaplaceCountingLeakageBound(1000, 0.01, 0.0));
  EXPECT_EQ(at_zero, 1.0 / (1000 * 0.01));
  ASSERT_OK_AND_ASSIGN(double near_half,
                       LaplaceCountingLeakageBound(1000, 0.01, 0.49));
  EXPECT_NEAR(near_half, kBoundC049, kTol);
  EXPECT_LT(std::abs(near_half - 0.05) / 0.05, 0.03);
  EXPECT_FALSE(LaplaceCountingLeakageBound(1000, 0.01, 0.5).ok());
}

TEST(LaplaceTest, Simplified) {
  ASSERT_OK_AND_ASSIGN(double s,
                       LaplaceCountingLeakageSimplified(1000, 0.01, 0.3));
  EXPECT_NEAR(s, 0.07045, kTol);
  ASSERT_OK_AND_ASSIGN(double at_zero,
                       LaplaceCountingLeakageSimplified(1000, 0.01, 0.0));
  EXPECT_NEAR(at_zero, 0.1, kTol);
}

TEST(LaplaceTest, SimplifiedDominatesBoundOnGrid) {
  for (double nb : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    for (double c : {0.0, 0.1, 0.2, 0.3, 0.4}) {
      ASSERT_OK_AND_ASSIGN(double bound,
                           LaplaceCountingLeakageBound(100, nb / 100, c));
      ASSERT_OK_AND_ASSIGN(double simplified,
                           LaplaceCountingLeakageSimplified(100, nb / 100, c));
      EXPECT_GE(simplified, bound - 1e-15) << nb << " " << c;
    }
  }
}

TEST(LaplaceTest, BoundDecreasesInB) {
  double previous = kInf;
  for (double b : {0.01, 0.02, 0.05, 0.1, 0.5}) {
    ASSERT_OK_AND_ASSIGN(double bound, LaplaceCountingLeakageBound(100, b, 0.3));
    EXPECT_LT(bound, previous);
    previous = bound;
  }
}

TEST(LaplacePmlAtYTest, MatchesClosedForms) {
  ASSERT_OK_AND_ASSIGN(double above, LaplaceCountingPmlAtY(100, 0.1, 0.3, 1.5));
  EXPECT_NEAR(above, 0.1 - std::log(0.7 + 0.3 * std::exp(0.1)), 1e-9);
  EXPECT_NEAR(above, 0.068936238135108887622, 1e-9);
  ASSERT_OK_AND_ASSIGN(double below,
                       LaplaceCountingPmlAtY(100, 0.1, 0.3, -0.5));
  EXPECT_NEAR(below, 0.028964216869354649948, 1e-9);
  ASSERT_OK_AND_ASSIGN(double center, LaplaceCountingPmlAtY(100, 0.1, 0.3, 0.3));
  EXPECT_NEAR(center, 0.00042940973005746848761, 1e-9);
  EXPECT_LT(center, below);
}

TEST(LaplacePmlAtYTest, RejectsLargeN) {
  EXPECT_FALSE(
      LaplaceCountingPmlAtY(kMaxLaplaceOracleN + 1, 0.1, 0.3, 0.5).ok());
}

TEST(LaplacePropertyTest, ExactBelowBoundInsideBand) {
  for (double c : {0.0, 0.1, 0.25, 0.4}) {
    for (int k = 1; k < 20; ++k) {
      const double p = c + (1 - 2 * c) * k / 20.0;
      ASSERT_OK_AND_ASSIGN(double exact,
                           LaplaceCountingLeakageExact(200, 0.05, p));
      ASSERT_OK_AND_ASSIGN(double bound,
                           LaplaceCountingLeakageBound(200, 0.05, c));
      EXPECT_LE(exact, bound + 1e-15);
    }
  }
}

}  // namespace
}  // namespace pml
