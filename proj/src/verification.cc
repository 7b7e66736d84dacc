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

#include "pml/verification.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "pml/disclosure.h"
#include "pml/equivalences.h"
#include "pml/information.h"
#include "pml/leakage.h"
#include "pml/random_instances.h"

namespace pml {
namespace {

constexpr size_t kMaxRecordedFailures = 5;
constexpr int kMaxRetries = 10000;
// Tolerance for the closed-form leakage of the min-cost construction.
constexpr double kMinCostTolerance = 1e-12;

std::string Describe(const Joint& joint) {
  const Channel& c = joint.channel();
  std::string rows;
  for (size_t x = 0; x < c.num_inputs(); ++x) {
    absl::StrAppend(&rows, x == 0 ? "" : "; ");
    for (size_t y = 0; y < c.num_outputs(); ++y) {
      absl::StrAppend(&rows, y == 0 ? "" : " ",
                      absl::StrFormat("%.17g", c.prob(x, y)));
    }
  }
  std::string prior;
  for (size_t x = 0; x < joint.prior().size(); ++x) {
    absl::StrAppend(&prior, x == 0 ? "" : " ",
                    absl::StrFormat("%.17g", joint.prior().prob(x)));
  }
  return absl::StrCat("rows [", rows, "] prior [", prior, "]");
}

double PosteriorMinEntropy(const Channel& kernel, const Pmf& posterior) {
  return MinEntropy(*PushForward(kernel, posterior));
}

Joint MakeJoint(const Channel& channel, const Pmf& prior) {
  return *Joint::Create(channel, prior);
}

// Disclosing instance for the low-entropy attribute suite: outcome 0 points
// strongly at one attribute value but never with certainty.
struct DisclosingInstance {
  Channel channel;
  Pmf true_prior;
  Pmf adversary_prior;
  Channel u_kernel;
};

DisclosingInstance DrawDisclosingInstance(InstanceGenerator& gen,
                                          double level) {
  for (int attempt = 0;; ++attempt) {
    const size_t k = gen.Size(2, 4);
    const Alphabet xs = Alphabet::Indexed(k);
    std::vector<Channel> kernels = NonConstantDeterministicKernels(xs);
    Channel u_kernel = kernels[gen.Size(0, kernels.size() - 1)];
    Pmf true_prior = gen.RandomPmf(xs);
    Pmf adversary_prior = gen.RandomPmf(xs);
    const size_t ny = gen.Size(2, 4);
    size_t target = 0;
    while (u_kernel.prob(0, target) == 0.0) ++target;
    std::vector<std::vector<double>> rows;
    for (size_t x = 0; x < k; ++x) {
      std::vector<double> row(ny);
      for (double& v : row) v = gen.Uniform(0.05, 1.0);
      row[0] = u_kernel.prob(x, target) > 0.0 ? gen.Uniform(0.5, 1.0)
                                              : gen.Uniform(1e-4, 1e-2);
      double sum = 0.0;
      for (double v : row) sum += v;
      for (double& v : row) v /= sum;
      rows.push_back(std::move(row));
    }
    Channel channel =
        *Channel::Create(xs, Alphabet::Indexed(ny), std::move(rows));
    absl::StatusOr<DisclosureResult> d =
        DetectDisclosure(channel, adversary_prior, u_kernel, level);
    if ((d.ok() && d->disclosed) || attempt >= kMaxRetries) {
      return {std::move(channel), std::move(true_prior),
              std::move(adversary_prior), std::move(u_kernel)};
    }
  }
}

absl::StatusOr<DatabaseMechanism> RequireDatabase(const Instance& instance) {
  if (!instance.mechanism.schema.has_value()) {
    return absl::InvalidArgumentError(
        "this suite needs a database mechanism with 'entry_alphabet' and 'n'");
  }
  return DatabaseMechanism::Create(*instance.mechanism.schema,
                                   instance.mechanism.channel);
}

}  // namespace

std::string_view SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kDominance:
      return "dominance";
    case Suite::kPosteriorEntropyFloor:
      return "posterior-entropy-floor";
    case Suite::kDisclosurePrevention:
      return "disclosure-prevention";
    case Suite::kLowEntropyAttribute:
      return "low-entropy-attribute";
    case Suite::kCapacityFloor:
      return "capacity-floor";
    case Suite::kMinCostDisclosure:
      return "min-cost-disclosure";
    case Suite::kDpEquivalence:
      return "dp-equivalence";
    case Suite::kFlpEquivalence:
      return "flp-equivalence";
    case Suite::kNonAttainment:
      return "non-attainment";
    case Suite::kSinglingOut:
      return "singling-out";
  }
  return "unknown";
}

void SuiteReport::Record(bool ok, absl::FunctionRef<std::string()> describe) {
  ++checks;
  if (ok) return;
  ++violations;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(describe());
}

void CheckDominance(const Joint& joint, double tol, SuiteReport& report) {
  const std::vector<Channel> kernels =
      AllDeterministicKernels(joint.prior().alphabet());
  for (size_t y = 0; y < joint.channel().num_outputs(); ++y) {
    const double pml = Pml(joint, y);
    for (const Channel& kernel : kernels) {
      const double lower = *PmlRandomizedFunctionLower(joint, y, kernel);
      const double attribute = Pml(*AttributeJoint(joint, kernel), y);
      report.Record(lower <= pml + tol, [&] {
        return absl::StrFormat("MAP gain %.17g exceeds leakage %.17g at y=%d; %s",
                               lower, pml, y, Describe(joint));
      });
      report.Record(lower <= attribute + tol, [&] {
        return absl::StrFormat(
            "MAP gain %.17g exceeds attribute leakage %.17g at y=%d; %s",
            lower, attribute, y, Describe(joint));
      });
      report.Record(attribute <= pml + tol, [&] {
        return absl::StrFormat(
            "attribute leakage %.17g exceeds leakage %.17g at y=%d; %s",
            attribute, pml, y, Describe(joint));
      });
    }
  }
}

void CheckPosteriorEntropyFloor(const Joint& joint,
                                const std::vector<Channel>& kernels,
                                double tol, SuiteReport& report) {
  for (size_t y = 0; y < joint.channel().num_outputs(); ++y) {
    if (joint.output_prob(y) <= 0.0) continue;
    const double pml = Pml(joint, y);
    const Pmf posterior = Posterior(joint, y);
    for (const Channel& kernel : kernels) {
      const double prior_h = MinEntropy(*PushForward(kernel, joint.prior()));
      const double post_h = PosteriorMinEntropy(kernel, posterior);
      report.Record(post_h >= prior_h - pml - tol, [&] {
        return absl::StrFormat(
            "posterior entropy %.17g below %.17g - %.17g at y=%d; %s", post_h,
            prior_h, pml, y, Describe(joint));
      });
    }
  }
}

void CheckDisclosurePrevention(const Joint& joint,
                               const std::vector<Channel>& kernels, double tol,
                               SuiteReport& report) {
  const double eps = PmlProfile(joint).sup;
  for (const Channel& kernel : kernels) {
    const double prior_h = MinEntropy(*PushForward(kernel, joint.prior()));
    for (size_t y = 0; y < joint.channel().num_outputs(); ++y) {
      if (joint.output_prob(y) <= 0.0) continue;
      const double post_h = PosteriorMinEntropy(kernel, Posterior(joint, y));
      report.Record(post_h >= prior_h - eps - tol, [&] {
        return absl::StrFormat(
            "posterior entropy %.17g below %.17g - sup %.17g at y=%d; %s",
            post_h, prior_h, eps, y, Describe(joint));
      });
    }
    // Equality is attainable (a collapsed posterior leaks exactly H(P_U)),
    // so the strict premise is applied with the numeric tolerance.
    if (prior_h > eps + tol) {
      const DisclosureResult d =
          *DetectDisclosure(joint.channel(), joint.prior(), kernel, 0.0);
      report.Record(!d.witness.exact_zero && d.witness.posterior_entropy > 0.0,
                    [&] {
                      return absl::StrCat("exact disclosure at y=",
                                          d.witness.y, " although H(P_U) > ",
                                          eps, "; ", Describe(joint));
                    });
    }
  }
}

absl::Status CheckLowEntropyAttribute(const Channel& channel,
                                      const Pmf& true_prior,
                                      const Pmf& adversary_prior,
                                      const Channel& u_kernel, double level,
                                      double lambda_fraction,
                                      SuiteReport& report) {
  absl::StatusOr<DisclosureResult> d =
      DetectDisclosure(channel, adversary_prior, u_kernel, level);
  if (!d.ok()) return d.status();
  if (!d->disclosed) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "instance does not disclose the attribute at level %g (min posterior "
        "entropy %.6f)",
        level, d->witness.posterior_entropy));
  }
  absl::StatusOr<Pmf> p_u = PushForward(u_kernel, true_prior);
  if (!p_u.ok()) return p_u.status();
  const size_t disclosed = d->witness.u_index;
  absl::StatusOr<double> threshold = LowEntropyLambdaThreshold(*p_u, disclosed);
  if (!threshold.ok()) return threshold.status();
  const double lambda = *threshold + (1.0 - *threshold) * lambda_fraction;
  absl::StatusOr<Channel> w_given_u =
      ConstructLowEntropyAttribute(*p_u, disclosed, lambda);
  if (!w_given_u.ok()) return w_given_u.status();
  absl::StatusOr<Channel> w_kernel = Compose(u_kernel, *w_given_u);
  if (!w_kernel.ok()) return w_kernel.status();
  ++report.instances;

  const double h_u = MinEntropy(*p_u);
  const double h_w = MinEntropy(*PushForward(*w_given_u, *p_u));
  report.Record(h_w < h_u, [&] {
    return absl::StrFormat("H(P_W)=%.17g not below H(P_U)=%.17g", h_w, h_u);
  });
  const Joint joint = MakeJoint(channel, adversary_prior);
  for (size_t y = 0; y < channel.num_outputs(); ++y) {
    if (joint.output_prob(y) <= 0.0) continue;
    const Pmf posterior = Posterior(joint, y);
    const Pmf q_u = *PushForward(u_kernel, posterior);
    const Pmf q_w = *PushForward(*w_kernel, posterior);
    // The construction targets the disclosed value d: wherever d alone
    // pushes the attribute's entropy below the level, so it does for W.
    if (-std::log(q_u.prob(disclosed)) < level) {
      report.Record(MinEntropy(q_w) < level, [&] {
        return absl::StrFormat("W not disclosed at y=%d though U is", y);
      });
    }
    if (y == d->witness.y_index) {
      const double mu = q_u.prob(disclosed);
      const double mw = q_w.prob(disclosed);
      report.Record(mu < 1.0 ? mw > mu : mw >= mu, [&] {
        return absl::StrFormat(
            "posterior mass of w %.17g does not exceed that of u %.17g", mw,
            mu);
      });
    }
  }
  return absl::OkStatus();
}

void CheckCapacityFloor(const Joint& joint, double tol, SuiteReport& report) {
  const double capacity = LeakageCapacity(joint.channel());
  const double floor = *CapacityEntropyFloor(joint.prior(), capacity);
  const std::vector<Channel> kernels =
      NonConstantDeterministicKernels(joint.prior().alphabet());
  for (size_t y = 0; y < joint.channel().num_outputs(); ++y) {
    if (joint.output_prob(y) <= 0.0) continue;
    const Pmf posterior = Posterior(joint, y);
    for (const Channel& kernel : kernels) {
      const double h = PosteriorMinEntropy(kernel, posterior);
      report.Record(h >= floor - tol, [&] {
        return absl::StrFormat("feature entropy %.17g below floor %.17g; %s",
                               h, floor, Describe(joint));
      });
    }
  }
}

absl::Status CheckMinCostDisclosure(const Pmf& prior, double alpha,
                                    SuiteReport& report) {
  absl::StatusOr<MinCostConstruction> mc =
      ConstructMinCostDisclosure(prior, alpha);
  if (!mc.ok()) return mc.status();
  const Joint joint = MakeJoint(mc->mechanism, prior);
  const LeakageProfile profile = PmlProfile(joint);
  const double target = -std::log1p(-mc->p_min);
  const double at_one = -std::log1p(-alpha * (1.0 - mc->p_min));
  report.Record(std::abs(profile.sup - target) <= kMinCostTolerance, [&] {
    return absl::StrFormat("sup leakage %.17g differs from %.17g", profile.sup,
                           target);
  });
  report.Record(profile.witness == "0", [&] {
    return absl::StrCat("witness is '", profile.witness, "', expected '0'");
  });
  report.Record(
      std::abs(profile.per_outcome[1].second - at_one) <= kMinCostTolerance,
      [&] {
        return absl::StrFormat("leakage at y=1 %.17g differs from %.17g",
                               profile.per_outcome[1].second, at_one);
      });
  const DisclosureResult d =
      *DetectDisclosure(mc->mechanism, prior, mc->attribute, 1e-9);
  report.Record(d.disclosed && d.witness.y == "0" && d.witness.exact_zero &&
                    d.witness.posterior_mass == 1.0,
                [&] {
                  return absl::StrFormat(
                      "y=0 does not disclose U exactly (y=%s mass=%.17g)",
                      d.witness.y, d.witness.posterior_mass);
                });
  return absl::OkStatus();
}

void CheckInfiniteCapacityFloor(const Joint& joint, double tol,
                                SuiteReport& report) {
  if (!std::isinf(LeakageCapacity(joint.channel()))) return;
  const double floor = -std::log1p(-joint.prior().MinProb());
  const double sup = PmlProfile(joint).sup;
  report.Record(sup >= floor - tol, [&] {
    return absl::StrFormat(
        "infinite-capacity mechanism leaks only %.17g < %.17g; %s", sup, floor,
        Describe(joint));
  });
}

absl::Status CheckEquivalences(const DatabaseMechanism& m, Suite suite,
                               const VerifyOptions& options,
                               SuiteReport& report) {
  absl::StatusOr<EquivalenceReport> eq =
      VerifyEquivalences(m, options.equivalence_tolerance,
                         options.eps_sequence);
  if (!eq.ok()) return eq.status();
  ++report.instances;
  report.Record(eq->dp_eps <= eq->flp_eps, [&] {
    return absl::StrFormat("dp %.17g exceeds free lunch %.17g", eq->dp_eps,
                           eq->flp_eps);
  });
  for (const SupremumTrace& t : eq->traces) {
    const bool dp = TargetsDp(t.formulation);
    if (suite == Suite::kDpEquivalence && !dp) continue;
    if (suite == Suite::kFlpEquivalence && dp) continue;
    const std::string name(FormulationName(t.formulation));
    if (suite == Suite::kNonAttainment) {
      const bool ok = t.monotone && (t.unbounded || t.target == 0.0 ||
                                     t.strictly_below);
      report.Record(ok, [&] {
        return absl::StrFormat("%s: trace attains or is not monotone toward "
                               "%.17g (last %.17g)",
                               name, t.target, t.limit_estimate);
      });
    } else {
      report.Record(t.passed, [&] {
        return absl::StrFormat("%s: gap %.6e to target %.17g (monotone=%d)",
                               name, t.gap, t.target, t.monotone);
      });
    }
  }
  return absl::OkStatus();
}

absl::Status CheckSinglingOut(const Joint& joint, double tol,
                              SuiteReport& report) {
  const double eps = PmlProfile(joint).sup;
  const double h = MinEntropy(joint.prior());
  const double threshold = h - eps - tol;
  if (!(threshold > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "instance is not certified below H(P_X): sup leakage %.6f, H(P_X) "
        "%.6f",
        eps, h));
  }
  ++report.instances;
  const DisclosureResult d =
      *DetectSingleOut(joint.channel(), joint.prior(), threshold);
  report.Record(!d.disclosed, [&] {
    return absl::StrFormat("singled out at y=%s with entropy %.17g < %.17g; %s",
                           d.witness.y, d.witness.posterior_entropy, threshold,
                           Describe(joint));
  });
  return absl::OkStatus();
}

absl::StatusOr<SuiteReport> RunRandomSuite(Suite suite, uint64_t seed,
                                           size_t count,
                                           const VerifyOptions& options) {
  SuiteReport report;
  report.name = std::string(SuiteName(suite));
  InstanceGenerator gen(seed);
  const double tol = options.tolerance;
  for (size_t n = 0; n < count; ++n) {
    switch (suite) {
      case Suite::kDominance:
      case Suite::kPosteriorEntropyFloor:
      case Suite::kDisclosurePrevention: {
        const Alphabet xs = Alphabet::Indexed(gen.Size(2, 4));
        const Joint joint = MakeJoint(
            gen.RandomSparseChannel(xs, gen.Size(2, 4)), gen.RandomPmf(xs));
        ++report.instances;
        if (suite == Suite::kDominance) {
          CheckDominance(joint, tol, report);
        } else if (suite == Suite::kPosteriorEntropyFloor) {
          CheckPosteriorEntropyFloor(joint, AllDeterministicKernels(xs), tol,
                                     report);
        } else {
          CheckDisclosurePrevention(joint, AllDeterministicKernels(xs), tol,
                                    report);
        }
        break;
      }
      case Suite::kLowEntropyAttribute: {
        constexpr double kLevel = 0.25;
        DisclosingInstance inst = DrawDisclosingInstance(gen, kLevel);
        if (absl::Status s = CheckLowEntropyAttribute(
                inst.channel, inst.true_prior, inst.adversary_prior,
                inst.u_kernel, kLevel, gen.Uniform(0.05, 0.95), report);
            !s.ok()) {
          return s;
        }
        break;
      }
      case Suite::kCapacityFloor: {
        const Alphabet xs = Alphabet::Indexed(gen.Size(2, 4));
        const Joint joint = MakeJoint(gen.RandomChannel(xs, gen.Size(2, 4)),
                                      gen.RandomPmf(xs));
        ++report.instances;
        CheckCapacityFloor(joint, tol, report);
        break;
      }
      case Suite::kMinCostDisclosure: {
        const Alphabet xs = Alphabet::Indexed(gen.Size(2, 4));
        const Pmf prior = gen.RandomPmf(xs);
        const double p_min = prior.MinProb();
        const double alpha_max = std::min(0.999, p_min / (1.0 - p_min));
        ++report.instances;
        if (absl::Status s = CheckMinCostDisclosure(
                prior, alpha_max * gen.Uniform(0.01, 1.0), report);
            !s.ok()) {
          return s;
        }
        CheckInfiniteCapacityFloor(
            MakeJoint(gen.RandomInfiniteCapacityChannel(xs, gen.Size(2, 4)),
                      prior),
            tol, report);
        break;
      }
      case Suite::kDpEquivalence:
      case Suite::kFlpEquivalence:
      case Suite::kNonAttainment: {
        const DatabaseSchema schema =
            *DatabaseSchema::Create(*Alphabet::Create({"0", "1"}),
                                    gen.Size(2, 3));
        const DatabaseMechanism m =
            gen.RandomDatabaseMechanism(schema, gen.Size(2, 3));
        if (absl::Status s = CheckEquivalences(m, suite, options, report);
            !s.ok()) {
          return s;
        }
        break;
      }
      case Suite::kSinglingOut: {
        for (int attempt = 0;; ++attempt) {
          const Alphabet xs = Alphabet::Indexed(gen.Size(2, 4));
          const Joint joint = MakeJoint(
              gen.RandomChannel(xs, gen.Size(2, 4), 0.5), gen.RandomPmf(xs));
          if (PmlProfile(joint).sup < MinEntropy(joint.prior()) - 1e-6) {
            if (absl::Status s = CheckSinglingOut(joint, tol, report);
                !s.ok()) {
              return s;
            }
            break;
          }
          if (attempt >= kMaxRetries) {
            return absl::InternalError("could not draw a certified instance");
          }
        }
        break;
      }
    }
  }
  return report;
}

absl::StatusOr<SuiteReport> RunInstanceSuite(Suite suite,
                                             const Instance& instance,
                                             const VerifyOptions& options) {
  SuiteReport report;
  report.name = std::string(SuiteName(suite));
  const double tol = options.tolerance;
  const Channel& channel = instance.mechanism.channel;
  switch (suite) {
    case Suite::kDpEquivalence:
    case Suite::kFlpEquivalence:
    case Suite::kNonAttainment: {
      absl::StatusOr<DatabaseMechanism> m = RequireDatabase(instance);
      if (!m.ok()) return m.status();
      if (absl::Status s = CheckEquivalences(*m, suite, options, report);
          !s.ok()) {
        return s;
      }
      return report;
    }
    default:
      break;
  }
  if (!instance.prior.has_value()) {
    return absl::InvalidArgumentError("this suite needs a 'prior'");
  }
  const Pmf& prior = *instance.prior;
  if (suite == Suite::kMinCostDisclosure) {
    const double p_min = prior.MinProb();
    const double alpha =
        std::min(0.1, p_min < 0.5 ? p_min / (1.0 - p_min) : 0.1);
    ++report.instances;
    if (absl::Status s = CheckMinCostDisclosure(prior, alpha, report);
        !s.ok()) {
      return s;
    }
    CheckInfiniteCapacityFloor(MakeJoint(channel, prior), tol, report);
    return report;
  }
  absl::StatusOr<Joint> joint = Joint::Create(channel, prior);
  if (!joint.ok()) return joint.status();
  const std::vector<Channel> kernels =
      instance.u_kernel.has_value()
          ? std::vector<Channel>{*instance.u_kernel}
          : AllDeterministicKernels(prior.alphabet());
  switch (suite) {
    case Suite::kDominance:
      ++report.instances;
      CheckDominance(*joint, tol, report);
      break;
    case Suite::kPosteriorEntropyFloor:
      ++report.instances;
      CheckPosteriorEntropyFloor(*joint, kernels, tol, report);
      break;
    case Suite::kDisclosurePrevention:
      ++report.instances;
      CheckDisclosurePrevention(*joint, kernels, tol, report);
      break;
    case Suite::kCapacityFloor:
      if (std::isinf(LeakageCapacity(channel))) {
        return absl::InvalidArgumentError(
            "the capacity floor needs a mechanism of finite leakage capacity");
      }
      ++report.instances;
      CheckCapacityFloor(*joint, tol, report);
      break;
    case Suite::kLowEntropyAttribute: {
      const Channel u_kernel = instance.u_kernel.has_value()
                                   ? *instance.u_kernel
                                   : Channel::Identity(prior.alphabet());
      absl::StatusOr<DisclosureResult> d =
          DetectDisclosure(channel, prior, u_kernel, 0.0);
      if (!d.ok()) return d.status();
      const double level = d->witness.posterior_entropy + 0.05;
      if (absl::Status s = CheckLowEntropyAttribute(
              channel, prior, prior, u_kernel, level, 0.5, report);
          !s.ok()) {
        return s;
      }
      break;
    }
    case Suite::kSinglingOut:
      if (absl::Status s = CheckSinglingOut(*joint, tol, report); !s.ok()) {
        return s;
      }
      break;
    default:
      break;
  }
  return report;
}

}  // namespace pml
