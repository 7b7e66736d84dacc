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

#include "pml/equivalences.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pml/leakage.h"

namespace pml {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTraceSlack = 1e-12;

// log(a / b) for a likelihood ratio; -inf when the numerator vanishes.
double LogRatio(double a, double b) {
  if (a <= 0.0) return -kInf;
  if (b <= 0.0) return kInf;
  return std::log(a) - std::log(b);
}

absl::Status CheckEps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("construction eps must lie in (0, 1), got ", eps));
  }
  return absl::OkStatus();
}

absl::Status CheckIndices(const DatabaseMechanism& m, size_t i, size_t y) {
  if (i >= m.schema().n()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "entry index ", i, " out of range for n = ", m.schema().n()));
  }
  if (y >= m.channel().num_outputs()) {
    return absl::InvalidArgumentError("output index out of range");
  }
  return absl::OkStatus();
}

// 1 - eps on `peak`, eps spread evenly over the other k - 1 symbols.
std::vector<double> Spike(size_t k, size_t peak, double eps) {
  std::vector<double> masses(k, eps / static_cast<double>(k - 1));
  masses[peak] = 1.0 - eps;
  return masses;
}

Pmf EntrySpike(const DatabaseSchema& schema, size_t peak, double eps) {
  return Pmf::FromWeights(schema.entry_alphabet(),
                          Spike(schema.entry_size(), peak, eps));
}

double Prob(const DatabaseMechanism& m, size_t i, size_t value,
            size_t context, size_t y) {
  return m.channel().prob(m.schema().Compose(i, value, context), y);
}

// Context maximizing (or minimizing) p(y | value, context); lowest index on
// ties.
size_t ExtremeContext(const DatabaseMechanism& m, size_t i, size_t value,
                      size_t y, bool maximize) {
  size_t best = 0;
  double best_prob = Prob(m, i, value, 0, y);
  for (size_t c = 1; c < m.schema().num_contexts(); ++c) {
    const double p = Prob(m, i, value, c, y);
    if (maximize ? p > best_prob : p < best_prob) {
      best = c;
      best_prob = p;
    }
  }
  return best;
}

size_t ArgMinDatabase(const Channel& channel, size_t y) {
  size_t best = 0;
  for (size_t x = 1; x < channel.num_inputs(); ++x) {
    if (channel.prob(x, y) < channel.prob(best, y)) best = x;
  }
  return best;
}

absl::StatusOr<double> EvaluateDpConditionalAll(const DatabaseMechanism& m,
                                                double eps) {
  const DatabaseSchema& schema = m.schema();
  const size_t k = schema.entry_size();
  const size_t contexts = schema.num_contexts();
  double best = 0.0;
  for (size_t i = 0; i < schema.n(); ++i) {
    for (size_t y = 0; y < m.channel().num_outputs(); ++y) {
      // Uniform context, entry spiked per context: a correlated prior.
      std::vector<double> masses(schema.num_databases(), 0.0);
      for (size_t c = 0; c < contexts; ++c) {
        absl::StatusOr<Pmf> q = ConditionalEntryPrior(m, i, c, y, eps);
        if (!q.ok()) return q.status();
        for (size_t d = 0; d < k; ++d) {
          masses[schema.Compose(i, d, c)] = q->prob(d) / contexts;
        }
      }
      absl::StatusOr<DatabasePrior> prior = DatabasePrior::Explicit(
          schema, Pmf::FromWeights(schema.database_alphabet(), masses));
      if (!prior.ok()) return prior.status();
      for (size_t c = 0; c < contexts; ++c) {
        absl::StatusOr<double> v = ConditionalEntryPml(m, *prior, i, c, y);
        if (!v.ok()) return v.status();
        best = std::max(best, *v);
      }
    }
  }
  return best;
}

absl::StatusOr<double> EvaluateDpConditionalProduct(const DatabaseMechanism& m,
                                                    double eps) {
  const DatabaseSchema& schema = m.schema();
  double best = 0.0;
  for (size_t i = 0; i < schema.n(); ++i) {
    for (size_t c = 0; c < schema.num_contexts(); ++c) {
      for (size_t y = 0; y < m.channel().num_outputs(); ++y) {
        std::vector<Pmf> factors(schema.n(),
                                 Pmf::Uniform(schema.entry_alphabet()));
        absl::StatusOr<Pmf> q = ConditionalEntryPrior(m, i, c, y, eps);
        if (!q.ok()) return q.status();
        factors[i] = *std::move(q);
        absl::StatusOr<DatabasePrior> prior =
            DatabasePrior::Product(schema, std::move(factors));
        if (!prior.ok()) return prior.status();
        absl::StatusOr<double> v = ConditionalEntryPml(m, *prior, i, c, y);
        if (!v.ok()) return v.status();
        best = std::max(best, *v);
      }
    }
  }
  return best;
}

absl::StatusOr<double> EvaluateDpEntryProduct(const DatabaseMechanism& m,
                                              double eps) {
  const DatabaseSchema& schema = m.schema();
  const size_t k = schema.entry_size();
  double best = 0.0;
  for (size_t i = 0; i < schema.n(); ++i) {
    for (size_t y = 0; y < m.channel().num_outputs(); ++y) {
      for (size_t d = 0; d < k; ++d) {
        for (size_t d2 = 0; d2 < k; ++d2) {
          if (d == d2) continue;
          // Context with the largest neighbor ratio for this pair.
          size_t star = 0;
          double star_ratio = -kInf;
          for (size_t c = 0; c < schema.num_contexts(); ++c) {
            const double r =
                LogRatio(Prob(m, i, d, c, y), Prob(m, i, d2, c, y));
            if (r > star_ratio) {
              star = c;
              star_ratio = r;
            }
          }
          if (star_ratio == -kInf) continue;
          const std::vector<size_t> target =
              schema.Decode(schema.Compose(i, d2, star));
          std::vector<Pmf> factors;
          factors.reserve(schema.n());
          for (size_t j = 0; j < schema.n(); ++j) {
            factors.push_back(EntrySpike(schema, target[j], eps));
          }
          absl::StatusOr<DatabasePrior> prior =
              DatabasePrior::Product(schema, std::move(factors));
          if (!prior.ok()) return prior.status();
          absl::StatusOr<double> v = EntryPml(m, *prior, i, y);
          if (!v.ok()) return v.status();
          best = std::max(best, *v);
        }
      }
    }
  }
  return best;
}

absl::StatusOr<double> EvaluateFlpJoint(const DatabaseMechanism& m, double eps,
                                        bool product) {
  const DatabaseSchema& schema = m.schema();
  const Channel& channel = m.channel();
  double best = 0.0;
  for (size_t y = 0; y < channel.num_outputs(); ++y) {
    const size_t x_star = ArgMinDatabase(channel, y);
    absl::StatusOr<DatabasePrior> prior =
        product ? ProductTargetPrior(schema, schema.Decode(x_star), eps)
                : DatabasePrior::Explicit(
                      schema,
                      Pmf::FromWeights(
                          schema.database_alphabet(),
                          Spike(schema.num_databases(), x_star, eps)));
    if (!prior.ok()) return prior.status();
    absl::StatusOr<Joint> joint = Joint::Create(channel, prior->joint());
    if (!joint.ok()) return joint.status();
    best = std::max(best, Pml(*joint, y));
  }
  return best;
}

absl::StatusOr<double> EvaluateFlpEntryAll(const DatabaseMechanism& m,
                                           double eps) {
  const DatabaseSchema& schema = m.schema();
  const size_t k = schema.entry_size();
  double best = 0.0;
  for (size_t i = 0; i < schema.n(); ++i) {
    for (size_t y = 0; y < m.channel().num_outputs(); ++y) {
      for (size_t d = 0; d < k; ++d) {
        for (size_t d2 = 0; d2 < k; ++d2) {
          if (d == d2) continue;
          absl::StatusOr<Channel> kernel =
              CorrelatedEntryKernel(m, i, d, d2, y, eps);
          if (!kernel.ok()) return kernel.status();
          absl::StatusOr<DatabasePrior> prior = PriorFromEntryKernel(
              m, i, EntrySpike(schema, d2, eps), *kernel);
          if (!prior.ok()) return prior.status();
          absl::StatusOr<double> v = EntryPml(m, *prior, i, y);
          if (!v.ok()) return v.status();
          best = std::max(best, *v);
        }
      }
    }
  }
  return best;
}

}  // namespace

double DpEpsilon(const DatabaseMechanism& m) {
  const DatabaseSchema& schema = m.schema();
  const size_t k = schema.entry_size();
  double best = 0.0;
  for (size_t y = 0; y < m.channel().num_outputs(); ++y) {
    for (size_t i = 0; i < schema.n(); ++i) {
      for (size_t c = 0; c < schema.num_contexts(); ++c) {
        for (size_t d = 0; d < k; ++d) {
          for (size_t d2 = 0; d2 < k; ++d2) {
            if (d == d2) continue;
            best = std::max(
                best, LogRatio(Prob(m, i, d, c, y), Prob(m, i, d2, c, y)));
            if (best == kInf) return kInf;
          }
        }
      }
    }
  }
  return best;
}

double FreeLunchEpsilon(const DatabaseMechanism& m) {
  return LeakageCapacity(m.channel());
}

absl::StatusOr<Joint> EntryJoint(const DatabaseMechanism& m,
                                 const DatabasePrior& prior, size_t i) {
  const DatabaseSchema& schema = m.schema();
  if (i >= schema.n()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "entry index ", i, " out of range for n = ", schema.n()));
  }
  const Channel& channel = m.channel();
  const size_t k = schema.entry_size();
  const size_t ny = channel.num_outputs();
  std::vector<double> marginal(k, 0.0);
  std::vector<std::vector<double>> rows(k, std::vector<double>(ny, 0.0));
  for (size_t x = 0; x < schema.num_databases(); ++x) {
    const size_t d = schema.Entry(x, i);
    const double px = prior.joint().prob(x);
    marginal[d] += px;
    for (size_t y = 0; y < ny; ++y) rows[d][y] += px * channel.prob(x, y);
  }
  for (size_t d = 0; d < k; ++d) {
    for (double& v : rows[d]) v /= marginal[d];
  }
  absl::StatusOr<Channel> entry_channel = Channel::Create(
      schema.entry_alphabet(), channel.outputs(), std::move(rows));
  if (!entry_channel.ok()) return entry_channel.status();
  return Joint::Create(*std::move(entry_channel),
                       Pmf::FromWeights(schema.entry_alphabet(),
                                        std::move(marginal)));
}

absl::StatusOr<double> EntryPml(const DatabaseMechanism& m,
                                const DatabasePrior& prior, size_t i,
                                size_t y) {
  if (absl::Status s = CheckIndices(m, i, y); !s.ok()) return s;
  absl::StatusOr<Joint> joint = EntryJoint(m, prior, i);
  if (!joint.ok()) return joint.status();
  return Pml(*joint, y);
}

absl::StatusOr<double> ConditionalEntryPml(const DatabaseMechanism& m,
                                           const DatabasePrior& prior,
                                           size_t i, size_t context,
                                           size_t y) {
  if (absl::Status s = CheckIndices(m, i, y); !s.ok()) return s;
  const DatabaseSchema& schema = m.schema();
  if (context >= schema.num_contexts()) {
    return absl::InvalidArgumentError("context index out of range");
  }
  const size_t k = schema.entry_size();
  std::vector<double> weights(k);
  std::vector<std::vector<double>> rows;
  rows.reserve(k);
  double total = 0.0;
  for (size_t d = 0; d < k; ++d) {
    const size_t x = schema.Compose(i, d, context);
    weights[d] = prior.joint().prob(x);
    total += weights[d];
    std::span<const double> row = m.channel().row(x);
    rows.emplace_back(row.begin(), row.end());
  }
  if (total <= 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("context ", schema.ContextLabel(i, context),
                     " has probability zero under the prior"));
  }
  absl::StatusOr<Channel> channel = Channel::Create(
      schema.entry_alphabet(), m.channel().outputs(), std::move(rows));
  if (!channel.ok()) return channel.status();
  return ConditionalPml(
      *channel, Pmf::FromWeights(schema.entry_alphabet(), std::move(weights)),
      y);
}

absl::StatusOr<Pmf> ConditionalEntryPrior(const DatabaseMechanism& m,
                                          size_t i, size_t context, size_t y,
                                          double eps) {
  if (absl::Status s = CheckEps(eps); !s.ok()) return s;
  if (absl::Status s = CheckIndices(m, i, y); !s.ok()) return s;
  const DatabaseSchema& schema = m.schema();
  size_t argmin = 0;
  for (size_t d = 1; d < schema.entry_size(); ++d) {
    if (Prob(m, i, d, context, y) < Prob(m, i, argmin, context, y)) {
      argmin = d;
    }
  }
  return EntrySpike(schema, argmin, eps);
}

absl::StatusOr<Channel> CorrelatedEntryKernel(const DatabaseMechanism& m,
                                              size_t i, size_t value,
                                              size_t other, size_t y,
                                              double eps) {
  if (absl::Status s = CheckEps(eps); !s.ok()) return s;
  if (absl::Status s = CheckIndices(m, i, y); !s.ok()) return s;
  const DatabaseSchema& schema = m.schema();
  const size_t k = schema.entry_size();
  if (value >= k || other >= k || value == other) {
    return absl::InvalidArgumentError(
        "kernel needs two distinct entry values");
  }
  const size_t contexts = schema.num_contexts();
  std::vector<std::string> labels;
  labels.reserve(contexts);
  for (size_t c = 0; c < contexts; ++c) {
    labels.push_back(schema.ContextLabel(i, c));
  }
  std::vector<std::vector<double>> rows(
      k, std::vector<double>(contexts, 1.0 / contexts));
  if (contexts > 1) {
    rows[value] = Spike(contexts, ExtremeContext(m, i, value, y, true), eps);
    rows[other] = Spike(contexts, ExtremeContext(m, i, other, y, false), eps);
  }
  absl::StatusOr<Alphabet> context_alphabet =
      Alphabet::Create(std::move(labels));
  if (!context_alphabet.ok()) return context_alphabet.status();
  return Channel::Create(schema.entry_alphabet(), *std::move(context_alphabet),
                         std::move(rows));
}

absl::StatusOr<DatabasePrior> PriorFromEntryKernel(const DatabaseMechanism& m,
                                                   size_t i, const Pmf& entry,
                                                   const Channel& kernel) {
  const DatabaseSchema& schema = m.schema();
  if (i >= schema.n() || !(entry.alphabet() == schema.entry_alphabet()) ||
      kernel.num_inputs() != schema.entry_size() ||
      kernel.num_outputs() != schema.num_contexts()) {
    return absl::InvalidArgumentError(
        "entry pmf or context kernel does not match the schema");
  }
  std::vector<double> masses(schema.num_databases());
  for (size_t d = 0; d < schema.entry_size(); ++d) {
    for (size_t c = 0; c < schema.num_contexts(); ++c) {
      masses[schema.Compose(i, d, c)] = entry.prob(d) * kernel.prob(d, c);
    }
  }
  return DatabasePrior::Explicit(
      schema, Pmf::FromWeights(schema.database_alphabet(), std::move(masses)));
}

std::string_view FormulationName(Formulation f) {
  switch (f) {
    case Formulation::kDpConditionalAllPriors:
      return "dp-conditional-all-priors";
    case Formulation::kDpConditionalProductPriors:
      return "dp-conditional-product-priors";
    case Formulation::kDpEntryProductPriors:
      return "dp-entry-product-priors";
    case Formulation::kFlpJointAllPriors:
      return "flp-joint-all-priors";
    case Formulation::kFlpJointProductPriors:
      return "flp-joint-product-priors";
    case Formulation::kFlpEntryAllPriors:
      return "flp-entry-all-priors";
  }
  return "unknown";
}

bool TargetsDp(Formulation f) {
  return f == Formulation::kDpConditionalAllPriors ||
         f == Formulation::kDpConditionalProductPriors ||
         f == Formulation::kDpEntryProductPriors;
}

std::vector<double> DefaultEpsSequence() {
  return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

absl::StatusOr<SupremumTrace> PmlSupremum(
    const DatabaseMechanism& m, Formulation formulation,
    const std::vector<double>& eps_sequence) {
  if (eps_sequence.empty()) {
    return absl::InvalidArgumentError("eps sequence is empty");
  }
  for (size_t k = 0; k < eps_sequence.size(); ++k) {
    if (absl::Status s = CheckEps(eps_sequence[k]); !s.ok()) return s;
    if (k > 0 && !(eps_sequence[k] < eps_sequence[k - 1])) {
      return absl::InvalidArgumentError(
          "eps sequence must be strictly decreasing");
    }
  }
  SupremumTrace trace;
  trace.formulation = formulation;
  trace.eps = eps_sequence;
  trace.target = TargetsDp(formulation) ? DpEpsilon(m) : FreeLunchEpsilon(m);
  for (double eps : eps_sequence) {
    absl::StatusOr<double> v;
    switch (formulation) {
      case Formulation::kDpConditionalAllPriors:
        v = EvaluateDpConditionalAll(m, eps);
        break;
      case Formulation::kDpConditionalProductPriors:
        v = EvaluateDpConditionalProduct(m, eps);
        break;
      case Formulation::kDpEntryProductPriors:
        v = EvaluateDpEntryProduct(m, eps);
        break;
      case Formulation::kFlpJointAllPriors:
        v = EvaluateFlpJoint(m, eps, /*product=*/false);
        break;
      case Formulation::kFlpJointProductPriors:
        v = EvaluateFlpJoint(m, eps, /*product=*/true);
        break;
      case Formulation::kFlpEntryAllPriors:
        v = EvaluateFlpEntryAll(m, eps);
        break;
    }
    if (!v.ok()) return v.status();
    trace.values.push_back(*v);
  }
  trace.limit_estimate = trace.values.back();
  trace.unbounded = std::isinf(trace.target);
  trace.gap = trace.target - trace.limit_estimate;
  for (size_t k = 0; k < trace.values.size(); ++k) {
    if (k > 0) {
      const double step = trace.values[k] - trace.values[k - 1];
      // An unbounded trace has to keep growing; a bounded one may plateau.
      if (trace.unbounded ? !(step > 0.0) : step < -kTraceSlack) {
        trace.monotone = false;
      }
    }
    if (!(trace.values[k] < trace.target)) trace.strictly_below = false;
  }
  return trace;
}

absl::StatusOr<EquivalenceReport> VerifyEquivalences(
    const DatabaseMechanism& m, double tol,
    const std::vector<double>& eps_sequence) {
  if (!(tol > 0.0)) {
    return absl::InvalidArgumentError("tolerance must be positive");
  }
  EquivalenceReport report;
  report.dp_eps = DpEpsilon(m);
  report.flp_eps = FreeLunchEpsilon(m);
  report.tolerance = tol;
  report.passed = true;
  for (Formulation f : kAllFormulations) {
    absl::StatusOr<SupremumTrace> trace = PmlSupremum(m, f, eps_sequence);
    if (!trace.ok()) return trace.status();
    if (trace->unbounded) {
      trace->passed = trace->monotone;
    } else {
      bool below = true;
      for (double v : trace->values) below = below && v <= trace->target + kTraceSlack;
      // Identical rows make every leakage exactly zero; nothing to be below.
      const bool strict = trace->target == 0.0 || trace->strictly_below;
      trace->passed = trace->monotone && below && strict && trace->gap <= tol;
    }
    report.passed = report.passed && trace->passed;
    report.traces.push_back(*std::move(trace));
  }
  return report;
}

}  // namespace pml
