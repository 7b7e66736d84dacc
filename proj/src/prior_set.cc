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

#include "pml/prior_set.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pml/leakage.h"

namespace pml {
namespace {

constexpr size_t kMaxGridMembers = 1000000;

// Number of compositions of r into k positive parts, saturating at limit+1.
size_t CountCompositions(size_t r, size_t k, size_t limit) {
  if (k == 0 || r < k) return 0;
  // C(r - 1, k - 1)
  const size_t top = r - 1;
  const size_t choose = std::min(k - 1, top - (k - 1));
  double count = 1.0;
  for (size_t j = 1; j <= choose; ++j) {
    count = count * static_cast<double>(top - choose + j) / j;
    if (count > static_cast<double>(limit)) return limit + 1;
  }
  return static_cast<size_t>(count + 0.5);
}

void EnumerateCompositions(size_t remaining, size_t slot,
                           std::vector<size_t>& parts,
                           absl::FunctionRef<void(const std::vector<size_t>&)>
                               fn) {
  const size_t k = parts.size();
  if (slot + 1 == k) {
    parts[slot] = remaining;
    fn(parts);
    return;
  }
  const size_t slots_after = k - slot - 1;
  for (size_t v = 1; v + slots_after <= remaining; ++v) {
    parts[slot] = v;
    EnumerateCompositions(remaining - v, slot + 1, parts, fn);
  }
}

absl::Status CheckEpsSequence(const std::vector<double>& eps_sequence) {
  for (double e : eps_sequence) {
    if (!(e > 0.0 && e < 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("eps sequence values must lie in (0, 1), got ", e));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<PriorSet> PriorSet::Explicit(std::vector<Pmf> members) {
  if (members.empty()) {
    return absl::InvalidArgumentError("prior set is empty");
  }
  for (const Pmf& p : members) {
    if (!(p.alphabet() == members.front().alphabet())) {
      return absl::InvalidArgumentError(
          "prior set members use different alphabets");
    }
    if (!(p.MinProb() > 0.0)) {
      return absl::InvalidArgumentError(
          "prior set members must have full support");
    }
  }
  PriorSet set(Kind::kExplicit, members.front().alphabet());
  set.members_ = std::move(members);
  return set;
}

absl::StatusOr<PriorSet> PriorSet::SimplexGrid(Alphabet alphabet,
                                               size_t resolution) {
  if (resolution < alphabet.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "simplex grid resolution ", resolution,
        " has no full-support member on ", alphabet.size(), " symbols"));
  }
  if (CountCompositions(resolution, alphabet.size(), kMaxGridMembers) >
      kMaxGridMembers) {
    return absl::InvalidArgumentError(absl::StrCat(
        "simplex grid has more than ", kMaxGridMembers, " members"));
  }
  PriorSet set(Kind::kSimplexGrid, std::move(alphabet));
  set.resolution_ = resolution;
  return set;
}

absl::StatusOr<PriorSet> PriorSet::ProductFamily(
    DatabaseSchema schema, std::vector<double> eps_sequence) {
  if (absl::Status s = CheckEpsSequence(eps_sequence); !s.ok()) return s;
  PriorSet set(Kind::kProductFamily, schema.database_alphabet());
  set.schema_ = std::move(schema);
  set.eps_sequence_ = std::move(eps_sequence);
  return set;
}

absl::StatusOr<PriorSet> PriorSet::PredicateFamily(
    DatabaseSchema schema, std::vector<bool> predicate, double c,
    std::vector<double> eps_sequence) {
  if (predicate.size() != schema.entry_size()) {
    return absl::InvalidArgumentError(
        "predicate must have one value per entry symbol");
  }
  size_t ones = 0;
  for (bool b : predicate) ones += b ? 1 : 0;
  if (ones == 0 || ones == predicate.size()) {
    return absl::InvalidArgumentError(
        "predicate must hold on some but not all entry symbols");
  }
  if (!(c >= 0.0 && c < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("c must lie in [0, 0.5), got ", c));
  }
  if (absl::Status s = CheckEpsSequence(eps_sequence); !s.ok()) return s;
  PriorSet set(Kind::kPredicateFamily, schema.database_alphabet());
  set.schema_ = std::move(schema);
  set.predicate_ = std::move(predicate);
  set.c_ = c;
  set.eps_sequence_ = std::move(eps_sequence);
  return set;
}

void PriorSet::ForEach(absl::FunctionRef<void(const Pmf&)> fn) const {
  switch (kind_) {
    case Kind::kExplicit:
      for (const Pmf& p : members_) fn(p);
      return;
    case Kind::kSimplexGrid: {
      std::vector<size_t> parts(alphabet_.size());
      const double r = static_cast<double>(resolution_);
      EnumerateCompositions(
          resolution_, 0, parts, [&](const std::vector<size_t>& c) {
            std::vector<double> masses(c.size());
            for (size_t i = 0; i < c.size(); ++i) masses[i] = c[i] / r;
            fn(Pmf::FromWeights(alphabet_, std::move(masses)));
          });
      return;
    }
    case Kind::kProductFamily: {
      const DatabaseSchema& schema = *schema_;
      std::vector<Pmf> uniform(schema.n(),
                               Pmf::Uniform(schema.entry_alphabet()));
      fn(DatabasePrior::Product(schema, uniform)->joint());
      for (double eps : eps_sequence_) {
        for (size_t x = 0; x < schema.num_databases(); ++x) {
          fn(ProductTargetPrior(schema, schema.Decode(x), eps)->joint());
        }
      }
      return;
    }
    case Kind::kPredicateFamily: {
      const DatabaseSchema& schema = *schema_;
      std::vector<double> grid;
      for (int k = 1; k <= 9; ++k) grid.push_back(c_ + (1.0 - 2.0 * c_) * k / 10);
      for (double eps : eps_sequence_) {
        if (c_ + eps < 1.0 - c_ - eps) {
          grid.push_back(c_ + eps);
          grid.push_back(1.0 - c_ - eps);
        }
      }
      size_t ones = 0;
      for (bool b : predicate_) ones += b ? 1 : 0;
      const size_t zeros = predicate_.size() - ones;
      for (double p : grid) {
        std::vector<double> entry(predicate_.size());
        for (size_t d = 0; d < entry.size(); ++d) {
          entry[d] = predicate_[d] ? p / ones : (1.0 - p) / zeros;
        }
        const Pmf factor =
            Pmf::FromWeights(schema.entry_alphabet(), std::move(entry));
        fn(DatabasePrior::Product(schema,
                                  std::vector<Pmf>(schema.n(), factor))
               ->joint());
      }
      return;
    }
  }
}

absl::StatusOr<EpsPmlCertificate> CheckEpsPml(const Channel& channel,
                                              const PriorSet& priors,
                                              double eps) {
  if (!(channel.inputs() == priors.alphabet())) {
    return absl::InvalidArgumentError(
        "alphabet mismatch: prior set alphabet differs from channel inputs");
  }
  EpsPmlCertificate cert;
  cert.lower_estimate = priors.parametric();
  priors.ForEach([&](const Pmf& prior) {
    absl::StatusOr<Joint> joint = Joint::Create(channel, prior);
    if (!joint.ok()) return;
    const LeakageProfile profile = PmlProfile(*joint);
    if (cert.members_checked == 0 || profile.sup > cert.worst_value) {
      cert.worst_value = profile.sup;
      cert.worst_output = profile.witness;
      cert.worst_prior = prior;
    }
    ++cert.members_checked;
  });
  if (cert.members_checked == 0) {
    return absl::InvalidArgumentError("prior set is empty");
  }
  cert.holds = cert.worst_value <= eps;
  return cert;
}

}  // namespace pml
