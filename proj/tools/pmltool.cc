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

// pmltool: command-line front-end for the pml library.
//
// Exit codes: 0 success, 1 a verify suite found a violation, 2 invalid input.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "pml/config.h"
#include "pml/database.h"
#include "pml/disclosure.h"
#include "pml/distribution.h"
#include "pml/equivalences.h"
#include "pml/information.h"
#include "pml/io.h"
#include "pml/leakage.h"
#include "pml/mechanisms.h"
#include "pml/verification.h"

namespace {

using ::pml::FormatReal;
using ::pml::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return kExitInput;
}

void Line(const std::string& key, const std::string& value) {
  std::cout << key << "," << value << "\n";
}

void Line(const std::string& key, double value) {
  Line(key, FormatReal(value));
}

constexpr pml::Suite kAllSuites[] = {
    pml::Suite::kDominance,           pml::Suite::kPosteriorEntropyFloor,
    pml::Suite::kDisclosurePrevention, pml::Suite::kLowEntropyAttribute,
    pml::Suite::kCapacityFloor,       pml::Suite::kMinCostDisclosure,
    pml::Suite::kDpEquivalence,       pml::Suite::kFlpEquivalence,
    pml::Suite::kNonAttainment,       pml::Suite::kSinglingOut,
};

// Verify suite tokens accepted on the command line: every suite name plus
// the short aliases used by existing scripts.
const std::map<std::string, pml::Suite>& SuiteIds() {
  static const auto* ids = [] {
    auto* m = new std::map<std::string, pml::Suite>{
        {"eq-A2", pml::Suite::kPosteriorEntropyFloor},
        {"thm-3.5", pml::Suite::kDisclosurePrevention},
        {"prop-3.6", pml::Suite::kLowEntropyAttribute},
        {"thm-3.8", pml::Suite::kCapacityFloor},
        {"prop-3.9", pml::Suite::kMinCostDisclosure},
        {"thm-4.2", pml::Suite::kDpEquivalence},
        {"thm-4.5", pml::Suite::kFlpEquivalence},
        {"remark-B1", pml::Suite::kNonAttainment},
        {"cor-3.11", pml::Suite::kSinglingOut},
    };
    for (pml::Suite s : kAllSuites) m->emplace(pml::SuiteName(s), s);
    return m;
  }();
  return *ids;
}

absl::StatusOr<std::vector<std::string>> SplitLabels(const std::string& s) {
  std::vector<std::string> out = absl::StrSplit(s, ',');
  for (const std::string& label : out) {
    if (label.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("empty label in list '", s, "'"));
    }
  }
  return out;
}

absl::StatusOr<std::vector<double>> SplitNumbers(const std::string& s) {
  std::vector<double> out;
  for (absl::string_view part : absl::StrSplit(s, ',')) {
    try {
      size_t used = 0;
      const std::string text(part);
      out.push_back(std::stod(text, &used));
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      return absl::InvalidArgumentError(
          absl::StrCat("not a number: '", std::string(part), "'"));
    }
  }
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string mechanism;
  std::string prior;
  std::string format;
};

int RunAnalyze(const AnalyzeArgs& args, const pml::AnalysisConfig& config) {
  absl::StatusOr<Json> mech_json = pml::ReadJsonFile(args.mechanism);
  if (!mech_json.ok()) return Fail(mech_json.status());
  absl::StatusOr<pml::MechanismSpec> mech = pml::MechanismFromJson(*mech_json);
  if (!mech.ok()) return Fail(mech.status());
  absl::StatusOr<Json> prior_json = pml::ReadJsonFile(args.prior);
  if (!prior_json.ok()) return Fail(prior_json.status());
  absl::StatusOr<pml::Pmf> prior = pml::PmfFromJson(*prior_json);
  if (!prior.ok()) return Fail(prior.status());
  absl::StatusOr<pml::Joint> joint = pml::Joint::Create(mech->channel, *prior);
  if (!joint.ok()) return Fail(joint.status());

  const pml::LeakageProfile profile = pml::PmlProfile(*joint);
  const double capacity = pml::LeakageCapacity(mech->channel);
  const double entropy = pml::MinEntropy(*prior);
  absl::StatusOr<double> eps_max = pml::EpsilonMax(*prior);
  absl::StatusOr<pml::DisclosureResult> single = pml::DetectSingleOut(
      mech->channel, *prior, config.singling_out_threshold);
  if (!single.ok()) return Fail(single.status());
  std::optional<double> dp;
  std::optional<double> flp;
  if (mech->schema.has_value()) {
    absl::StatusOr<pml::DatabaseMechanism> m =
        pml::DatabaseMechanism::Create(*mech->schema, mech->channel);
    if (!m.ok()) return Fail(m.status());
    dp = pml::DpEpsilon(*m);
    flp = pml::FreeLunchEpsilon(*m);
  }

  const std::string format =
      args.format.empty() ? config.output_format : args.format;
  if (format == "json") {
    Json out;
    Json per = Json::object();
    for (const auto& [label, value] : profile.per_outcome) {
      per[label] = FormatReal(value);
    }
    out["pml"] = per;
    out["sup_pml"] = FormatReal(profile.sup);
    out["witness"] = profile.witness;
    out["leakage_capacity"] = FormatReal(capacity);
    out["prior_min_entropy"] = FormatReal(entropy);
    out["epsilon_max"] =
        eps_max.ok() ? FormatReal(*eps_max) : std::string("inf");
    out["singled_out"] = single->disclosed;
    out["singling_out_threshold"] = FormatReal(config.singling_out_threshold);
    if (dp.has_value()) {
      out["dp_epsilon"] = FormatReal(*dp);
      out["free_lunch_epsilon"] = FormatReal(*flp);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (format == "csv") {
    std::cout << "outcome,pml\n";
    for (const auto& [label, value] : profile.per_outcome) {
      std::cout << label << "," << FormatReal(value) << "\n";
    }
    return kExitOk;
  }
  for (const auto& [label, value] : profile.per_outcome) {
    Line(absl::StrCat("pml[", label, "]"), value);
  }
  Line("sup_pml", profile.sup);
  Line("witness", profile.witness);
  Line("leakage_capacity", capacity);
  Line("prior_min_entropy", entropy);
  Line("epsilon_max", eps_max.ok() ? FormatReal(*eps_max) : "inf");
  if (dp.has_value()) {
    Line("dp_epsilon", *dp);
    Line("free_lunch_epsilon", *flp);
  }
  Line("singling_out_threshold", config.singling_out_threshold);
  Line("singled_out", single->disclosed ? "true" : "false");
  Line("min_posterior_entropy", single->witness.posterior_entropy);
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string id;
  std::string instance;
  std::vector<uint64_t> random;
};

int RunVerify(const VerifyArgs& args, const pml::AnalysisConfig& config) {
  auto it = SuiteIds().find(args.id);
  if (it == SuiteIds().end()) {
    std::vector<std::string> known;
    for (pml::Suite s : kAllSuites) known.emplace_back(pml::SuiteName(s));
    return Fail(absl::InvalidArgumentError(absl::StrCat(
        "unknown suite '", args.id, "'; expected one of ",
        absl::StrJoin(known, ", "))));
  }
  const pml::Suite suite = it->second;
  pml::VerifyOptions options;
  options.tolerance = config.numeric_tolerance;
  options.equivalence_tolerance = config.equivalence_tolerance;
  options.eps_sequence = config.eps_sequence;

  if (args.instance.empty() == args.random.empty()) {
    return Fail(absl::InvalidArgumentError(
        "give exactly one of --instance PATH or --random SEED COUNT"));
  }
  absl::StatusOr<pml::SuiteReport> report;
  std::optional<pml::EquivalenceReport> equivalence;
  if (!args.instance.empty()) {
    absl::StatusOr<Json> json = pml::ReadJsonFile(args.instance);
    if (!json.ok()) return Fail(json.status());
    absl::StatusOr<pml::Instance> instance = pml::InstanceFromJson(*json);
    if (!instance.ok()) return Fail(instance.status());
    report = pml::RunInstanceSuite(suite, *instance, options);
    if (report.ok() && instance->mechanism.schema.has_value() &&
        (suite == pml::Suite::kDpEquivalence ||
         suite == pml::Suite::kFlpEquivalence ||
         suite == pml::Suite::kNonAttainment)) {
      absl::StatusOr<pml::DatabaseMechanism> m = pml::DatabaseMechanism::Create(
          *instance->mechanism.schema, instance->mechanism.channel);
      if (!m.ok()) return Fail(m.status());
      absl::StatusOr<pml::EquivalenceReport> eq = pml::VerifyEquivalences(
          *m, options.equivalence_tolerance, options.eps_sequence);
      if (!eq.ok()) return Fail(eq.status());
      equivalence = *std::move(eq);
    }
  } else {
    report = pml::RunRandomSuite(suite, args.random[0], args.random[1],
                                 options);
  }
  if (!report.ok()) return Fail(report.status());

  Line("suite", args.id);
  Line("property", report->name);
  if (equivalence.has_value()) {
    Line("dp_epsilon", equivalence->dp_eps);
    Line("free_lunch_epsilon", equivalence->flp_eps);
    for (const pml::SupremumTrace& t : equivalence->traces) {
      const std::string name(pml::FormulationName(t.formulation));
      Line(absl::StrCat("limit[", name, "]"), t.limit_estimate);
      Line(absl::StrCat("gap[", name, "]"), t.gap);
    }
  }
  Line("instances", absl::StrCat(report->instances));
  Line("checks", absl::StrCat(report->checks));
  Line("violations", absl::StrCat(report->violations));
  for (const std::string& failure : report->failures) {
    Line("violation", failure);
  }
  Line("result", report->passed() ? "pass" : "fail");
  return report->passed() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- laplace

struct LaplaceArgs {
  int64_t n = 0;
  double b = 0.0;
  std::optional<double> c;
  std::optional<double> p;
  std::string sweep;
};

struct LaplaceRow {
  std::optional<double> exact;
  std::optional<double> bound;
  std::optional<double> simplified;
};

absl::StatusOr<LaplaceRow> EvaluateLaplace(int64_t n, double b,
                                           std::optional<double> c,
                                           std::optional<double> p) {
  LaplaceRow row;
  if (p.has_value()) {
    absl::StatusOr<double> v = pml::LaplaceCountingLeakageExact(n, b, *p);
    if (!v.ok()) return v.status();
    row.exact = *v;
  }
  if (c.has_value()) {
    absl::StatusOr<double> v = pml::LaplaceCountingLeakageBound(n, b, *c);
    if (!v.ok()) return v.status();
    row.bound = *v;
    v = pml::LaplaceCountingLeakageSimplified(n, b, *c);
    if (!v.ok()) return v.status();
    row.simplified = *v;
  }
  if (p.has_value() && c.has_value() && !(*p > *c && *p < 1.0 - *c)) {
    return absl::InvalidArgumentError("p must lie in (c, 1 - c)");
  }
  return row;
}

struct Sweep {
  std::string param;
  std::vector<double> values;
};

// PARAM=START:STOP:COUNT[:log]
absl::StatusOr<Sweep> ParseSweep(const std::string& spec) {
  const std::vector<std::string> kv = absl::StrSplit(spec, '=');
  if (kv.size() != 2) {
    return absl::InvalidArgumentError(
        "sweep must look like PARAM=START:STOP:COUNT[:log]");
  }
  const std::vector<std::string> parts = absl::StrSplit(kv[1], ':');
  if (parts.size() != 3 && !(parts.size() == 4 && parts[3] == "log")) {
    return absl::InvalidArgumentError(
        "sweep must look like PARAM=START:STOP:COUNT[:log]");
  }
  double start = 0.0;
  double stop = 0.0;
  long count = 0;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    count = std::stol(parts[2]);
  } catch (const std::exception&) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad sweep range '", kv[1], "'"));
  }
  if (count < 1 || count > 100000) {
    return absl::InvalidArgumentError("sweep COUNT must be in [1, 100000]");
  }
  const bool log_scale = parts.size() == 4;
  if (log_scale && !(start > 0.0 && stop > 0.0)) {
    return absl::InvalidArgumentError("log sweep needs positive endpoints");
  }
  Sweep sweep{kv[0], {}};
  for (long k = 0; k < count; ++k) {
    const double f = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    sweep.values.push_back(
        log_scale ? std::exp(std::log(start) +
                             f * (std::log(stop) - std::log(start)))
                  : start + f * (stop - start));
  }
  return sweep;
}

std::string Cell(const std::optional<double>& v) {
  return v.has_value() ? FormatReal(*v) : "";
}

int RunLaplace(const LaplaceArgs& args) {
  if (!args.c.has_value() && !args.p.has_value()) {
    return Fail(absl::InvalidArgumentError("give --c, --p or both"));
  }
  if (args.sweep.empty()) {
    absl::StatusOr<LaplaceRow> row =
        EvaluateLaplace(args.n, args.b, args.c, args.p);
    if (!row.ok()) return Fail(row.status());
    Line("dp_parameter", 1.0 / (static_cast<double>(args.n) * args.b));
    if (row->exact.has_value()) {
      Line("upper_tail", *pml::LaplaceUpperTailLeakage(args.n, args.b, *args.p));
      Line("lower_tail", *pml::LaplaceLowerTailLeakage(args.n, args.b, *args.p));
      Line("exact", *row->exact);
    }
    if (row->bound.has_value()) {
      Line("bound", *row->bound);
      Line("simplified", *row->simplified);
    }
    return kExitOk;
  }
  absl::StatusOr<Sweep> sweep = ParseSweep(args.sweep);
  if (!sweep.ok()) return Fail(sweep.status());
  if (sweep->param != "n" && sweep->param != "b" && sweep->param != "c" &&
      sweep->param != "p") {
    return Fail(absl::InvalidArgumentError(
        absl::StrCat("cannot sweep '", sweep->param, "'; use n, b, c or p")));
  }
  std::cout << "n,b,c,p,exact,bound,simplified\n";
  for (double v : sweep->values) {
    int64_t n = args.n;
    double b = args.b;
    std::optional<double> c = args.c;
    std::optional<double> p = args.p;
    if (sweep->param == "n") n = static_cast<int64_t>(std::llround(v));
    if (sweep->param == "b") b = v;
    if (sweep->param == "c") c = v;
    if (sweep->param == "p") p = v;
    absl::StatusOr<LaplaceRow> row = EvaluateLaplace(n, b, c, p);
    if (!row.ok()) return Fail(row.status());
    std::cout << n << "," << FormatReal(b) << "," << Cell(c) << "," << Cell(p)
              << "," << Cell(row->exact) << "," << Cell(row->bound) << ","
              << Cell(row->simplified) << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- threshold

struct ThresholdArgs {
  int64_t n = 0;
  int64_t m = -1;
  double p = 0.0;
  int answer = 1;
  bool sweep = false;
  std::string ns = "200,500,1000,2000";
  std::string ps = "0.3,0.5";
  double ratio_step = 0.01;
  std::string reference_range = "0.3:0.7";
};

// min over p in [lo, hi] of the Bernoulli(p) min-entropy.
absl::StatusOr<double> ReferenceThreshold(const std::string& range) {
  const std::vector<std::string> parts = absl::StrSplit(range, ':');
  double lo = 0.0;
  double hi = 0.0;
  try {
    if (parts.size() != 2) throw std::invalid_argument(range);
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
  } catch (const std::exception&) {
    return absl::InvalidArgumentError(
        absl::StrCat("reference range must look like LO:HI, got '", range,
                     "'"));
  }
  if (!(lo > 0.0 && lo <= hi && hi < 1.0)) {
    return absl::InvalidArgumentError(
        "reference range needs 0 < LO <= HI < 1");
  }
  return -std::log(std::max(hi, 1.0 - lo));
}

std::string BoundCell(const pml::ThresholdLeakage& t) {
  return t.chernoff_bound.has_value() ? FormatReal(*t.chernoff_bound) : "none";
}

int RunThreshold(const ThresholdArgs& args) {
  absl::StatusOr<double> reference = ReferenceThreshold(args.reference_range);
  if (!reference.ok()) return Fail(reference.status());
  if (!args.sweep) {
    if (args.n < 1 || args.m < 0) {
      return Fail(absl::InvalidArgumentError(
          "give --n and --m, or use --sweep"));
    }
    absl::StatusOr<pml::ThresholdLeakage> t = pml::ThresholdQueryLeakage(
        {args.n, args.m, args.p, args.answer});
    if (!t.ok()) return Fail(t.status());
    Line("exact", t->exact);
    Line("chernoff_bound", BoundCell(*t));
    Line("reference", *reference);
    Line("impossible_outcome", t->impossible_outcome ? "true" : "false");
    Line("below_reference", t->exact < *reference ? "true" : "false");
    return kExitOk;
  }
  absl::StatusOr<std::vector<double>> ns = SplitNumbers(args.ns);
  if (!ns.ok()) return Fail(ns.status());
  absl::StatusOr<std::vector<double>> ps = SplitNumbers(args.ps);
  if (!ps.ok()) return Fail(ps.status());
  if (!(args.ratio_step > 0.0 && args.ratio_step < 1.0)) {
    return Fail(absl::InvalidArgumentError("--ratio-step must be in (0, 1)"));
  }
  std::cout << "n,p,m,ratio,answer,exact,chernoff_bound,reference\n";
  for (double p : *ps) {
    for (double nd : *ns) {
      const int64_t n = static_cast<int64_t>(std::llround(nd));
      // answer 1 is bounded for m/n <= p, answer 0 for (m+1)/n >= p.
      for (int k = 0;; ++k) {
        const double ratio = k * args.ratio_step;
        if (ratio > 1.0 + 1e-12) break;
        if (args.answer == 1 && ratio > p + 1e-12) break;
        const int64_t m = std::min<int64_t>(n, std::llround(ratio * n));
        if (args.answer == 0 && (m + 1.0) / n < p) continue;
        absl::StatusOr<pml::ThresholdLeakage> t =
            pml::ThresholdQueryLeakage({n, m, p, args.answer});
        if (!t.ok()) return Fail(t.status());
        std::cout << n << "," << FormatReal(p) << "," << m << ","
                  << FormatReal(static_cast<double>(m) / n) << ","
                  << args.answer << "," << FormatReal(t->exact) << ","
                  << BoundCell(*t) << "," << FormatReal(*reference) << "\n";
      }
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  std::string out;
  std::string prior;
  double alpha = 0.1;
  std::string disclosed;
  double lambda = 0.5;
  std::string adversary_kind = "product-target";
  std::string entry_alphabet = "0,1";
  size_t n = 2;
  std::string target;
  double eps = 0.1;
  std::string mechanism;
  size_t entry = 1;
  std::string context;
  std::string y;
  std::string value;
  std::string other;
};

absl::Status PrepareOut(const std::string& dir) {
  if (dir.empty()) return absl::InvalidArgumentError("--out is required");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create '", dir, "': ", ec.message()));
  }
  return absl::OkStatus();
}

std::string OutPath(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

absl::StatusOr<pml::Pmf> LoadPrior(const std::string& path) {
  if (path.empty()) return absl::InvalidArgumentError("--prior is required");
  absl::StatusOr<Json> json = pml::ReadJsonFile(path);
  if (!json.ok()) return json.status();
  return pml::PmfFromJson(*json);
}

absl::StatusOr<pml::DatabaseMechanism> LoadDatabaseMechanism(
    const std::string& path) {
  if (path.empty()) {
    return absl::InvalidArgumentError("--mechanism is required");
  }
  absl::StatusOr<Json> json = pml::ReadJsonFile(path);
  if (!json.ok()) return json.status();
  absl::StatusOr<pml::MechanismSpec> spec = pml::MechanismFromJson(*json);
  if (!spec.ok()) return spec.status();
  if (!spec->schema.has_value()) {
    return absl::InvalidArgumentError(
        "mechanism needs 'entry_alphabet' and 'n'");
  }
  return pml::DatabaseMechanism::Create(*spec->schema, spec->channel);
}

absl::Status ConstructMinCost(const ConstructArgs& args) {
  absl::StatusOr<pml::Pmf> prior = LoadPrior(args.prior);
  if (!prior.ok()) return prior.status();
  absl::StatusOr<pml::MinCostConstruction> mc =
      pml::ConstructMinCostDisclosure(*prior, args.alpha);
  if (!mc.ok()) return mc.status();
  if (absl::Status s = PrepareOut(args.out); !s.ok()) return s;
  const Json mechanism = pml::ChannelToJson(mc->mechanism);
  const Json attribute = pml::ChannelToJson(mc->attribute);
  const Json prior_json = pml::PmfToJson(*prior);
  Json instance;
  instance["mechanism"] = mechanism;
  instance["prior"] = prior_json;
  instance["u_kernel"] = attribute;
  for (const auto& [name, value] :
       {std::pair<std::string, Json>{"mechanism.json", mechanism},
        {"attribute.json", attribute},
        {"prior.json", prior_json},
        {"instance.json", instance}}) {
    if (absl::Status s = pml::WriteJsonFile(OutPath(args.out, name), value);
        !s.ok()) {
      return s;
    }
  }
  const pml::LeakageProfile profile =
      pml::PmlProfile(*pml::Joint::Create(mc->mechanism, *prior));
  Line("x_min", prior->alphabet().label(mc->x_min));
  Line("p_min", mc->p_min);
  Line("sup_pml", profile.sup);
  Line("witness", profile.witness);
  return absl::OkStatus();
}

absl::Status ConstructLowEntropy(const ConstructArgs& args) {
  absl::StatusOr<pml::Pmf> p_u = LoadPrior(args.prior);
  if (!p_u.ok()) return p_u.status();
  absl::StatusOr<size_t> disclosed = p_u->alphabet().Find(args.disclosed);
  if (!disclosed.ok()) return disclosed.status();
  absl::StatusOr<pml::Channel> kernel =
      pml::ConstructLowEntropyAttribute(*p_u, *disclosed, args.lambda);
  if (!kernel.ok()) return kernel.status();
  if (absl::Status s = PrepareOut(args.out); !s.ok()) return s;
  if (absl::Status s = pml::WriteJsonFile(OutPath(args.out, "kernel.json"),
                                          pml::ChannelToJson(*kernel));
      !s.ok()) {
    return s;
  }
  const pml::Pmf p_w = *pml::PushForward(*kernel, *p_u);
  if (absl::Status s = pml::WriteJsonFile(OutPath(args.out, "p_w.json"),
                                          pml::PmfToJson(p_w));
      !s.ok()) {
    return s;
  }
  Line("lambda_threshold", *pml::LowEntropyLambdaThreshold(*p_u, *disclosed));
  for (size_t w = 0; w < p_w.size(); ++w) {
    Line(absl::StrCat("p_w[", p_w.alphabet().label(w), "]"), p_w.prob(w));
  }
  Line("min_entropy_u", pml::MinEntropy(*p_u));
  Line("min_entropy_w", pml::MinEntropy(p_w));
  return absl::OkStatus();
}

absl::StatusOr<size_t> EntryValue(const pml::DatabaseSchema& schema,
                                  const std::string& label) {
  return schema.entry_alphabet().Find(label);
}

absl::Status ConstructAdversarialPrior(const ConstructArgs& args) {
  if (args.adversary_kind == "product-target") {
    absl::StatusOr<std::vector<std::string>> labels =
        SplitLabels(args.entry_alphabet);
    if (!labels.ok()) return labels.status();
    absl::StatusOr<pml::Alphabet> entries =
        pml::Alphabet::Create(*std::move(labels));
    if (!entries.ok()) return entries.status();
    absl::StatusOr<pml::DatabaseSchema> schema =
        pml::DatabaseSchema::Create(*std::move(entries), args.n);
    if (!schema.ok()) return schema.status();
    absl::StatusOr<std::vector<std::string>> target = SplitLabels(args.target);
    if (!target.ok()) return target.status();
    if (target->size() != schema->n()) {
      return absl::InvalidArgumentError(
          absl::StrCat("--target needs ", schema->n(), " entries"));
    }
    std::vector<size_t> indices;
    for (const std::string& t : *target) {
      absl::StatusOr<size_t> v = EntryValue(*schema, t);
      if (!v.ok()) return v.status();
      indices.push_back(*v);
    }
    absl::StatusOr<pml::DatabasePrior> prior =
        pml::ProductTargetPrior(*schema, indices, args.eps);
    if (!prior.ok()) return prior.status();
    if (absl::Status s = PrepareOut(args.out); !s.ok()) return s;
    if (absl::Status s = pml::WriteJsonFile(OutPath(args.out, "prior.json"),
                                            pml::PmfToJson(prior->joint()));
        !s.ok()) {
      return s;
    }
    for (size_t x = 0; x < prior->joint().size(); ++x) {
      Line(absl::StrCat("prior[", prior->joint().alphabet().label(x), "]"),
           prior->joint().prob(x));
    }
    return absl::OkStatus();
  }

  absl::StatusOr<pml::DatabaseMechanism> m =
      LoadDatabaseMechanism(args.mechanism);
  if (!m.ok()) return m.status();
  const pml::DatabaseSchema& schema = m->schema();
  if (args.entry < 1 || args.entry > schema.n()) {
    return absl::InvalidArgumentError(
        absl::StrCat("--entry must lie in [1, ", schema.n(), "]"));
  }
  const size_t i = args.entry - 1;
  absl::StatusOr<size_t> y = m->channel().outputs().Find(args.y);
  if (!y.ok()) return y.status();
  if (absl::Status s = PrepareOut(args.out); !s.ok()) return s;

  if (args.adversary_kind == "conditional-entry") {
    // --context lists the other n - 1 entries in order.
    absl::StatusOr<std::vector<std::string>> ctx =
        schema.n() == 1 ? std::vector<std::string>{} : SplitLabels(args.context);
    if (!ctx.ok()) return ctx.status();
    if (ctx->size() + 1 != schema.n()) {
      return absl::InvalidArgumentError(
          absl::StrCat("--context needs ", schema.n() - 1, " entries"));
    }
    std::vector<size_t> full(schema.n(), 0);
    for (size_t j = 0, k = 0; j < schema.n(); ++j) {
      if (j == i) continue;
      absl::StatusOr<size_t> v = EntryValue(schema, (*ctx)[k++]);
      if (!v.ok()) return v.status();
      full[j] = *v;
    }
    const size_t context = schema.ContextOf(schema.Encode(full), i);
    absl::StatusOr<pml::Pmf> prior =
        pml::ConditionalEntryPrior(*m, i, context, *y, args.eps);
    if (!prior.ok()) return prior.status();
    if (absl::Status s = pml::WriteJsonFile(OutPath(args.out, "prior.json"),
                                            pml::PmfToJson(*prior));
        !s.ok()) {
      return s;
    }
    for (size_t d = 0; d < prior->size(); ++d) {
      Line(absl::StrCat("prior[", prior->alphabet().label(d), "]"),
           prior->prob(d));
    }
    return absl::OkStatus();
  }
  if (args.adversary_kind == "correlated-entry") {
    absl::StatusOr<size_t> value = EntryValue(schema, args.value);
    if (!value.ok()) return value.status();
    absl::StatusOr<size_t> other = EntryValue(schema, args.other);
    if (!other.ok()) return other.status();
    absl::StatusOr<pml::Channel> kernel =
        pml::CorrelatedEntryKernel(*m, i, *value, *other, *y, args.eps);
    if (!kernel.ok()) return kernel.status();
    if (absl::Status s = pml::WriteJsonFile(OutPath(args.out, "kernel.json"),
                                            pml::ChannelToJson(*kernel));
        !s.ok()) {
      return s;
    }
    Line("contexts", absl::StrCat(kernel->num_outputs()));
    return absl::OkStatus();
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown adversarial prior kind '", args.adversary_kind,
      "'; expected product-target, conditional-entry or correlated-entry"));
}

int RunConstruct(const ConstructArgs& args) {
  absl::Status status;
  if (args.kind == "min-cost") {
    status = ConstructMinCost(args);
  } else if (args.kind == "low-entropy-attr") {
    status = ConstructLowEntropy(args);
  } else if (args.kind == "adversarial-prior") {
    status = ConstructAdversarialPrior(args);
  } else {
    status = absl::InvalidArgumentError(absl::StrCat(
        "unknown construction '", args.kind,
        "'; expected min-cost, low-entropy-attr or adversarial-prior"));
  }
  return status.ok() ? kExitOk : Fail(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointwise maximal leakage analysis"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file (default: $PMLTOOL_CONFIG)");

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Leakage profile of a mechanism and prior");
  analyze_cmd->add_option("--mechanism", analyze.mechanism)->required();
  analyze_cmd->add_option("--prior", analyze.prior)->required();
  analyze_cmd->add_option("--format", analyze.format, "text, json or csv");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("id", verify.id, "Suite name or alias")->required();
  verify_cmd->add_option("--instance", verify.instance, "Instance JSON file");
  verify_cmd->add_option("--random", verify.random, "SEED COUNT")
      ->expected(2);

  LaplaceArgs laplace;
  CLI::App* laplace_cmd =
      app.add_subcommand("laplace", "Laplace counting query leakage");
  laplace_cmd->add_option("--n", laplace.n)->required();
  laplace_cmd->add_option("--b", laplace.b)->required();
  laplace_cmd->add_option("--c", laplace.c);
  laplace_cmd->add_option("--p", laplace.p);
  laplace_cmd->add_option("--sweep", laplace.sweep,
                          "PARAM=START:STOP:COUNT[:log]");

  ThresholdArgs threshold;
  CLI::App* threshold_cmd =
      app.add_subcommand("threshold", "Deterministic threshold query leakage");
  threshold_cmd->add_option("--n", threshold.n);
  threshold_cmd->add_option("--m", threshold.m);
  threshold_cmd->add_option("--p", threshold.p);
  threshold_cmd->add_option("--answer", threshold.answer)
      ->check(CLI::IsMember({0, 1}));
  threshold_cmd->add_flag("--sweep", threshold.sweep);
  threshold_cmd->add_option("--ns", threshold.ns, "Sweep sizes");
  threshold_cmd->add_option("--ps", threshold.ps, "Sweep probabilities");
  threshold_cmd->add_option("--ratio-step", threshold.ratio_step);
  threshold_cmd->add_option("--reference-range", threshold.reference_range,
                            "LO:HI for the min-entropy reference");

  ConstructArgs construct;
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "Write an adversarial construction");
  construct_cmd->add_option("kind", construct.kind)->required();
  construct_cmd->add_option("--out", construct.out);
  construct_cmd->add_option("--prior", construct.prior);
  construct_cmd->add_option("--alpha", construct.alpha);
  construct_cmd->add_option("--disclosed", construct.disclosed);
  construct_cmd->add_option("--lambda", construct.lambda);
  construct_cmd->add_option("--adversary", construct.adversary_kind,
                            "product-target, conditional-entry or "
                            "correlated-entry");
  construct_cmd->add_option("--entry-alphabet", construct.entry_alphabet);
  construct_cmd->add_option("--n", construct.n);
  construct_cmd->add_option("--target", construct.target);
  construct_cmd->add_option("--eps", construct.eps);
  construct_cmd->add_option("--mechanism", construct.mechanism);
  construct_cmd->add_option("--entry", construct.entry, "1-based entry");
  construct_cmd->add_option("--context", construct.context);
  construct_cmd->add_option("--y", construct.y);
  construct_cmd->add_option("--value", construct.value);
  construct_cmd->add_option("--other", construct.other);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  absl::StatusOr<pml::AnalysisConfig> config =
      config_path.empty() ? pml::ConfigFromEnvironment()
                          : pml::LoadConfig(config_path);
  if (!config.ok()) return Fail(config.status());

  if (*analyze_cmd) return RunAnalyze(analyze, *config);
  if (*verify_cmd) return RunVerify(verify, *config);
  if (*laplace_cmd) return RunLaplace(laplace);
  if (*threshold_cmd) return RunThreshold(threshold);
  if (*construct_cmd) return RunConstruct(construct);
  return kExitInput;
}
