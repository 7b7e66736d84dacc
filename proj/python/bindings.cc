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

// Python bindings. Distributions are plain lists of floats and channels are
// lists of rows; symbols are indexed 0..k-1.

#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "absl/status/statusor.h"
#include "pml/binomial.h"
#include "pml/database.h"
#include "pml/disclosure.h"
#include "pml/distribution.h"
#include "pml/equivalences.h"
#include "pml/information.h"
#include "pml/leakage.h"
#include "pml/mechanisms.h"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<double>>;

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  if (!value.ok()) throw py::value_error(std::string(value.status().message()));
  return *std::move(value);
}

pml::Pmf MakePmf(const std::vector<double>& probs) {
  if (probs.empty()) throw py::value_error("distribution must be nonempty");
  return Unwrap(pml::Pmf::Create(pml::Alphabet::Indexed(probs.size()), probs));
}

pml::Channel MakeChannel(const Rows& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw py::value_error("channel must have at least one row and column");
  }
  return Unwrap(pml::Channel::Create(pml::Alphabet::Indexed(rows.size()),
                                     pml::Alphabet::Indexed(rows[0].size()),
                                     rows));
}

pml::Joint MakeJoint(const Rows& rows, const std::vector<double>& prior) {
  return Unwrap(pml::Joint::Create(MakeChannel(rows), MakePmf(prior)));
}

pml::DatabaseMechanism MakeDatabase(const Rows& rows, size_t entry_size,
                                    size_t n) {
  pml::DatabaseSchema schema = Unwrap(
      pml::DatabaseSchema::Create(pml::Alphabet::Indexed(entry_size), n));
  return Unwrap(pml::DatabaseMechanism::Create(schema, MakeChannel(rows)));
}

std::vector<double> Probs(const pml::Pmf& p) {
  return {p.probs().begin(), p.probs().end()};
}

py::dict ProfileDict(const pml::LeakageProfile& profile) {
  py::list values;
  for (const auto& [label, value] : profile.per_outcome) values.append(value);
  py::dict out;
  out["per_outcome"] = values;
  out["sup"] = profile.sup;
  out["witness"] = profile.witness_index;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pointwise maximal leakage for finite mechanisms";

  m.def("min_entropy", [](const std::vector<double>& p) {
    return pml::MinEntropy(MakePmf(p));
  });
  m.def("renyi_div_inf", [](const std::vector<double>& p,
                            const std::vector<double>& q) {
    return Unwrap(pml::RenyiDivInf(MakePmf(p), MakePmf(q)));
  });
  m.def("kl_bernoulli", [](double q, double r) {
    return Unwrap(pml::KlBernoulli(q, r));
  });
  m.def("binomial_cdf", [](int64_t n, int64_t k, double p) {
    return Unwrap(pml::BinomialCdf(n, k, p));
  });
  m.def("chernoff_tail_bound", [](int64_t n, int64_t k, double p) {
    return Unwrap(pml::ChernoffTailBound(n, k, p));
  });
  m.def("output_marginal", [](const Rows& rows, const std::vector<double>& prior) {
    return Probs(MakeJoint(rows, prior).output_marginal());
  });
  m.def("posterior", [](const Rows& rows, const std::vector<double>& prior,
                        size_t y) {
    const pml::Joint joint = MakeJoint(rows, prior);
    if (y >= joint.channel().num_outputs()) {
      throw py::index_error("output index out of range");
    }
    return Probs(pml::Posterior(joint, y));
  });

  m.def(
      "pml",
      [](const Rows& rows, const std::vector<double>& prior, size_t y) {
        const pml::Joint joint = MakeJoint(rows, prior);
        if (y >= joint.channel().num_outputs()) {
          throw py::index_error("output index out of range");
        }
        return pml::Pml(joint, y);
      },
      py::arg("rows"), py::arg("prior"), py::arg("y"));
  m.def("pml_profile", [](const Rows& rows, const std::vector<double>& prior) {
    return ProfileDict(pml::PmlProfile(MakeJoint(rows, prior)));
  });
  m.def("leakage_capacity",
        [](const Rows& rows) { return pml::LeakageCapacity(MakeChannel(rows)); });
  m.def("epsilon_max", [](const std::vector<double>& p) {
    return Unwrap(pml::EpsilonMax(MakePmf(p)));
  });

  m.def("dp_epsilon", [](const Rows& rows, size_t entry_size, size_t n) {
    return pml::DpEpsilon(MakeDatabase(rows, entry_size, n));
  });
  m.def("free_lunch_epsilon", [](const Rows& rows, size_t entry_size,
                                 size_t n) {
    return pml::FreeLunchEpsilon(MakeDatabase(rows, entry_size, n));
  });
  m.def(
      "verify_equivalences",
      [](const Rows& rows, size_t entry_size, size_t n, double tol) {
        const pml::EquivalenceReport report = Unwrap(pml::VerifyEquivalences(
            MakeDatabase(rows, entry_size, n), tol));
        py::dict traces;
        for (const pml::SupremumTrace& t : report.traces) {
          py::dict d;
          d["values"] = t.values;
          d["target"] = t.target;
          d["gap"] = t.gap;
          d["monotone"] = t.monotone;
          d["strictly_below"] = t.strictly_below;
          d["passed"] = t.passed;
          traces[py::str(std::string(pml::FormulationName(t.formulation)))] = d;
        }
        py::dict out;
        out["dp_epsilon"] = report.dp_eps;
        out["free_lunch_epsilon"] = report.flp_eps;
        out["passed"] = report.passed;
        out["traces"] = traces;
        return out;
      },
      py::arg("rows"), py::arg("entry_size"), py::arg("n"),
      py::arg("tol") = 1e-4);

  m.def("capacity_entropy_floor", [](const std::vector<double>& prior,
                                     double capacity) {
    return Unwrap(pml::CapacityEntropyFloor(MakePmf(prior), capacity));
  });
  m.def("singles_out", [](const Rows& rows, const std::vector<double>& prior,
                          double threshold) {
    return Unwrap(pml::DetectSingleOut(MakeChannel(rows), MakePmf(prior),
                                       threshold))
        .disclosed;
  });
  m.def("construct_min_cost", [](const std::vector<double>& prior,
                                 double alpha) {
    const pml::MinCostConstruction mc =
        Unwrap(pml::ConstructMinCostDisclosure(MakePmf(prior), alpha));
    py::dict out;
    out["mechanism"] = mc.mechanism.Rows();
    out["attribute"] = mc.attribute.Rows();
    out["x_min"] = mc.x_min;
    out["p_min"] = mc.p_min;
    return out;
  });

  m.def("threshold_query_leakage", [](int64_t n, int64_t k, double p,
                                      int answer) {
    const pml::ThresholdLeakage t =
        Unwrap(pml::ThresholdQueryLeakage({n, k, p, answer}));
    py::dict out;
    out["exact"] = t.exact;
    out["chernoff_bound"] = t.chernoff_bound.has_value()
                                ? py::object(py::float_(*t.chernoff_bound))
                                : py::object(py::none());
    out["impossible_outcome"] = t.impossible_outcome;
    return out;
  });
  m.def("laplace_leakage_exact", [](int64_t n, double b, double p) {
    return Unwrap(pml::LaplaceCountingLeakageExact(n, b, p));
  });
  m.def("laplace_leakage_bound", [](int64_t n, double b, double c) {
    return Unwrap(pml::LaplaceCountingLeakageBound(n, b, c));
  });
  m.def("laplace_leakage_simplified", [](int64_t n, double b, double c) {
    return Unwrap(pml::LaplaceCountingLeakageSimplified(n, b, c));
  });
  m.def("laplace_pml_at_y", [](int64_t n, double b, double p, double y) {
    return Unwrap(pml::LaplaceCountingPmlAtY(n, b, p, y));
  });
}
