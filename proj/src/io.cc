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

#include "pml/io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pml {
namespace {

absl::Status JsonError(const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat("invalid JSON: ", what));
}

absl::StatusOr<std::vector<std::string>> Labels(const Json& value,
                                                const char* key) {
  if (!value.contains(key) || !value[key].is_array()) {
    return JsonError(absl::StrCat("missing array '", key, "'"));
  }
  std::vector<std::string> labels;
  for (const Json& item : value[key]) {
    if (item.is_string()) {
      labels.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      labels.push_back(absl::StrCat(item.get<int64_t>()));
    } else {
      return JsonError(absl::StrCat("'", key, "' holds a non-string label"));
    }
  }
  return labels;
}

absl::StatusOr<std::vector<double>> Numbers(const Json& value,
                                            const std::string& what) {
  if (!value.is_array()) return JsonError(absl::StrCat(what, " not an array"));
  std::vector<double> out;
  out.reserve(value.size());
  for (const Json& item : value) {
    if (!item.is_number()) {
      return JsonError(absl::StrCat(what, " holds a non-number"));
    }
    out.push_back(item.get<double>());
  }
  return out;
}

absl::StatusOr<std::vector<std::vector<double>>> Rows(const Json& value) {
  if (!value.contains("rows") || !value["rows"].is_array()) {
    return JsonError("missing array 'rows'");
  }
  std::vector<std::vector<double>> rows;
  for (const Json& row : value["rows"]) {
    absl::StatusOr<std::vector<double>> r = Numbers(row, "row");
    if (!r.ok()) return r.status();
    rows.push_back(*std::move(r));
  }
  return rows;
}

}  // namespace

absl::StatusOr<Json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json value = Json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat("parse error in '", path, "'"));
  }
  return value;
}

absl::Status WriteJsonFile(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write '", path, "'"));
  }
  // Doubles are dumped with round-trip precision by nlohmann::json.
  out << value.dump(2) << "\n";
  return out ? absl::OkStatus()
             : absl::InternalError(absl::StrCat("write failed: ", path));
}

absl::StatusOr<Pmf> PmfFromJson(const Json& value) {
  if (!value.is_object()) return JsonError("prior must be an object");
  absl::StatusOr<std::vector<std::string>> labels = Labels(value, "labels");
  if (!labels.ok()) return labels.status();
  if (!value.contains("probs")) return JsonError("missing array 'probs'");
  absl::StatusOr<std::vector<double>> probs = Numbers(value["probs"], "probs");
  if (!probs.ok()) return probs.status();
  return Pmf::Create(*std::move(labels), *std::move(probs));
}

Json PmfToJson(const Pmf& pmf) {
  Json out;
  out["labels"] = pmf.alphabet().labels();
  out["probs"] = std::vector<double>(pmf.probs().begin(), pmf.probs().end());
  return out;
}

absl::StatusOr<Channel> ChannelFromJson(const Json& value) {
  if (!value.is_object()) return JsonError("mechanism must be an object");
  absl::StatusOr<std::vector<std::string>> inputs =
      Labels(value, "input_labels");
  if (!inputs.ok()) return inputs.status();
  absl::StatusOr<std::vector<std::string>> outputs =
      Labels(value, "output_labels");
  if (!outputs.ok()) return outputs.status();
  absl::StatusOr<std::vector<std::vector<double>>> rows = Rows(value);
  if (!rows.ok()) return rows.status();
  return Channel::Create(*std::move(inputs), *std::move(outputs),
                         *std::move(rows));
}

Json ChannelToJson(const Channel& channel) {
  Json out;
  out["input_labels"] = channel.inputs().labels();
  out["output_labels"] = channel.outputs().labels();
  out["rows"] = channel.Rows();
  return out;
}

absl::StatusOr<MechanismSpec> MechanismFromJson(const Json& value) {
  if (!value.is_object()) return JsonError("mechanism must be an object");
  if (!value.contains("entry_alphabet")) {
    absl::StatusOr<Channel> channel = ChannelFromJson(value);
    if (!channel.ok()) return channel.status();
    return MechanismSpec{*std::move(channel), std::nullopt};
  }
  absl::StatusOr<std::vector<std::string>> entries =
      Labels(value, "entry_alphabet");
  if (!entries.ok()) return entries.status();
  if (!value.contains("n") || !value["n"].is_number_integer() ||
      value["n"].get<int64_t>() < 1) {
    return JsonError("database mechanism needs a positive integer 'n'");
  }
  absl::StatusOr<Alphabet> entry_alphabet =
      Alphabet::Create(*std::move(entries));
  if (!entry_alphabet.ok()) return entry_alphabet.status();
  absl::StatusOr<DatabaseSchema> schema = DatabaseSchema::Create(
      *std::move(entry_alphabet), value["n"].get<size_t>());
  if (!schema.ok()) return schema.status();
  absl::StatusOr<std::vector<std::string>> outputs =
      Labels(value, "output_labels");
  if (!outputs.ok()) return outputs.status();
  absl::StatusOr<Alphabet> output_alphabet =
      Alphabet::Create(*std::move(outputs));
  if (!output_alphabet.ok()) return output_alphabet.status();
  absl::StatusOr<std::vector<std::vector<double>>> rows = Rows(value);
  if (!rows.ok()) return rows.status();
  if (value.contains("input_labels")) {
    absl::StatusOr<std::vector<std::string>> inputs =
        Labels(value, "input_labels");
    if (!inputs.ok()) return inputs.status();
    if (*inputs != schema->database_alphabet().labels()) {
      return absl::InvalidArgumentError(
          "database mechanism input labels must follow the row-major "
          "database order");
    }
  }
  absl::StatusOr<Channel> channel =
      Channel::Create(schema->database_alphabet(), *std::move(output_alphabet),
                      *std::move(rows));
  if (!channel.ok()) return channel.status();
  return MechanismSpec{*std::move(channel), *std::move(schema)};
}

Json DatabaseMechanismToJson(const DatabaseMechanism& m) {
  Json out = ChannelToJson(m.channel());
  out["entry_alphabet"] = m.schema().entry_alphabet().labels();
  out["n"] = m.schema().n();
  return out;
}

absl::StatusOr<Instance> InstanceFromJson(const Json& value) {
  if (!value.is_object() || !value.contains("mechanism")) {
    return JsonError("instance needs a 'mechanism' object");
  }
  absl::StatusOr<MechanismSpec> mechanism =
      MechanismFromJson(value["mechanism"]);
  if (!mechanism.ok()) return mechanism.status();
  Instance instance{*std::move(mechanism), std::nullopt, std::nullopt};
  if (value.contains("prior")) {
    absl::StatusOr<Pmf> prior = PmfFromJson(value["prior"]);
    if (!prior.ok()) return prior.status();
    if (!(prior->alphabet() == instance.mechanism.channel.inputs())) {
      return absl::InvalidArgumentError(
          "alphabet mismatch: prior labels differ from mechanism inputs");
    }
    instance.prior = *std::move(prior);
  }
  if (value.contains("u_kernel")) {
    absl::StatusOr<Channel> kernel = ChannelFromJson(value["u_kernel"]);
    if (!kernel.ok()) return kernel.status();
    if (!(kernel->inputs() == instance.mechanism.channel.inputs())) {
      return absl::InvalidArgumentError(
          "alphabet mismatch: attribute kernel inputs differ from mechanism "
          "inputs");
    }
    instance.u_kernel = *std::move(kernel);
  }
  return instance;
}

std::string FormatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  const double a = std::abs(v);
  if (a > 0.0 && a < 1e-4) return absl::StrFormat("%.6e", v);
  return absl::StrFormat("%.6f", v);
}

}  // namespace pml
