// Copyright 2026 The pfgraph Authors
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

#include "pfgraph/sensitivity.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "pfgraph/status_macros.h"

namespace pfgraph {
namespace {

using json = nlohmann::json;

std::string Num(double x) { return absl::StrFormat("%.10g", x); }

void Finish(SensitivityReport& report) {
  report.w = 0.0;
  for (const auto& e : report.entries) report.w = std::max(report.w, e.w);
}

}  // namespace

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kConditional:
      return "conditional";
    case ModelKind::kGlobal:
      return "global";
    case ModelKind::kBinomial:
      return "binomial";
  }
  return "unknown";
}

absl::StatusOr<ModelKind> ParseModelKind(std::string_view name) {
  if (name == "conditional") return ModelKind::kConditional;
  if (name == "global") return ModelKind::kGlobal;
  if (name == "binomial") return ModelKind::kBinomial;
  return absl::InvalidArgumentError(absl::StrCat("unknown model '", std::string(name), "'"));
}

double ConditionalScale(int log_deg, std::size_t n_max) {
  return std::min(static_cast<double>(n_max), std::pow(10.0, log_deg + 1));
}

SensitivityEntry ScaleConditionalEntry(int log_freq, int log_deg, double w_inf,
                                       std::size_t n_max) {
  SensitivityEntry e;
  e.log_freq = log_freq;
  e.log_deg = log_deg;
  e.w_inf = w_inf;
  e.scale = ConditionalScale(log_deg, n_max);
  e.w = w_inf * e.scale;
  return e;
}

absl::StatusOr<SensitivityReport> ComputeWConditional(
    const ConditionalModel& model, std::size_t n_max) {
  SensitivityReport report;
  report.kind = ModelKind::kConditional;
  report.n_max = n_max;
  for (const auto& [key, bucket] : model.buckets) {
    bool fb0 = false;
    bool fb1 = false;
    const DiscreteDistribution* absent =
        model.Lookup(key, SecretState::kAbsent, &fb0);
    const DiscreteDistribution* present =
        model.Lookup(key, SecretState::kPresent, &fb1);
    if (absent == nullptr || present == nullptr) continue;
    const double w_inf = static_cast<double>(WInfinity(*absent, *present)) /
                         model.fraction_bins;
    SensitivityEntry e =
        ScaleConditionalEntry(key.log_freq, key.log_deg, w_inf, n_max);
    e.fallback = fb0 || fb1;
    report.entries.push_back(e);
  }
  if (report.entries.empty()) {
    return absl::FailedPreconditionError(
        "no conditional bucket has both an absent and a present histogram");
  }
  report.parameters = {{"fraction_bins", model.fraction_bins}};
  Finish(report);
  return report;
}

absl::StatusOr<SensitivityReport> ComputeWGlobal(const GlobalModel& model,
                                                 std::size_t n_max) {
  SensitivityReport report;
  report.kind = ModelKind::kGlobal;
  report.n_max = n_max;
  SensitivityEntry e;
  e.w_inf = static_cast<double>(WInfinity(model.absent, model.present));
  e.w = e.w_inf;
  report.entries.push_back(e);
  Finish(report);
  return report;
}

absl::StatusOr<SensitivityReport> ComputeWBinomial(const BinomialModel& model,
                                                   std::size_t deg,
                                                   std::size_t n_max) {
  ASSIGN_OR_RETURN(DiscreteDistribution absent,
                   DiscreteDistribution::Binomial(
                       static_cast<std::int64_t>(deg), model.p0));
  ASSIGN_OR_RETURN(DiscreteDistribution present,
                   DiscreteDistribution::Binomial(
                       static_cast<std::int64_t>(deg), model.p1));
  SensitivityReport report;
  report.kind = ModelKind::kBinomial;
  report.n_max = n_max;
  SensitivityEntry e;
  e.w_inf = static_cast<double>(WInfinity(absent, present));
  e.w = e.w_inf;
  report.entries.push_back(e);
  report.parameters = {{"p_0", model.p0}, {"p_1", model.p1}, {"deg", deg}};
  Finish(report);
  return report;
}

json SensitivityReport::ToJson() const {
  json rows = json::array();
  for (const auto& e : entries) {
    json row = {{"w_inf", e.w_inf}, {"scale", e.scale}, {"W", e.w}};
    if (kind == ModelKind::kConditional) {
      row["log_freq"] = e.log_freq;
      row["log_deg"] = e.log_deg;
      row["fallback"] = e.fallback;
    }
    rows.push_back(row);
  }
  return {{"model", ModelKindName(kind)},
          {"W", w},
          {"n_max", n_max},
          {"parameters", parameters},
          {"entries", rows}};
}

absl::StatusOr<SensitivityReport> SensitivityReport::FromJson(const json& j) {
  SensitivityReport r;
  try {
    ASSIGN_OR_RETURN(r.kind, ParseModelKind(j.at("model").get<std::string>()));
    r.w = j.at("W").get<double>();
    r.n_max = j.at("n_max").get<std::size_t>();
    r.parameters = j.at("parameters");
    for (const json& row : j.at("entries")) {
      SensitivityEntry e;
      e.w_inf = row.at("w_inf").get<double>();
      e.scale = row.at("scale").get<double>();
      e.w = row.at("W").get<double>();
      e.log_freq = row.value("log_freq", -1);
      e.log_deg = row.value("log_deg", -1);
      e.fallback = row.value("fallback", false);
      r.entries.push_back(e);
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity report: ", e.what()));
  }
  return r;
}

void SensitivityReport::WriteCsv(std::ostream& out) const {
  switch (kind) {
    case ModelKind::kConditional:
      out << "log_freq,log_deg,w_inf,W\n";
      for (const auto& e : entries) {
        out << e.log_freq << ',' << e.log_deg << ',' << Num(e.w_inf) << ','
            << Num(e.w) << '\n';
      }
      break;
    case ModelKind::kGlobal:
      out << "w_inf,W\n" << Num(entries.at(0).w_inf) << ',' << Num(w) << '\n';
      break;
    case ModelKind::kBinomial:
      out << "p_0,p_1,deg,w_inf,W\n"
          << Num(parameters.value("p_0", 0.0)) << ','
          << Num(parameters.value("p_1", 0.0)) << ','
          << parameters.value("deg", std::size_t{0}) << ','
          << Num(entries.at(0).w_inf) << ',' << Num(w) << '\n';
      break;
  }
}

}  // namespace pfgraph
