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

#include "pfgraph/mechanisms.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace pfgraph {

std::string_view PrivacyModeName(PrivacyMode mode) {
  switch (mode) {
    case PrivacyMode::kEdge:
      return "edge";
    case PrivacyMode::kNode:
      return "node";
    case PrivacyMode::kBinomial:
      return "binomial";
    case PrivacyMode::kGlobal:
      return "global";
    case PrivacyMode::kConditional:
      return "conditional";
    case PrivacyMode::kGroup:
      return "group";
  }
  return "unknown";
}

absl::StatusOr<PrivacyMode> ParsePrivacyMode(std::string_view name) {
  for (PrivacyMode m : kAllPrivacyModes) {
    if (PrivacyModeName(m) == name) return m;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown mode '", std::string(name), "'"));
}

absl::Status MechanismConfig::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError("epsilon must be positive and finite");
  }
  if (!(delta >= 0.0) || !(delta < epsilon)) {
    return absl::InvalidArgumentError("delta must satisfy 0 <= delta < epsilon");
  }
  if (cap < 1) return absl::InvalidArgumentError("cap must be at least 1");
  return absl::OkStatus();
}

nlohmann::json NoiseScale::ToJson() const {
  return {{"mode", PrivacyModeName(mode)}, {"W", w},
          {"c", cap},                      {"epsilon", epsilon},
          {"lambda", lambda},              {"seed", seed},
          {"formula", formula}};
}

void SensitivitySource::Add(const SensitivityReport& report) {
  switch (report.kind) {
    case ModelKind::kConditional:
      conditional_w = report.w;
      break;
    case ModelKind::kGlobal:
      global_w = report.w;
      break;
    case ModelKind::kBinomial:
      binomial_w = report.w;
      break;
  }
}

std::size_t TrivialQuiltCardinality(const DegreeStats& stats) {
  return stats.max_degree == 0 ? 0 : 2 * stats.max_degree - 1;
}

absl::StatusOr<NoiseScale> Calibrate(const MechanismConfig& config,
                                     const SensitivitySource& source) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  auto need = [&](const std::optional<double>& w) -> absl::StatusOr<double> {
    if (!w) {
      return absl::FailedPreconditionError(
          absl::StrCat("mode '", std::string(PrivacyModeName(config.mode)),
                       "' needs a sensitivity report"));
    }
    return *w;
  };
  NoiseScale n;
  n.mode = config.mode;
  n.cap = config.cap;
  n.epsilon = config.epsilon;
  n.seed = config.seed;
  n.formula = "lambda = c * W / epsilon";
  switch (config.mode) {
    case PrivacyMode::kEdge:
    case PrivacyMode::kNode:
      n.w = 1.0;
      break;
    case PrivacyMode::kGroup:
      if (source.stats.max_degree == 0) {
        return absl::FailedPreconditionError(
            "group mode needs the graph's degree statistics");
      }
      n.w = static_cast<double>(TrivialQuiltCardinality(source.stats));
      break;
    case PrivacyMode::kConditional: {
      auto w = need(source.conditional_w);
      if (!w.ok()) return w.status();
      n.w = *w;
      break;
    }
    case PrivacyMode::kGlobal: {
      auto w = need(source.global_w);
      if (!w.ok()) return w.status();
      n.w = *w;
      break;
    }
    case PrivacyMode::kBinomial: {
      auto w = need(source.binomial_w);
      if (!w.ok()) return w.status();
      n.w = *w;
      break;
    }
  }
  if (!(n.w > 0.0)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "mode '", std::string(PrivacyModeName(config.mode)), "' has W = ", n.w,
        "; the Laplace scale must be positive"));
  }
  n.lambda = static_cast<double>(config.cap) * n.w / config.epsilon;
  return n;
}

absl::StatusOr<double> LaplaceSample(double scale, const NoiseStream& stream,
                                     std::uint64_t counter) {
  if (!(scale > 0.0)) {
    return absl::InvalidArgumentError("Laplace scale must be positive");
  }
  return LaplaceInverseCdf(stream.Uniform(counter), scale);
}

absl::StatusOr<double> GroupBudget(double epsilon, std::size_t k) {
  if (k < 1) return absl::InvalidArgumentError("group size must be >= 1");
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError("epsilon must be positive");
  }
  return epsilon / static_cast<double>(k);
}

absl::StatusOr<double> MarkovQuiltScale(double lipschitz,
                                        std::size_t neighborhood_card,
                                        double epsilon, double delta) {
  if (!(lipschitz > 0.0)) {
    return absl::InvalidArgumentError("Lipschitz constant must be positive");
  }
  if (neighborhood_card < 1) {
    return absl::InvalidArgumentError("|D_N| must be at least 1");
  }
  if (!(delta >= 0.0) || !(epsilon > delta)) {
    return absl::InvalidArgumentError(
        "Markov quilt scale needs epsilon > delta >= 0");
  }
  return lipschitz * static_cast<double>(neighborhood_card) / (epsilon - delta);
}

}  // namespace pfgraph
