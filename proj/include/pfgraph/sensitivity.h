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

#ifndef PFGRAPH_SENSITIVITY_H_
#define PFGRAPH_SENSITIVITY_H_

#include <cstddef>
#include <ostream>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/correlation.h"

namespace pfgraph {

enum class ModelKind { kConditional, kGlobal, kBinomial };

std::string_view ModelKindName(ModelKind kind);
absl::StatusOr<ModelKind> ParseModelKind(std::string_view name);

struct SensitivityEntry {
  // Bucket coordinates; -1 for models without buckets.
  int log_freq = -1;
  int log_deg = -1;
  double w_inf = 0.0;
  double scale = 1.0;
  double w = 0.0;
  // A state was missing from the bucket and the pooled histogram stood in.
  bool fallback = false;

  friend bool operator==(const SensitivityEntry&,
                         const SensitivityEntry&) = default;
};

struct SensitivityReport {
  ModelKind kind = ModelKind::kGlobal;
  std::vector<SensitivityEntry> entries;
  // max over entries of w.
  double w = 0.0;
  std::size_t n_max = 0;
  // Model-specific extras (p_0, p_1 and the evaluation degree for binomial).
  nlohmann::json parameters = nlohmann::json::object();

  nlohmann::json ToJson() const;
  static absl::StatusOr<SensitivityReport> FromJson(const nlohmann::json& j);
  // Conditional: log_freq,log_deg,w_inf,W per bucket. Global: w_inf,W.
  // Binomial: p_0,p_1,deg,w_inf,W.
  void WriteCsv(std::ostream& out) const;

  friend bool operator==(const SensitivityReport&,
                         const SensitivityReport&) = default;
};

// Largest neighborhood a degree bucket can hold: min(N_max, 10^(log_deg+1)).
double ConditionalScale(int log_deg, std::size_t n_max);

SensitivityEntry ScaleConditionalEntry(int log_freq, int log_deg, double w_inf,
                                       std::size_t n_max);

// Per bucket: W-infinity between the absent/present fraction histograms,
// scaled by ConditionalScale. Buckets missing a state use the pooled
// histogram; buckets with neither are skipped.
absl::StatusOr<SensitivityReport> ComputeWConditional(
    const ConditionalModel& model, std::size_t n_max);

// W-infinity between the two count histograms, unscaled.
absl::StatusOr<SensitivityReport> ComputeWGlobal(const GlobalModel& model,
                                                 std::size_t n_max);

// W-infinity between Binomial(deg, p_0) and Binomial(deg, p_1).
absl::StatusOr<SensitivityReport> ComputeWBinomial(const BinomialModel& model,
                                                   std::size_t deg,
                                                   std::size_t n_max);

}  // namespace pfgraph

#endif  // PFGRAPH_SENSITIVITY_H_
