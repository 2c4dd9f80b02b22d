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

#ifndef PFGRAPH_PIPELINE_H_
#define PFGRAPH_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/correlation.h"
#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"
#include "pfgraph/mechanisms.h"
#include "pfgraph/sensitivity.h"
#include "pfgraph/synthetic.h"

namespace pfgraph {

enum class Task { kHistogram, kDpsu };

std::string_view TaskName(Task task);
absl::StatusOr<Task> ParseTask(std::string_view name);

struct RunConfig {
  // Exactly one input: a messages JSONL file (with an optional list table) or
  // a synthetic corpus spec.
  std::optional<std::string> messages_path;
  std::optional<std::string> lists_path;
  std::optional<SyntheticSpec> synthetic;
  // Public token domain, one per line, added to the observed vocabulary. A
  // synthetic corpus always uses its generator's full word list.
  std::optional<std::string> vocabulary_path;

  std::size_t cap = 10;
  double epsilon = 100.0;
  double delta = 0.0;
  // Defaults to 1 / records^2.
  std::optional<double> dpsu_delta;
  std::vector<PrivacyMode> modes{kAllPrivacyModes.begin(),
                                 kAllPrivacyModes.end()};
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  // Neighborhood size at which the binomial model is evaluated; N_max if
  // unset.
  std::optional<std::size_t> binomial_deg;

  // Properties sampled for fitting the correlation models.
  std::size_t fit_properties = 200;
  FitOptions fit;

  ModelKind attack_model = ModelKind::kConditional;
  std::size_t attack_targets = 200;

  std::filesystem::path out = "out";

  absl::Status Validate() const;
  // Everything except `out`.
  nlohmann::json ToJson() const;
  static absl::StatusOr<RunConfig> FromJson(const nlohmann::json& j);
  // SHA-256 of the canonical JSON form.
  std::string Hash() const;
};

absl::StatusOr<RunConfig> LoadRunConfig(const std::filesystem::path& path);

// Graph and labeling as read back from an output directory, with the hash of
// their files.
struct Artifacts {
  OrgGraph graph;
  PropertyLabeling labeling;
  std::string hash;
};

absl::StatusOr<Artifacts> LoadArtifacts(const std::filesystem::path& dir);

// Writes messages.jsonl, lists.json and synthetic_spec.json.
absl::Status CmdSynth(const RunConfig& config);
// Writes graph.csv, labeling.csv, vocabulary.txt and stats.json.
absl::Status CmdIngest(const RunConfig& config);
// Writes model_<kind>.json, sensitivity_<kind>.csv and sensitivity_<kind>.json.
absl::Status CmdSensitivity(const RunConfig& config, ModelKind kind);
// Writes run_<task>.csv and run_<task>.json.
absl::Status CmdRun(const RunConfig& config, Task task);
// Writes attack_<kind>.json.
absl::Status CmdAttack(const RunConfig& config);
// Writes report.json and report.md from whatever stage outputs exist.
absl::Status CmdReport(const RunConfig& config);
// ingest, the three sensitivity fits, both tasks, attack, report.
absl::Status CmdAll(const RunConfig& config);

// Reads sensitivity_<kind>.json and rejects it when it was computed from
// other artifacts or another fit configuration.
absl::StatusOr<SensitivityReport> LoadSensitivityReport(
    const RunConfig& config, const Artifacts& artifacts, ModelKind kind);

}  // namespace pfgraph

#endif  // PFGRAPH_PIPELINE_H_
