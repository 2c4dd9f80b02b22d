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

#include "pfgraph/tasks.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/strings/str_cat.h"
#include "pfgraph/kernels.h"
#include "pfgraph/rng.h"

namespace pfgraph {

absl::StatusOr<PropertyLabeling> CapLabeling(const PropertyLabeling& labeling,
                                             std::size_t cap) {
  if (cap < 1) return absl::InvalidArgumentError("cap must be at least 1");
  std::vector<std::vector<TokenId>> edges(labeling.edge_count());
  for (EdgeIndex e = 0; e < labeling.edge_count(); ++e) {
    std::vector<TokenId> t(labeling.tokens(e).begin(), labeling.tokens(e).end());
    if (t.size() > cap) {
      std::stable_sort(t.begin(), t.end(), [&](TokenId x, TokenId y) {
        return labeling.freq(x) > labeling.freq(y);
      });
      t.resize(cap);
      std::sort(t.begin(), t.end());
    }
    edges[e] = std::move(t);
  }
  return PropertyLabeling::Create(cap, labeling.vocabulary(), edges);
}

std::vector<double> TrueHistogram(const PropertyLabeling& labeling) {
  std::vector<double> counts(labeling.vocabulary_size());
  for (TokenId t = 0; t < counts.size(); ++t) {
    counts[t] = static_cast<double>(labeling.freq(t));
  }
  return counts;
}

std::vector<double> NodeHistogram(const OrgGraph& graph,
                                  const PropertyLabeling& labeling,
                                  std::size_t cap) {
  std::vector<double> counts(labeling.vocabulary_size(), 0.0);
  std::map<TokenId, std::size_t> uses;
  std::vector<std::pair<std::size_t, TokenId>> ranked;
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    uses.clear();
    for (EdgeIndex e : graph.incident(v)) {
      for (TokenId t : labeling.tokens(e)) ++uses[t];
    }
    ranked.clear();
    for (const auto& [t, n] : uses) ranked.emplace_back(n, t);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
    const std::size_t keep = std::min(cap, ranked.size());
    for (std::size_t i = 0; i < keep; ++i) counts[ranked[i].second] += 1.0;
  }
  return counts;
}

std::vector<double> CountsForMode(const OrgGraph& graph,
                                  const PropertyLabeling& labeling,
                                  PrivacyMode mode, std::size_t cap) {
  if (mode == PrivacyMode::kNode) return NodeHistogram(graph, labeling, cap);
  return TrueHistogram(labeling);
}

nlohmann::json HistogramResult::ToJson() const {
  return {{"noise", noise.ToJson()},
          {"trial", trial},
          {"yield", yield},
          {"yield_fraction", yield_fraction},
          {"rmse_raw", rmse_raw},
          {"rmse_clipped", rmse_clipped},
          {"noisy", noisy}};
}

HistogramResult ReleaseHistogram(std::span<const double> truth,
                                 const NoiseScale& noise, std::uint64_t trial) {
  HistogramResult r;
  r.noise = noise;
  r.trial = trial;
  r.truth.assign(truth.begin(), truth.end());
  r.noisy.resize(truth.size());
  kernels::AddLaplaceNoise(truth, noise.lambda,
                           NoiseStream(noise.seed, "histogram", trial), r.noisy);
  double raw = 0.0, clipped = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (r.noisy[i] > 0.0) ++r.yield;
    const double d = r.noisy[i] - truth[i];
    const double c = std::max(0.0, r.noisy[i]) - truth[i];
    raw += d * d;
    clipped += c * c;
  }
  if (!truth.empty()) {
    const double n = static_cast<double>(truth.size());
    r.yield_fraction = static_cast<double>(r.yield) / n;
    r.rmse_raw = std::sqrt(raw / n);
    r.rmse_clipped = std::sqrt(clipped / n);
  }
  return r;
}

nlohmann::json DpsuResult::ToJson() const {
  return {{"noise", noise.ToJson()}, {"trial", trial},
          {"threshold", threshold},  {"delta", delta},
          {"yield", yield},          {"released", released}};
}

double DpsuThreshold(double lambda, double delta) {
  return 1.0 + lambda * std::log(1.0 / (2.0 * delta));
}

double DefaultDpsuDelta(std::size_t records) {
  const double n = static_cast<double>(std::max<std::size_t>(records, 1));
  return 1.0 / (n * n);
}

absl::StatusOr<DpsuResult> ReleaseDpsu(std::span<const double> weights,
                                       const NoiseScale& noise, double delta,
                                       std::uint64_t trial) {
  if (!(delta > 0.0 && delta < 0.5)) {
    return absl::InvalidArgumentError("DPSU delta must be in (0, 0.5)");
  }
  if (!(noise.lambda > 0.0)) {
    return absl::InvalidArgumentError("Laplace scale must be positive");
  }
  DpsuResult r;
  r.noise = noise;
  r.trial = trial;
  r.delta = delta;
  r.threshold = DpsuThreshold(noise.lambda, delta);
  std::vector<double> noisy(weights.size());
  kernels::AddLaplaceNoise(weights, noise.lambda,
                           NoiseStream(noise.seed, "dpsu", trial), noisy);
  for (std::size_t t = 0; t < weights.size(); ++t) {
    if (weights[t] > 0.0 && noisy[t] > r.threshold) {
      r.released.push_back(static_cast<TokenId>(t));
    }
  }
  r.yield = r.released.size();
  return r;
}

TrialSummary Summarize(std::vector<double> values) {
  TrialSummary s;
  s.values = std::move(values);
  if (s.values.empty()) return s;
  double sum = 0.0;
  for (double v : s.values) sum += v;
  s.mean = sum / static_cast<double>(s.values.size());
  if (s.values.size() > 1) {
    double ss = 0.0;
    for (double v : s.values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.values.size() - 1));
  }
  return s;
}

absl::StatusOr<TrialSummary> RepeatDpsu(std::span<const double> weights,
                                        const NoiseScale& noise, double delta,
                                        std::size_t trials) {
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  std::vector<double> yields(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    auto r = ReleaseDpsu(weights, noise, delta, i);
    if (!r.ok()) return r.status();
    yields[i] = static_cast<double>(r->yield);
  }
  return Summarize(std::move(yields));
}

}  // namespace pfgraph
