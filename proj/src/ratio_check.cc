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

#include "pfgraph/ratio_check.h"

#include <algorithm>
#include <array>
#include <optional>
#include <bit>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "pfgraph/rng.h"
#include "pfgraph/transport.h"

namespace pfgraph {
namespace {

constexpr double kBinMassFloor = 1e-6;

absl::Status CheckSize(const OrgGraph& graph) {
  if (graph.edge_count() > kMaxRatioCheckEdges) {
    return absl::InvalidArgumentError(
        absl::StrCat("ratio check supports at most ", kMaxRatioCheckEdges,
                     " edges, got ", graph.edge_count()));
  }
  return absl::OkStatus();
}

absl::Status CheckProbability(double p, std::string_view name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(std::string(name), " must be in [0, 1]"));
  }
  return absl::OkStatus();
}

// Pr(lo <= count + L < hi) for L ~ Laplace(0, scale), without cancellation
// in the tails.
double IntervalMass(double lo, double hi, double scale) {
  if (lo >= 0.0) {
    return 0.5 * (std::exp(-lo / scale) - std::exp(-hi / scale));
  }
  if (hi <= 0.0) {
    return 0.5 * (std::exp(hi / scale) - std::exp(lo / scale));
  }
  return 1.0 - 0.5 * std::exp(lo / scale) - 0.5 * std::exp(-hi / scale);
}

// Pr(count = k | X_i = state) for k = 0..m.
std::vector<double> ConditionalCounts(const JointLabelModel& model,
                                      std::size_t edge, int state) {
  std::vector<double> out(model.edge_count + 1, 0.0);
  double total = 0.0;
  for (std::size_t x = 0; x < model.probability.size(); ++x) {
    if (static_cast<int>((x >> edge) & 1u) != state) continue;
    out[std::popcount(x)] += model.probability[x];
    total += model.probability[x];
  }
  for (double& v : out) v /= total;
  return out;
}

absl::Status CheckSecrets(const JointLabelModel& model) {
  if (model.edge_count == 0 ||
      model.probability.size() != (std::size_t{1} << model.edge_count)) {
    return absl::InvalidArgumentError("malformed joint label model");
  }
  for (std::size_t i = 0; i < model.edge_count; ++i) {
    double present = 0.0;
    for (std::size_t x = 0; x < model.probability.size(); ++x) {
      if ((x >> i) & 1u) present += model.probability[x];
    }
    if (present <= 0.0 || present >= 1.0) {
      return absl::FailedPreconditionError(absl::StrCat(
          "secret for edge ", i, " has zero probability under the model (",
          present <= 0.0 ? "present" : "absent", ")"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<JointLabelModel> PlantedJointModel(const OrgGraph& graph,
                                                  double seed_probability,
                                                  double propagation) {
  if (absl::Status s = CheckSize(graph); !s.ok()) return s;
  if (absl::Status s = CheckProbability(seed_probability, "seed probability");
      !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckProbability(propagation, "propagation"); !s.ok()) {
    return s;
  }
  const std::size_t m = graph.edge_count();
  std::vector<std::uint32_t> adjacent(m, 0);
  for (EdgeIndex e = 0; e < m; ++e) {
    graph.ForEachNeighbor(e, [&](EdgeIndex f) { adjacent[e] |= 1u << f; });
  }
  JointLabelModel model{m, std::vector<double>(std::size_t{1} << m, 0.0)};
  for (std::uint32_t seeds = 0; seeds < (1u << m); ++seeds) {
    const int k = std::popcount(seeds);
    const double p_seeds = std::pow(seed_probability, k) *
                           std::pow(1.0 - seed_probability, m - k);
    if (p_seeds == 0.0) continue;
    // Given the seeds, each non-seed edge is labeled independently with
    // probability 1 - (1 - q)^(adjacent seeds).
    std::vector<double> hit(m, 0.0);
    for (std::size_t e = 0; e < m; ++e) {
      if ((seeds >> e) & 1u) continue;
      const int touching = std::popcount(adjacent[e] & seeds);
      hit[e] = 1.0 - std::pow(1.0 - propagation, touching);
    }
    for (std::uint32_t x = 0; x < (1u << m); ++x) {
      if ((x & seeds) != seeds) continue;
      double p = p_seeds;
      for (std::size_t e = 0; e < m && p > 0.0; ++e) {
        if ((seeds >> e) & 1u) continue;
        p *= ((x >> e) & 1u) ? hit[e] : 1.0 - hit[e];
      }
      model.probability[x] += p;
    }
  }
  return model;
}

absl::StatusOr<JointLabelModel> IndependentJointModel(const OrgGraph& graph,
                                                      double p) {
  if (absl::Status s = CheckSize(graph); !s.ok()) return s;
  if (absl::Status s = CheckProbability(p, "p"); !s.ok()) return s;
  const std::size_t m = graph.edge_count();
  JointLabelModel model{m, std::vector<double>(std::size_t{1} << m, 0.0)};
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    const int k = std::popcount(x);
    model.probability[x] = std::pow(p, k) * std::pow(1.0 - p, m - k);
  }
  return model;
}

absl::StatusOr<double> ExactPufferfishW(const JointLabelModel& model) {
  if (absl::Status s = CheckSecrets(model); !s.ok()) return s;
  std::int64_t w = 0;
  for (std::size_t i = 0; i < model.edge_count; ++i) {
    std::array<std::optional<DiscreteDistribution>, 2> cond;
    for (int state = 0; state < 2; ++state) {
      std::vector<double> counts = ConditionalCounts(model, i, state);
      std::vector<std::int64_t> support;
      std::vector<double> masses;
      for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] > 0.0) {
          support.push_back(static_cast<std::int64_t>(k));
          masses.push_back(counts[k]);
        }
      }
      auto d = DiscreteDistribution::Create(std::move(support),
                                            std::move(masses));
      if (!d.ok()) return d.status();
      cond[state] = *std::move(d);
    }
    w = std::max(w, WInfinity(*cond[0], *cond[1]));
  }
  return static_cast<double>(w);
}

absl::StatusOr<RatioCheckResult> PufferfishRatioCheck(
    const JointLabelModel& model, double lambda) {
  if (!(lambda > 0.0)) {
    return absl::InvalidArgumentError("Laplace scale must be positive");
  }
  if (absl::Status s = CheckSecrets(model); !s.ok()) return s;
  RatioCheckResult result;
  result.bin_width = lambda / 10.0;
  const double lo = -10.0 * lambda;
  const double hi = static_cast<double>(model.edge_count) + 10.0 * lambda;
  result.bins = static_cast<std::size_t>(std::ceil((hi - lo) / result.bin_width));
  for (std::size_t i = 0; i < model.edge_count; ++i) {
    const std::vector<double> c0 = ConditionalCounts(model, i, 0);
    const std::vector<double> c1 = ConditionalCounts(model, i, 1);
    for (std::size_t b = 0; b < result.bins; ++b) {
      const double a = lo + b * result.bin_width;
      const double z = a + result.bin_width;
      double m0 = 0.0, m1 = 0.0;
      for (std::size_t k = 0; k < c0.size(); ++k) {
        const double mass = IntervalMass(a - k, z - k, lambda);
        m0 += c0[k] * mass;
        m1 += c1[k] * mass;
      }
      if (m0 <= kBinMassFloor || m1 <= kBinMassFloor) continue;
      const double r = std::abs(std::log(m0 / m1));
      if (r > result.max_log_ratio) {
        result.max_log_ratio = r;
        result.worst_edge = static_cast<EdgeIndex>(i);
      }
    }
  }
  return result;
}

}  // namespace pfgraph
