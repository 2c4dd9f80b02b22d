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

#ifndef PFGRAPH_CORRELATION_H_
#define PFGRAPH_CORRELATION_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"
#include "pfgraph/transport.h"

namespace pfgraph {

// The two complementary secrets of one (edge, property): property absent
// (s0) or present (s1).
enum class SecretState : int { kAbsent = 0, kPresent = 1 };

inline std::string_view SecretStateName(SecretState s) {
  return s == SecretState::kAbsent ? "absent" : "present";
}

// floor(log10(x)), with 0 mapped to bucket 0.
int LogBucket(std::size_t x);

// Neighborhood fraction w/deg rounded to the nearest of `bins` intervals.
std::int64_t FractionBin(std::size_t w, std::size_t deg, int bins);

struct BucketKey {
  int log_freq = 0;
  int log_deg = 0;

  friend bool operator==(const BucketKey&, const BucketKey&) = default;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

// Number of edges in neighborhood(e) labeled with `property`.
std::size_t NeighborhoodCount(const OrgGraph& graph,
                              const PropertyLabeling& labeling, EdgeIndex e,
                              TokenId property);

// Seeded sample of at most `max_properties` tokens that label at least one
// edge, ascending.
std::vector<TokenId> SampleProperties(const PropertyLabeling& labeling,
                                      std::size_t max_properties,
                                      std::uint64_t seed);

struct FitOptions {
  // Per (freq bucket, degree bucket, state) for the conditional model.
  std::size_t sample_cap = 100;
  // Per state for the global and binomial models.
  std::size_t observation_cap = 10000;
  // Resolution of the conditional model's neighborhood-fraction histograms.
  int fraction_bins = 100;
  std::uint64_t seed = 0;
};

// Pr(w / deg | state, freq bucket, degree bucket), with w/deg binned into
// `fraction_bins` intervals.
struct ConditionalModel {
  struct Bucket {
    std::array<std::optional<DiscreteDistribution>, 2> by_state;
    std::array<std::size_t, 2> observations{};
  };

  std::map<BucketKey, Bucket> buckets;
  // All observations of a state regardless of bucket. Used for a bucket that
  // has no observation of that state.
  std::array<std::optional<DiscreteDistribution>, 2> pooled;
  int fraction_bins = 100;
  std::size_t sample_cap = 100;
  std::uint64_t seed = 0;

  // Null when neither the bucket nor the pooled histogram has the state.
  const DiscreteDistribution* Lookup(BucketKey key, SecretState state,
                                     bool* fell_back = nullptr) const;

  nlohmann::json ToJson() const;
  static absl::StatusOr<ConditionalModel> FromJson(const nlohmann::json& j);
};

// Pr(w | state) pooled over all sampled observations.
struct GlobalModel {
  DiscreteDistribution absent;
  DiscreteDistribution present;
  std::array<std::size_t, 2> observations{};
  std::size_t observation_cap = 0;
  std::uint64_t seed = 0;

  const DiscreteDistribution& ForState(SecretState s) const {
    return s == SecretState::kAbsent ? absent : present;
  }

  nlohmann::json ToJson() const;
  static absl::StatusOr<GlobalModel> FromJson(const nlohmann::json& j);
};

// Pr(adjacent edge labeled | center state).
struct BinomialModel {
  double p0 = 0.0;
  double p1 = 0.0;
  // Sums over the sampled observations of w (labeled neighbors) and of deg.
  std::array<std::uint64_t, 2> labeled_pairs{};
  std::array<std::uint64_t, 2> total_pairs{};
  std::uint64_t seed = 0;

  double ForState(SecretState s) const {
    return s == SecretState::kAbsent ? p0 : p1;
  }

  nlohmann::json ToJson() const;
  static absl::StatusOr<BinomialModel> FromJson(const nlohmann::json& j);
};

absl::StatusOr<ConditionalModel> FitConditional(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    std::span<const TokenId> properties, const FitOptions& options = {});

absl::StatusOr<GlobalModel> FitGlobal(const OrgGraph& graph,
                                      const PropertyLabeling& labeling,
                                      std::span<const TokenId> properties,
                                      const FitOptions& options = {});

absl::StatusOr<BinomialModel> FitBinomial(const OrgGraph& graph,
                                          const PropertyLabeling& labeling,
                                          std::span<const TokenId> properties,
                                          const FitOptions& options = {});

}  // namespace pfgraph

#endif  // PFGRAPH_CORRELATION_H_
