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

#ifndef PFGRAPH_TRANSPORT_H_
#define PFGRAPH_TRANSPORT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace pfgraph {

// Allowed deviation of total mass from 1.
inline constexpr double kMassTolerance = 1e-9;
// Cumulative levels closer than this are the same level when comparing two
// quantile functions.
inline constexpr double kLevelTolerance = 1e-12;

// Finite probability mass function on integers. Points of zero mass are
// dropped; masses are renormalized to sum to exactly 1 in the cumulative.
class DiscreteDistribution {
 public:
  // `support` strictly increasing, `masses` non-negative summing to
  // 1 +/- kMassTolerance.
  static absl::StatusOr<DiscreteDistribution> Create(
      std::vector<std::int64_t> support, std::vector<double> masses);
  // Normalized histogram; at least one count must be positive.
  static absl::StatusOr<DiscreteDistribution> FromCounts(
      const std::map<std::int64_t, std::uint64_t>& counts);
  static DiscreteDistribution PointMass(std::int64_t x);
  // Exact pmf of Binomial(n, p), evaluated in log space. Points whose mass
  // underflows double precision are dropped.
  static absl::StatusOr<DiscreteDistribution> Binomial(std::int64_t n,
                                                       double p);

  std::span<const std::int64_t> support() const { return support_; }
  std::span<const double> masses() const { return masses_; }
  // cumulative()[k] = mass of support points <= support()[k]; last is 1.
  std::span<const double> cumulative() const { return cumulative_; }
  std::size_t size() const { return support_.size(); }
  std::int64_t min() const { return support_.front(); }
  std::int64_t max() const { return support_.back(); }

  double Cdf(std::int64_t x) const;

  // {"w": mass, ...}
  nlohmann::json ToJson() const;
  static absl::StatusOr<DiscreteDistribution> FromJson(const nlohmann::json& j);

  friend bool operator==(const DiscreteDistribution&,
                         const DiscreteDistribution&) = default;

 private:
  DiscreteDistribution() = default;

  std::vector<std::int64_t> support_;
  std::vector<double> masses_;
  std::vector<double> cumulative_;
};

// Infinity-Wasserstein distance between two distributions on the integers:
// the largest gap between their quantile functions over levels in (0, 1),
// found by walking the merged cumulative breakpoints.
std::int64_t WInfinity(const DiscreteDistribution& mu,
                       const DiscreteDistribution& nu);

inline constexpr std::size_t kMaxOracleSupport = 16;

// Independent route for small supports (at most kMaxOracleSupport points
// each): the smallest threshold t among the pairwise distances for which a
// transport plan moving mass no further than t exists, each candidate checked
// by max-flow.
absl::StatusOr<std::int64_t> BottleneckWInfinity(
    const DiscreteDistribution& mu, const DiscreteDistribution& nu);

}  // namespace pfgraph

#endif  // PFGRAPH_TRANSPORT_H_
