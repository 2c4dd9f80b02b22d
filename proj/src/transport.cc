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

#include "pfgraph/transport.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"

namespace pfgraph {

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::Create(
    std::vector<std::int64_t> support, std::vector<double> masses) {
  if (support.size() != masses.size()) {
    return absl::InvalidArgumentError("support and masses differ in length");
  }
  if (support.empty()) {
    return absl::InvalidArgumentError("distribution has empty support");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k > 0 && support[k] <= support[k - 1]) {
      return absl::InvalidArgumentError("support must be strictly increasing");
    }
    if (!(masses[k] >= 0.0) || !std::isfinite(masses[k])) {
      return absl::InvalidArgumentError("masses must be finite and >= 0");
    }
    total += masses[k];
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("masses sum to ", total, ", not 1"));
  }
  // Masses already normalized up to rounding are kept verbatim so that a
  // serialized distribution reloads bit-identically.
  const double mass_scale =
      std::abs(total - 1.0) <= 64 * std::numeric_limits<double>::epsilon()
          ? 1.0
          : total;
  DiscreteDistribution d;
  double running = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (masses[k] == 0.0) continue;
    d.support_.push_back(support[k]);
    d.masses_.push_back(masses[k] / mass_scale);
    running += masses[k];
    d.cumulative_.push_back(running / total);
  }
  d.cumulative_.back() = 1.0;
  return d;
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::FromCounts(
    const std::map<std::int64_t, std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [w, c] : counts) total += c;
  if (total == 0) {
    return absl::InvalidArgumentError("histogram has no observations");
  }
  // Cumulative from integer partial sums, so equal fractions compare equal.
  DiscreteDistribution d;
  std::uint64_t running = 0;
  for (const auto& [w, c] : counts) {
    if (c == 0) continue;
    running += c;
    d.support_.push_back(w);
    d.masses_.push_back(static_cast<double>(c) / static_cast<double>(total));
    d.cumulative_.push_back(static_cast<double>(running) /
                            static_cast<double>(total));
  }
  return d;
}

DiscreteDistribution DiscreteDistribution::PointMass(std::int64_t x) {
  DiscreteDistribution d;
  d.support_ = {x};
  d.masses_ = {1.0};
  d.cumulative_ = {1.0};
  return d;
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::Binomial(
    std::int64_t n, double p) {
  if (n < 0) return absl::InvalidArgumentError("binomial n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError("binomial p must be in [0, 1]");
  }
  if (p == 0.0 || n == 0) return PointMass(0);
  if (p == 1.0) return PointMass(n);
  std::vector<std::int64_t> support;
  std::vector<double> masses;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_fact = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::int64_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double log_mass = log_n_fact - std::lgamma(kd + 1.0) -
                            std::lgamma(static_cast<double>(n - k) + 1.0) +
                            kd * log_p + static_cast<double>(n - k) * log_q;
    const double mass = std::exp(log_mass);
    if (mass > 0.0) {
      support.push_back(k);
      masses.push_back(mass);
    }
  }
  return Create(std::move(support), std::move(masses));
}

double DiscreteDistribution::Cdf(std::int64_t x) const {
  auto it = std::upper_bound(support_.begin(), support_.end(), x);
  if (it == support_.begin()) return 0.0;
  return cumulative_[(it - support_.begin()) - 1];
}

nlohmann::json DiscreteDistribution::ToJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t k = 0; k < support_.size(); ++k) {
    j[std::to_string(support_[k])] = masses_[k];
  }
  return j;
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::FromJson(
    const nlohmann::json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("distribution must be a JSON object");
  }
  std::map<std::int64_t, double> points;
  for (const auto& [key, value] : j.items()) {
    std::int64_t w;
    if (!absl::SimpleAtoi(key, &w) || !value.is_number()) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad distribution entry '", key, "'"));
    }
    points[w] = value.get<double>();
  }
  std::vector<std::int64_t> support;
  std::vector<double> masses;
  for (const auto& [w, m] : points) {
    support.push_back(w);
    masses.push_back(m);
  }
  return Create(std::move(support), std::move(masses));
}

std::int64_t WInfinity(const DiscreteDistribution& mu,
                       const DiscreteDistribution& nu) {
  auto a = mu.cumulative();
  auto b = nu.cumulative();
  auto x = mu.support();
  auto y = nu.support();
  // On each level interval (level, next] both quantile functions are
  // constant: x[i] for mu and y[j] for nu.
  std::size_t i = 0;
  std::size_t j = 0;
  double level = 0.0;
  std::int64_t best = 0;
  while (i < a.size() && j < b.size()) {
    const double next = std::min(a[i], b[j]);
    if (next - level > kLevelTolerance) {
      best = std::max(best, std::abs(x[i] - y[j]));
    }
    if (std::abs(a[i] - b[j]) <= kLevelTolerance) {
      level = std::max(a[i], b[j]);
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      level = a[i];
      ++i;
    } else {
      level = b[j];
      ++j;
    }
  }
  return best;
}

}  // namespace pfgraph
