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

#include "pfgraph/attack.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "absl/strings/str_cat.h"
#include "pfgraph/rng.h"

namespace pfgraph {
namespace {

double MassAt(const DiscreteDistribution& d, std::int64_t x) {
  auto s = d.support();
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) return 0.0;
  return d.masses()[it - s.begin()];
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double BinomialLogPmf(std::size_t n, double p, std::size_t k) {
  if (k > n) return kNegInf;
  if (p <= 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p >= 1.0) return k == n ? 0.0 : kNegInf;
  const double dn = static_cast<double>(n), dk = static_cast<double>(k);
  return std::lgamma(dn + 1) - std::lgamma(dk + 1) - std::lgamma(dn - dk + 1) +
         dk * std::log(p) + (dn - dk) * std::log1p(-p);
}

double LogLikelihood(const CorrelationModel& model, SecretState state,
                     std::size_t w, std::size_t deg, std::size_t freq) {
  if (const auto* m = std::get_if<BinomialModel>(&model)) {
    return BinomialLogPmf(deg, m->ForState(state), w);
  }
  return std::log(NeighborhoodLikelihood(model, state, w, deg, freq));
}

// log Pr(present | evidence) - log Pr(absent | evidence). NaN when both
// states are impossible, in which case the prior stands.
double LogOdds(double log_prior_odds, double ll1, double ll0) {
  if (ll1 == kNegInf && ll0 == kNegInf) return log_prior_odds;
  return log_prior_odds + (ll1 - ll0);
}

double Logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double Accuracy(std::span<const double> posterior,
                const std::vector<bool>& truth) {
  if (posterior.empty()) return 0.0;
  std::size_t right = 0;
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    if ((posterior[i] > 0.5) == truth[i]) ++right;
  }
  return static_cast<double>(right) / static_cast<double>(posterior.size());
}

}  // namespace

double NeighborhoodLikelihood(const CorrelationModel& model, SecretState state,
                              std::size_t w, std::size_t deg,
                              std::size_t freq) {
  if (const auto* m = std::get_if<ConditionalModel>(&model)) {
    const DiscreteDistribution* d =
        m->Lookup(BucketKey{LogBucket(freq), LogBucket(deg)}, state);
    return d == nullptr ? 0.0 : MassAt(*d, FractionBin(w, deg, m->fraction_bins));
  }
  if (const auto* m = std::get_if<GlobalModel>(&model)) {
    return MassAt(m->ForState(state), static_cast<std::int64_t>(w));
  }
  const auto& m = std::get<BinomialModel>(model);
  return std::exp(BinomialLogPmf(deg, m.ForState(state), w));
}

nlohmann::json AttackReport::ToJson() const {
  nlohmann::json j = {{"property", property}, {"targets", targets},
                      {"truth", truth},       {"prior", prior},
                      {"posterior", posterior}, {"accuracy", accuracy},
                      {"auc", auc}};
  if (auc_with_release) {
    j["posterior_with_release"] = posterior_with_release;
    j["accuracy_with_release"] = *accuracy_with_release;
    j["auc_with_release"] = *auc_with_release;
  }
  return j;
}

double Auc(std::span<const double> scores, const std::vector<bool>& labels) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]]) {
        rank_sum += mid;
        ++positives;
      }
    }
    i = j;
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) return 0.5;
  const double p = static_cast<double>(positives);
  return (rank_sum - p * (p + 1.0) / 2.0) /
         (p * static_cast<double>(negatives));
}

std::vector<EdgeIndex> SampleTargets(const OrgGraph& graph, std::size_t count,
                                     std::uint64_t seed) {
  std::vector<EdgeIndex> all(graph.edge_count());
  std::iota(all.begin(), all.end(), 0);
  if (count < all.size()) {
    std::mt19937_64 rng(Mix64(seed ^ HashName("targets")));
    for (std::size_t i = 0; i < count; ++i) {
      std::swap(all[i], all[i + UniformIndex(rng, all.size() - i)]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
  }
  return all;
}

absl::StatusOr<AttackReport> EvaluateAttack(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    const CorrelationModel& model, TokenId property,
    std::span<const EdgeIndex> targets, std::optional<ReleasedCount> release) {
  if (property >= labeling.vocabulary_size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("property id ", property, " is not in the vocabulary"));
  }
  if (release && !(release->lambda > 0.0)) {
    return absl::InvalidArgumentError("release scale must be positive");
  }
  AttackReport r;
  r.property = property;
  r.targets.assign(targets.begin(), targets.end());
  const std::size_t freq = labeling.freq(property);
  r.prior = static_cast<double>(freq) / static_cast<double>(graph.edge_count());
  const double log_prior_odds = std::log(r.prior) - std::log1p(-r.prior);
  // Scores are log odds so that near-certain posteriors still rank.
  std::vector<double> score, score_release;
  for (EdgeIndex e : targets) {
    if (e >= graph.edge_count()) {
      return absl::NotFoundError(absl::StrCat("target edge ", e,
                                              " is not in the graph"));
    }
    const bool present = labeling.Has(e, property);
    r.truth.push_back(present);
    const std::size_t w = NeighborhoodCount(graph, labeling, e, property);
    const std::size_t deg = graph.neighborhood_size(e);
    const double ll1 = LogLikelihood(model, SecretState::kPresent, w, deg, freq);
    const double ll0 = LogLikelihood(model, SecretState::kAbsent, w, deg, freq);
    score.push_back(LogOdds(log_prior_odds, ll1, ll0));
    r.posterior.push_back(Logistic(score.back()));
    if (release) {
      // Laplace log densities; the shared normalizer cancels.
      const double others = static_cast<double>(freq) - (present ? 1.0 : 0.0);
      const double m1 = -std::abs(release->value - others - 1.0) / release->lambda;
      const double m0 = -std::abs(release->value - others) / release->lambda;
      score_release.push_back(LogOdds(log_prior_odds, ll1 + m1, ll0 + m0));
      r.posterior_with_release.push_back(Logistic(score_release.back()));
    }
  }
  r.accuracy = Accuracy(r.posterior, r.truth);
  r.auc = Auc(score, r.truth);
  if (release) {
    r.accuracy_with_release = Accuracy(r.posterior_with_release, r.truth);
    r.auc_with_release = Auc(score_release, r.truth);
  }
  return r;
}

}  // namespace pfgraph
