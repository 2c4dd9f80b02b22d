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

#include "pfgraph/correlation.h"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "absl/strings/str_cat.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pfgraph/kernels.h"
#include "pfgraph/rng.h"
#include "pfgraph/status_macros.h"

namespace pfgraph {
namespace {

using json = nlohmann::json;
using kernels::EdgeProperty;

std::uint64_t PackPair(TokenId a, EdgeIndex e) {
  return (static_cast<std::uint64_t>(a) << 32) | e;
}

// Keeps a uniform random subset of at most `cap` elements (partial
// Fisher-Yates), returned in ascending order.
void Subsample(std::vector<EdgeProperty>& items, std::size_t cap,
               std::mt19937_64& rng) {
  if (items.size() > cap) {
    for (std::size_t i = 0; i < cap; ++i) {
      std::swap(items[i], items[i + UniformIndex(rng, items.size() - i)]);
    }
    items.resize(cap);
  }
  std::sort(items.begin(), items.end());
}

// Uniform sample without replacement of at most `cap` pairs (a, e) with
// a in `props`, e in `edges`, and e not labeled with a. `labeled` is the
// number of labeled pairs in that product.
std::vector<EdgeProperty> SampleUnlabeled(const PropertyLabeling& labeling,
                                          std::span<const TokenId> props,
                                          std::span<const EdgeIndex> edges,
                                          std::size_t labeled, std::size_t cap,
                                          std::mt19937_64& rng) {
  std::vector<EdgeProperty> out;
  const std::size_t universe = props.size() * edges.size() - labeled;
  if (universe == 0 || cap == 0) return out;
  if (universe <= 2 * cap) {
    for (TokenId a : props) {
      for (EdgeIndex e : edges) {
        if (!labeling.Has(e, a)) out.push_back({e, a});
      }
    }
    Subsample(out, cap, rng);
    return out;
  }
  // At least half of the product is unlabeled, so rejection terminates fast.
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < cap) {
    const TokenId a = props[UniformIndex(rng, props.size())];
    const EdgeIndex e = edges[UniformIndex(rng, edges.size())];
    if (labeling.Has(e, a) || !seen.insert(PackPair(a, e)).second) continue;
    out.push_back({e, a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

absl::Status CheckInputs(const OrgGraph& graph,
                         const PropertyLabeling& labeling,
                         std::span<const TokenId> properties) {
  if (labeling.edge_count() != graph.edge_count()) {
    return absl::InvalidArgumentError(
        "labeling and graph disagree on edge count");
  }
  if (properties.empty()) {
    return absl::InvalidArgumentError("property sample is empty");
  }
  for (TokenId a : properties) {
    if (a >= labeling.vocabulary_size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("property id ", a, " outside vocabulary"));
    }
  }
  return absl::OkStatus();
}

std::mt19937_64 StreamFor(std::uint64_t seed, std::uint64_t tag) {
  return std::mt19937_64(Mix64(Mix64(seed) ^ Mix64(tag)));
}

struct StateSamples {
  std::array<std::vector<EdgeProperty>, 2> pairs;
  std::array<std::vector<std::uint32_t>, 2> w;
};

// Uniform samples of labeled and unlabeled (edge, property) pairs over the
// whole graph, with their neighborhood counts.
StateSamples SampleByState(const OrgGraph& graph,
                           const PropertyLabeling& labeling,
                           std::span<const TokenId> properties,
                           const FitOptions& options) {
  StateSamples s;
  std::vector<EdgeIndex> all_edges(graph.edge_count());
  for (EdgeIndex e = 0; e < all_edges.size(); ++e) all_edges[e] = e;

  std::vector<EdgeProperty> labeled;
  for (TokenId a : properties) {
    for (EdgeIndex e : labeling.edges_with(a)) labeled.push_back({e, a});
  }
  const std::size_t labeled_total = labeled.size();
  auto rng1 = StreamFor(options.seed, 1);
  Subsample(labeled, options.observation_cap, rng1);
  s.pairs[1] = std::move(labeled);

  auto rng0 = StreamFor(options.seed, 0);
  s.pairs[0] = SampleUnlabeled(labeling, properties, all_edges, labeled_total,
                               options.observation_cap, rng0);
  for (int st = 0; st < 2; ++st) {
    s.w[st] = kernels::CountLabeledNeighbors(graph, labeling, s.pairs[st]);
  }
  return s;
}

absl::StatusOr<std::optional<DiscreteDistribution>> OptionalFromJson(
    const json& j) {
  if (j.is_null()) return std::optional<DiscreteDistribution>();
  ASSIGN_OR_RETURN(DiscreteDistribution d, DiscreteDistribution::FromJson(j));
  return std::optional<DiscreteDistribution>(std::move(d));
}

json OptionalToJson(const std::optional<DiscreteDistribution>& d) {
  return d ? d->ToJson() : json(nullptr);
}

absl::Status ExpectKind(const json& j, std::string_view kind) {
  if (!j.is_object() || j.value("kind", std::string()) != kind) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected a '", std::string(kind), "' model document"));
  }
  return absl::OkStatus();
}

}  // namespace

int LogBucket(std::size_t x) {
  int b = 0;
  while (x >= 10) {
    x /= 10;
    ++b;
  }
  return b;
}

std::int64_t FractionBin(std::size_t w, std::size_t deg, int bins) {
  if (deg == 0) return 0;
  const std::uint64_t num = 2 * static_cast<std::uint64_t>(bins) * w + deg;
  return static_cast<std::int64_t>(num / (2 * static_cast<std::uint64_t>(deg)));
}

std::size_t NeighborhoodCount(const OrgGraph& graph,
                              const PropertyLabeling& labeling, EdgeIndex e,
                              TokenId property) {
  std::size_t w = 0;
  graph.ForEachNeighbor(e, [&](EdgeIndex f) {
    if (labeling.Has(f, property)) ++w;
  });
  return w;
}

std::vector<TokenId> SampleProperties(const PropertyLabeling& labeling,
                                      std::size_t max_properties,
                                      std::uint64_t seed) {
  std::vector<TokenId> all;
  for (TokenId t = 0; t < labeling.vocabulary_size(); ++t) {
    if (labeling.freq(t) > 0) all.push_back(t);
  }
  if (all.size() > max_properties) {
    auto rng = StreamFor(seed, 7);
    for (std::size_t i = 0; i < max_properties; ++i) {
      std::swap(all[i], all[i + UniformIndex(rng, all.size() - i)]);
    }
    all.resize(max_properties);
    std::sort(all.begin(), all.end());
  }
  return all;
}

const DiscreteDistribution* ConditionalModel::Lookup(BucketKey key,
                                                     SecretState state,
                                                     bool* fell_back) const {
  const int s = static_cast<int>(state);
  if (fell_back) *fell_back = false;
  auto it = buckets.find(key);
  if (it != buckets.end() && it->second.by_state[s]) {
    return &*it->second.by_state[s];
  }
  if (fell_back) *fell_back = true;
  return pooled[s] ? &*pooled[s] : nullptr;
}

absl::StatusOr<ConditionalModel> FitConditional(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    std::span<const TokenId> properties, const FitOptions& options) {
  RETURN_IF_ERROR(CheckInputs(graph, labeling, properties));
  if (options.fraction_bins < 1) {
    return absl::InvalidArgumentError("fraction_bins must be positive");
  }

  std::map<int, std::vector<TokenId>> props_by_freq;
  for (TokenId a : properties) {
    props_by_freq[LogBucket(labeling.freq(a))].push_back(a);
  }
  std::map<int, std::vector<EdgeIndex>> edges_by_deg;
  std::vector<int> deg_bucket(graph.edge_count());
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    deg_bucket[e] = LogBucket(graph.neighborhood_size(e));
    edges_by_deg[deg_bucket[e]].push_back(e);
  }

  // Labeled pairs grouped by bucket.
  std::map<BucketKey, std::vector<EdgeProperty>> labeled;
  for (const auto& [f, props] : props_by_freq) {
    for (TokenId a : props) {
      for (EdgeIndex e : labeling.edges_with(a)) {
        labeled[{f, deg_bucket[e]}].push_back({e, a});
      }
    }
  }

  std::vector<EdgeProperty> queries;
  std::vector<std::pair<BucketKey, int>> owner;
  for (const auto& [f, props] : props_by_freq) {
    for (const auto& [d, edges] : edges_by_deg) {
      const BucketKey key{f, d};
      auto lit = labeled.find(key);
      std::vector<EdgeProperty> present =
          lit == labeled.end() ? std::vector<EdgeProperty>{} : lit->second;
      const std::uint64_t tag = 1000 + 64 * static_cast<std::uint64_t>(f) +
                                2 * static_cast<std::uint64_t>(d);
      auto rng1 = StreamFor(options.seed, tag + 1);
      const std::size_t labeled_count = present.size();
      Subsample(present, options.sample_cap, rng1);
      auto rng0 = StreamFor(options.seed, tag);
      std::vector<EdgeProperty> absent = SampleUnlabeled(
          labeling, props, edges, labeled_count, options.sample_cap, rng0);
      for (const auto& q : absent) {
        queries.push_back(q);
        owner.emplace_back(key, 0);
      }
      for (const auto& q : present) {
        queries.push_back(q);
        owner.emplace_back(key, 1);
      }
    }
  }

  const std::vector<std::uint32_t> w =
      kernels::CountLabeledNeighbors(graph, labeling, queries);

  std::map<BucketKey, std::array<std::map<std::int64_t, std::uint64_t>, 2>>
      hist;
  std::array<std::map<std::int64_t, std::uint64_t>, 2> pooled;
  for (std::size_t k = 0; k < queries.size(); ++k) {
    const auto& [key, state] = owner[k];
    const std::int64_t bin =
        FractionBin(w[k], graph.neighborhood_size(queries[k].edge),
                    options.fraction_bins);
    ++hist[key][state][bin];
    ++pooled[state][bin];
  }

  ConditionalModel model;
  model.fraction_bins = options.fraction_bins;
  model.sample_cap = options.sample_cap;
  model.seed = options.seed;
  for (auto& [key, by_state] : hist) {
    ConditionalModel::Bucket bucket;
    for (int st = 0; st < 2; ++st) {
      std::uint64_t n = 0;
      for (const auto& [bin, c] : by_state[st]) n += c;
      bucket.observations[st] = n;
      if (n > 0) {
        ASSIGN_OR_RETURN(bucket.by_state[st],
                         DiscreteDistribution::FromCounts(by_state[st]));
      }
    }
    model.buckets.emplace(key, std::move(bucket));
  }
  for (int st = 0; st < 2; ++st) {
    if (!pooled[st].empty()) {
      ASSIGN_OR_RETURN(model.pooled[st],
                       DiscreteDistribution::FromCounts(pooled[st]));
    }
  }
  return model;
}

absl::StatusOr<GlobalModel> FitGlobal(const OrgGraph& graph,
                                      const PropertyLabeling& labeling,
                                      std::span<const TokenId> properties,
                                      const FitOptions& options) {
  RETURN_IF_ERROR(CheckInputs(graph, labeling, properties));
  const StateSamples s = SampleByState(graph, labeling, properties, options);
  std::array<std::map<std::int64_t, std::uint64_t>, 2> hist;
  for (int st = 0; st < 2; ++st) {
    if (s.w[st].empty()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "cannot fit global model: no observations with the property ",
          std::string(SecretStateName(static_cast<SecretState>(st)))));
    }
    for (std::uint32_t w : s.w[st]) ++hist[st][w];
  }
  ASSIGN_OR_RETURN(DiscreteDistribution absent,
                   DiscreteDistribution::FromCounts(hist[0]));
  ASSIGN_OR_RETURN(DiscreteDistribution present,
                   DiscreteDistribution::FromCounts(hist[1]));
  return GlobalModel{std::move(absent), std::move(present),
                     {s.w[0].size(), s.w[1].size()}, options.observation_cap,
                     options.seed};
}

absl::StatusOr<BinomialModel> FitBinomial(const OrgGraph& graph,
                                          const PropertyLabeling& labeling,
                                          std::span<const TokenId> properties,
                                          const FitOptions& options) {
  RETURN_IF_ERROR(CheckInputs(graph, labeling, properties));
  const StateSamples s = SampleByState(graph, labeling, properties, options);
  BinomialModel model;
  model.seed = options.seed;
  for (int st = 0; st < 2; ++st) {
    for (std::size_t k = 0; k < s.pairs[st].size(); ++k) {
      model.labeled_pairs[st] += s.w[st][k];
      model.total_pairs[st] += graph.neighborhood_size(s.pairs[st][k].edge);
    }
    if (model.total_pairs[st] == 0) {
      return absl::FailedPreconditionError(absl::StrCat(
          "cannot fit binomial model: no neighbor pairs for centers with the "
          "property ",
          std::string(SecretStateName(static_cast<SecretState>(st)))));
    }
  }
  model.p0 = static_cast<double>(model.labeled_pairs[0]) /
             static_cast<double>(model.total_pairs[0]);
  model.p1 = static_cast<double>(model.labeled_pairs[1]) /
             static_cast<double>(model.total_pairs[1]);
  return model;
}

json ConditionalModel::ToJson() const {
  json bucket_list = json::array();
  for (const auto& [key, b] : buckets) {
    bucket_list.push_back({{"log_freq", key.log_freq},
                           {"log_deg", key.log_deg},
                           {"observations", b.observations},
                           {"absent", OptionalToJson(b.by_state[0])},
                           {"present", OptionalToJson(b.by_state[1])}});
  }
  return {{"kind", "conditional"},
          {"fraction_bins", fraction_bins},
          {"sample_cap", sample_cap},
          {"seed", seed},
          {"buckets", bucket_list},
          {"pooled",
           {{"absent", OptionalToJson(pooled[0])},
            {"present", OptionalToJson(pooled[1])}}}};
}

absl::StatusOr<ConditionalModel> ConditionalModel::FromJson(const json& j) {
  RETURN_IF_ERROR(ExpectKind(j, "conditional"));
  ConditionalModel m;
  try {
    m.fraction_bins = j.at("fraction_bins").get<int>();
    m.sample_cap = j.at("sample_cap").get<std::size_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    for (const json& b : j.at("buckets")) {
      Bucket bucket;
      bucket.observations =
          b.at("observations").get<std::array<std::size_t, 2>>();
      ASSIGN_OR_RETURN(bucket.by_state[0], OptionalFromJson(b.at("absent")));
      ASSIGN_OR_RETURN(bucket.by_state[1], OptionalFromJson(b.at("present")));
      m.buckets.emplace(
          BucketKey{b.at("log_freq").get<int>(), b.at("log_deg").get<int>()},
          std::move(bucket));
    }
    ASSIGN_OR_RETURN(m.pooled[0], OptionalFromJson(j.at("pooled").at("absent")));
    ASSIGN_OR_RETURN(m.pooled[1],
                     OptionalFromJson(j.at("pooled").at("present")));
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("conditional model: ", e.what()));
  }
  return m;
}

json GlobalModel::ToJson() const {
  return {{"kind", "global"},
          {"observation_cap", observation_cap},
          {"seed", seed},
          {"observations", observations},
          {"absent", absent.ToJson()},
          {"present", present.ToJson()}};
}

absl::StatusOr<GlobalModel> GlobalModel::FromJson(const json& j) {
  RETURN_IF_ERROR(ExpectKind(j, "global"));
  try {
    ASSIGN_OR_RETURN(DiscreteDistribution absent,
                     DiscreteDistribution::FromJson(j.at("absent")));
    ASSIGN_OR_RETURN(DiscreteDistribution present,
                     DiscreteDistribution::FromJson(j.at("present")));
    return GlobalModel{std::move(absent), std::move(present),
                       j.at("observations").get<std::array<std::size_t, 2>>(),
                       j.at("observation_cap").get<std::size_t>(),
                       j.at("seed").get<std::uint64_t>()};
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("global model: ", e.what()));
  }
}

json BinomialModel::ToJson() const {
  return {{"kind", "binomial"},         {"p_0", p0},
          {"p_1", p1},                  {"labeled_pairs", labeled_pairs},
          {"total_pairs", total_pairs}, {"seed", seed}};
}

absl::StatusOr<BinomialModel> BinomialModel::FromJson(const json& j) {
  RETURN_IF_ERROR(ExpectKind(j, "binomial"));
  BinomialModel m;
  try {
    m.p0 = j.at("p_0").get<double>();
    m.p1 = j.at("p_1").get<double>();
    m.labeled_pairs = j.at("labeled_pairs").get<std::array<std::uint64_t, 2>>();
    m.total_pairs = j.at("total_pairs").get<std::array<std::uint64_t, 2>>();
    m.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("binomial model: ", e.what()));
  }
  if (!(m.p0 >= 0 && m.p0 <= 1 && m.p1 >= 0 && m.p1 <= 1)) {
    return absl::InvalidArgumentError("binomial p out of [0, 1]");
  }
  return m;
}

}  // namespace pfgraph
