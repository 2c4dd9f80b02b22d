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

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pfgraph/transport.h"

namespace pfgraph {
namespace {

// Edmonds-Karp on a dense capacity matrix. Node 0 is the source, 1..m the
// points of mu, m+1..m+n the points of nu, m+n+1 the sink.
double MaxFlow(std::vector<std::vector<double>> cap, int source, int sink) {
  const int size = static_cast<int>(cap.size());
  double flow = 0.0;
  std::vector<int> parent(size);
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent[sink] < 0) {
      const int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < size; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0.0) {
          parent[v] = u;
          frontier.push(v);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    double push = std::numeric_limits<double>::infinity();
    for (int v = sink; v != source; v = parent[v]) {
      push = std::min(push, cap[parent[v]][v]);
    }
    for (int v = sink; v != source; v = parent[v]) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    flow += push;
  }
}

bool Feasible(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
              std::int64_t threshold) {
  const int m = static_cast<int>(mu.size());
  const int n = static_cast<int>(nu.size());
  const int source = 0;
  const int sink = m + n + 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cap(m + n + 2,
                                       std::vector<double>(m + n + 2, 0.0));
  for (int i = 0; i < m; ++i) cap[source][1 + i] = mu.masses()[i];
  for (int j = 0; j < n; ++j) cap[1 + m + j][sink] = nu.masses()[j];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(mu.support()[i] - nu.support()[j]) <= threshold) {
        cap[1 + i][1 + m + j] = inf;
      }
    }
  }
  return MaxFlow(std::move(cap), source, sink) >= 1.0 - kLevelTolerance;
}

}  // namespace

absl::StatusOr<std::int64_t> BottleneckWInfinity(
    const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  if (mu.size() > kMaxOracleSupport || nu.size() > kMaxOracleSupport) {
    return absl::InvalidArgumentError(absl::StrCat(
        "bottleneck oracle supports at most ", kMaxOracleSupport, " points"));
  }
  std::vector<std::int64_t> candidates;
  for (std::int64_t x : mu.support()) {
    for (std::int64_t y : nu.support()) candidates.push_back(std::abs(x - y));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  // Feasibility is monotone in the threshold.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (Feasible(mu, nu, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace pfgraph
