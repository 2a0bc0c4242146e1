// Copyright 2026 The hypercd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypercd/louvain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hypercd/error.hpp"
#include "hypercd/random.hpp"

namespace hypercd {
namespace {

// q restricted to one level of super-nodes: symmetric sparse links between
// distinct super-nodes plus the product kernels over summed attributes.
struct Level {
  int size = 0;
  std::vector<std::vector<std::pair<int, double>>> links;
  std::vector<double> coefficient;
  std::vector<std::vector<double>> attribute;  // [kernel][node]
  std::vector<bool> nonnegative;               // [kernel]
};

Level initial_level(const PairVector& q) {
  Level level;
  level.size = q.n();
  level.links.resize(q.n());
  for (const PairEntry& e : q.sparse()) {
    level.links[e.i].emplace_back(e.j, e.value);
    level.links[e.j].emplace_back(e.i, e.value);
  }
  for (const ProductKernel& k : q.kernels()) {
    level.coefficient.push_back(k.coefficient());
    level.attribute.emplace_back(k.attribute().begin(), k.attribute().end());
    const auto& a = level.attribute.back();
    level.nonnegative.push_back(std::all_of(a.begin(), a.end(), [](double x) { return x >= 0.0; }));
  }
  return level;
}

struct PhaseResult {
  std::vector<int> labels;
  double gain = 0.0;
  int64_t moves = 0;
  int passes = 0;
};

// Local moves on one level from `start` (cluster ids below level.size).
PhaseResult local_moves(const Level& level, std::vector<int> start, std::span<const int> order,
                        int max_passes) {
  const int n = level.size;
  const int kernels = static_cast<int>(level.coefficient.size());
  PhaseResult out;
  out.labels = std::move(start);
  auto& labels = out.labels;

  std::vector<int> counts(n, 0);
  for (int l : labels) ++counts[l];
  std::vector<int> free_ids;
  for (int c = n - 1; c >= 0; --c) {
    if (counts[c] == 0) free_ids.push_back(c);
  }
  std::vector<std::vector<double>> totals(kernels);
  std::vector<double> link_weight(n, 0.0);
  std::vector<double> link_magnitude(n, 0.0);
  std::vector<char> touched_flag(n, 0);
  std::vector<int> touched;
  std::vector<double> w(kernels);
  std::vector<int> all_ids(n);
  std::iota(all_ids.begin(), all_ids.end(), 0);

  for (int pass = 0; pass < max_passes; ++pass) {
    for (int k = 0; k < kernels; ++k) {
      totals[k].assign(n, 0.0);
      for (int v = 0; v < n; ++v) totals[k][labels[v]] += level.attribute[k][v];
    }
    int64_t moved = 0;
    for (int i : order) {
      const int from = labels[i];
      --counts[from];
      for (int k = 0; k < kernels; ++k) totals[k][from] -= level.attribute[k][i];

      for (auto [j, value] : level.links[i]) {
        const int c = labels[j];
        if (!touched_flag[c]) {
          touched_flag[c] = 1;
          touched.push_back(c);
        }
        link_weight[c] += value;
        link_magnitude[c] += std::abs(value);
      }
      bool background_nonpositive = true;
      for (int k = 0; k < kernels; ++k) {
        w[k] = level.coefficient[k] * level.attribute[k][i];
        background_nonpositive = background_nonpositive && w[k] <= 0.0 && level.nonnegative[k];
      }
      auto score = [&](int c, double& magnitude) {
        double s = link_weight[c];
        magnitude = link_magnitude[c];
        for (int k = 0; k < kernels; ++k) {
          const double t = w[k] * totals[k][c];
          s += t;
          magnitude += std::abs(t);
        }
        return s;
      };

      double stay_magnitude = 0.0;
      const double stay = score(from, stay_magnitude);
      int best_c = -1;
      double best = -std::numeric_limits<double>::infinity();
      double best_magnitude = 0.0;
      if (counts[from] > 0) {
        best_c = free_ids.back();
        best = 0.0;
      }
      // Clusters without a link to i score at most 0 when every kernel term
      // is non-positive, so the empty option already covers them.
      std::span<const int> candidates = all_ids;
      if (background_nonpositive) {
        std::sort(touched.begin(), touched.end());
        candidates = touched;
      }
      for (int c : candidates) {
        if (c == from || counts[c] == 0) continue;
        double magnitude = 0.0;
        const double s = score(c, magnitude);
        if (s > best) {
          best = s;
          best_c = c;
          best_magnitude = magnitude;
        }
      }

      if (best_c >= 0 && best - stay > 1e-12 * (best_magnitude + stay_magnitude)) {
        if (counts[best_c] == 0) free_ids.pop_back();
        if (counts[from] == 0) free_ids.push_back(from);
        labels[i] = best_c;
        out.gain += best - stay;
        ++moved;
      }
      ++counts[labels[i]];
      for (int k = 0; k < kernels; ++k) totals[k][labels[i]] += level.attribute[k][i];

      for (int c : touched) {
        touched_flag[c] = 0;
        link_weight[c] = 0.0;
        link_magnitude[c] = 0.0;
      }
      touched.clear();
    }
    ++out.passes;
    out.moves += moved;
    if (moved == 0) break;
  }
  return out;
}

// Relabels clusters 0, 1, ... by first member; returns the cluster count.
int canonicalize(std::vector<int>& labels) {
  std::vector<int> remap(labels.size(), -1);
  int next = 0;
  for (int& l : labels) {
    if (remap[l] < 0) remap[l] = next++;
    l = remap[l];
  }
  return next;
}

// Collapses every cluster to a super-node. Returns the sum of q over pairs
// that become internal to a super-node.
double aggregate(const Level& level, std::span<const int> labels, int clusters, Level& next) {
  const int kernels = static_cast<int>(level.coefficient.size());
  next.size = clusters;
  next.coefficient = level.coefficient;
  next.nonnegative = level.nonnegative;
  next.links.assign(clusters, {});
  next.attribute.assign(kernels, std::vector<double>(clusters, 0.0));

  double internal = 0.0;
  std::vector<std::vector<int>> members(clusters);
  for (int v = 0; v < level.size; ++v) members[labels[v]].push_back(v);

  std::vector<double> weight(clusters, 0.0);
  std::vector<char> flag(clusters, 0);
  std::vector<int> touched;
  for (int c = 0; c < clusters; ++c) {
    double inside = 0.0;
    for (int u : members[c]) {
      for (auto [v, value] : level.links[u]) {
        const int d = labels[v];
        if (d == c) {
          inside += value;
          continue;
        }
        if (!flag[d]) {
          flag[d] = 1;
          touched.push_back(d);
        }
        weight[d] += value;
      }
    }
    internal += 0.5 * inside;
    std::sort(touched.begin(), touched.end());
    for (int d : touched) {
      if (weight[d] != 0.0) next.links[c].emplace_back(d, weight[d]);
      weight[d] = 0.0;
      flag[d] = 0;
    }
    touched.clear();
  }
  for (int k = 0; k < kernels; ++k) {
    std::vector<double> squares(clusters, 0.0);
    for (int v = 0; v < level.size; ++v) {
      const double a = level.attribute[k][v];
      next.attribute[k][labels[v]] += a;
      squares[labels[v]] += a * a;
    }
    double within = 0.0;
    for (int c = 0; c < clusters; ++c) {
      within += 0.5 * (next.attribute[k][c] * next.attribute[k][c] - squares[c]);
    }
    internal += level.coefficient[k] * within;
  }
  return internal;
}

}  // namespace

LouvainResult louvain_project(const PairVector& q, const LouvainConfig& config) {
  if (config.max_passes < 1) throw DataError("max_passes must be at least 1");
  const double total = sum(q);
  Rng rng(config.seed);
  LouvainResult result;

  const Level base = initial_level(q);
  std::vector<int> start(q.n());
  std::iota(start.begin(), start.end(), 0);
  std::vector<int> membership = start;
  // Sum of q over the intra-cluster pairs of `membership`, and over the pairs
  // inside the current level's super-nodes.
  double value = 0.0;
  double offset = 0.0;

  for (int round = 0; round < config.max_passes; ++round) {
    Level level = base;
    offset = 0.0;
    std::iota(membership.begin(), membership.end(), 0);
    int64_t first_level_moves = -1;
    while (true) {
      std::vector<int> order(level.size);
      std::iota(order.begin(), order.end(), 0);
      if (config.order == VertexOrder::kShuffle) rng.shuffle(std::span<int>(order));

      PhaseResult phase = local_moves(level, std::move(start), order, config.max_passes);
      ++result.levels;
      result.passes += phase.passes;
      result.moves += phase.moves;
      value += phase.gain;
      result.level_objectives.push_back(-total + 2.0 * value);
      if (first_level_moves < 0) first_level_moves = phase.moves;

      const int clusters = canonicalize(phase.labels);
      for (int& m : membership) m = phase.labels[m];
      if (phase.moves == 0 || !config.aggregation || clusters == level.size) break;

      Level next;
      offset += aggregate(level, phase.labels, clusters, next);
      value = offset;
      level = std::move(next);
      start.resize(clusters);
      std::iota(start.begin(), start.end(), 0);
    }
    // A refinement round restarts the vertex-level moves from the result.
    if (!config.refine || !config.aggregation || (round > 0 && first_level_moves == 0)) break;
    start = membership;
  }

  result.clustering = Clustering(membership);
  result.objective = inner(q, result.clustering);
  return result;
}

Clustering exact_project(const PairVector& q) {
  const int n = q.n();
  if (n > kExactProjectMaxNodes) {
    throw DataError("exact_project supports at most " + std::to_string(kExactProjectMaxNodes) +
                    " vertices");
  }
  if (n == 0) return Clustering();

  std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) dense[i][j] = dense[j][i] = q.coordinate(i, j);
  }

  std::vector<int> labels(n, 0);
  std::vector<std::vector<int>> blocks(n);
  std::vector<int> best_labels(n, 0);
  double best = -std::numeric_limits<double>::infinity();

  auto search = [&](auto&& self, int v, int used, double value) -> void {
    if (v == n) {
      if (value > best) {
        best = value;
        best_labels = labels;
      }
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      double add = 0.0;
      for (int u : blocks[b]) add += dense[u][v];
      labels[v] = b;
      blocks[b].push_back(v);
      self(self, v + 1, std::max(used, b + 1), value + add);
      blocks[b].pop_back();
    }
  };
  blocks[0].push_back(0);
  search(search, 1, 1, 0.0);
  return Clustering(best_labels);
}

double modularity_value(const Clustering& c, const Graph& g, NullModel model, double gamma) {
  if (g.edge_count() == 0) throw DataError("modularity is undefined on an edgeless graph");
  const PairVector q = 0.5 * modularity_vector(g, model, gamma);
  return intra_cluster_sum(q, c) / static_cast<double>(g.edge_count());
}

}  // namespace hypercd
