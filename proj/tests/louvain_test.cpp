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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hypercd/error.hpp"
#include "hypercd/generators.hpp"
#include "hypercd/queries.hpp"
#include "oracles.hpp"

namespace hypercd {
namespace {

using testing::for_each_partition;
using testing::random_graph;
using testing::random_pair_vector;

// Best <b(C), q> reachable from c by moving one vertex, to an existing
// cluster or to a new one.
double best_single_move(const PairVector& q, const Clustering& c) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> labels(c.labels().begin(), c.labels().end());
  const int fresh = c.cluster_count();
  for (int v = 0; v < c.size(); ++v) {
    const int original = labels[v];
    for (int target = 0; target <= fresh; ++target) {
      if (target == original) continue;
      labels[v] = target;
      best = std::max(best, inner(q, Clustering(labels)));
    }
    labels[v] = original;
  }
  return best;
}

double brute_force_best(const PairVector& q) {
  double best = -std::numeric_limits<double>::infinity();
  for_each_partition(q.n(), [&](const std::vector<int>& labels) {
    best = std::max(best, inner(q, Clustering(labels)));
  });
  return best;
}

TEST(Louvain, NegativeUniformGivesSingletons) {
  const LouvainResult r = louvain_project(PairVector::uniform(12, -1.0));
  EXPECT_EQ(r.clustering, Clustering::singletons(12));
  EXPECT_EQ(r.moves, 0);
  EXPECT_DOUBLE_EQ(r.objective, static_cast<double>(pair_count(12)));
}

TEST(Louvain, PositiveUniformGivesWhole) {
  const LouvainResult r = louvain_project(PairVector::uniform(9, 0.5));
  EXPECT_EQ(r.clustering, Clustering::whole(9));
}

TEST(Louvain, ObjectiveMatchesInner) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const PairVector q = random_pair_vector(rng, 15, 40, 1 + trial % 3);
    const LouvainResult r = louvain_project(q);
    EXPECT_NEAR(r.objective, inner(q, r.clustering), 1e-9);
  }
}

TEST(Louvain, ReturnsClusteringOfItsOwnVector) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::vector<int>{10, 50, 200}[trial % 3];
    const Clustering c = testing::random_clustering(rng, n, 1 + trial % 12);
    LouvainConfig config;
    config.order = trial % 2 ? VertexOrder::kShuffle : VertexOrder::kAscending;
    config.seed = trial;
    EXPECT_EQ(louvain_project(to_pair_vector(c), config).clustering, c);
  }
}

TEST(Louvain, NoFartherThanFinePole) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::vector<int>{10, 50, 200}[trial % 3];
    const Graph g = random_graph(rng, n, 8.0 / n);
    const PairVector q = parallel_project(modularity_vector(g, NullModel::kConfiguration, 1.0),
                                          0.3 + 0.08 * trial);
    const LouvainResult r = louvain_project(q);
    EXPECT_LE(angular_distance(q, r.clustering), latitude(q) + 1e-12);
    EXPECT_GE(r.objective, inner(q, Clustering::singletons(n)) - 1e-9);
  }
}

TEST(Louvain, Idempotent) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 40, 0.15);
    const PairVector q = modularity_vector(g, NullModel::kErdosRenyi, 1.0);
    const Clustering first = louvain_project(q).clustering;
    const Clustering second = louvain_project(to_pair_vector(first)).clustering;
    EXPECT_EQ(first, second);
  }
}

TEST(Louvain, DeterministicForSeed) {
  std::mt19937_64 rng(5);
  const Graph g = random_graph(rng, 60, 0.1);
  const PairVector q = modularity_vector(g, NullModel::kConfiguration, 1.0);
  LouvainConfig config;
  config.order = VertexOrder::kShuffle;
  config.seed = 11;
  EXPECT_EQ(louvain_project(q, config).clustering, louvain_project(q, config).clustering);
}

TEST(Louvain, RingOfThreeTrianglesIsExact) {
  const GeneratedGraph ring = ring_of_cliques({3, 3});
  const PairVector q = edge_vector(ring.graph);
  const LouvainResult r = louvain_project(q);
  EXPECT_NEAR(r.objective, brute_force_best(q), 1e-12);
  EXPECT_EQ(r.clustering, ring.truth);
  EXPECT_EQ(exact_project(q), ring.truth);
}

TEST(Louvain, ExactIsNeverWorse) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const PairVector q = random_pair_vector(rng, 6, 8, 1 + trial % 2);
    const Clustering exact = exact_project(q);
    EXPECT_NEAR(inner(q, exact), brute_force_best(q), 1e-12);
    EXPECT_GE(inner(q, exact), louvain_project(q).objective - 1e-12);
  }
}

TEST(Louvain, LevelObjectivesTrackedAndMonotone) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 80, 0.06);
    const PairVector q = modularity_vector(g, NullModel::kConfiguration, 1.0);
    const LouvainResult r = louvain_project(q);
    ASSERT_FALSE(r.level_objectives.empty());
    EXPECT_EQ(static_cast<int>(r.level_objectives.size()), r.levels);
    EXPECT_NEAR(r.level_objectives.back(), r.objective, 1e-9);
    double previous = inner(q, Clustering::singletons(g.n()));
    for (double v : r.level_objectives) {
      EXPECT_GE(v, previous - 1e-9);
      previous = v;
    }
  }
}

TEST(Louvain, WithoutAggregation) {
  std::mt19937_64 rng(8);
  const Graph g = random_graph(rng, 50, 0.1);
  const PairVector q = modularity_vector(g, NullModel::kConfiguration, 1.0);
  LouvainConfig config;
  config.aggregation = false;
  const LouvainResult r = louvain_project(q, config);
  EXPECT_EQ(r.levels, 1);
  // Without aggregation the result is a local optimum for single moves.
  EXPECT_LE(best_single_move(q, r.clustering), r.objective + 1e-9);
}

TEST(Louvain, RefineNeverLowersObjective) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 100, 0.05);
    const PairVector q = parallel_project(edge_vector(g), 1.3);
    LouvainConfig plain;
    plain.order = VertexOrder::kShuffle;
    plain.seed = trial;
    LouvainConfig refined = plain;
    refined.refine = true;
    EXPECT_GE(louvain_project(q, refined).objective, louvain_project(q, plain).objective - 1e-9);
  }
}

// Maximising modularity over all partitions picks the same clusterings as
// minimising the angle to the modularity vector.
TEST(Louvain, ModularityArgmaxIsNearestClustering) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_graph(rng, 6, 0.5);
    if (g.edge_count() == 0) continue;
    for (NullModel model : {NullModel::kErdosRenyi, NullModel::kConfiguration}) {
      const PairVector q = modularity_vector(g, model, 1.0);
      double best_q = -std::numeric_limits<double>::infinity();
      double best_angle = std::numeric_limits<double>::infinity();
      for_each_partition(6, [&](const std::vector<int>& labels) {
        const Clustering c(labels);
        best_q = std::max(best_q, modularity_value(c, g, model, 1.0));
        best_angle = std::min(best_angle, angular_distance(q, c));
      });
      for_each_partition(6, [&](const std::vector<int>& labels) {
        const Clustering c(labels);
        const bool is_max = modularity_value(c, g, model, 1.0) > best_q - 1e-12;
        const bool is_nearest = angular_distance(q, c) < best_angle + 1e-9;
        EXPECT_EQ(is_max, is_nearest);
      });
      const Clustering exact = exact_project(q);
      EXPECT_NEAR(modularity_value(exact, g, model, 1.0), best_q, 1e-12);
    }
  }
}

TEST(Louvain, ModularityValueOracle) {
  std::mt19937_64 rng(11);
  const Graph g = random_graph(rng, 20, 0.2);
  const Clustering c = testing::random_clustering(rng, 20, 4);
  const PairVector p = null_model_vector(g, NullModel::kConfiguration);
  double total = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (c.label(i) != c.label(j)) continue;
      total += (g.has_edge(i, j) ? 1.0 : 0.0) - 1.2 * p.coordinate(i, j);
    }
  }
  EXPECT_NEAR(modularity_value(c, g, NullModel::kConfiguration, 1.2),
              total / static_cast<double>(g.edge_count()), 1e-12);
}

TEST(Louvain, Errors) {
  const Graph empty = Graph::from_edges(4, std::vector<std::pair<int, int>>{});
  EXPECT_THROW(modularity_value(Clustering::whole(4), empty, NullModel::kErdosRenyi, 1.0),
               DataError);
  EXPECT_THROW(exact_project(PairVector::uniform(kExactProjectMaxNodes + 1, 1.0)), DataError);
  EXPECT_EQ(exact_project(PairVector::uniform(kExactProjectMaxNodes, -1.0)),
            Clustering::singletons(kExactProjectMaxNodes));
}

}  // namespace
}  // namespace hypercd
