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

#include "hypercd/queries.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypercd/error.hpp"
#include "hypercd/graph.hpp"
#include "oracles.hpp"

namespace hypercd {
namespace {

using testing::dense_dot;
using testing::dense_of;
using testing::random_graph;

constexpr double kPi = std::numbers::pi;

Graph path3() { return Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}); }

void expect_dense_near(const PairVector& x, const std::vector<double>& expected, double tol) {
  const auto dense = x.to_dense();
  ASSERT_EQ(dense.size(), expected.size());
  for (size_t p = 0; p < dense.size(); ++p) EXPECT_NEAR(dense[p], expected[p], tol) << "pair " << p;
}

// Determinant of the Gram matrix of the given vectors, normalised so that
// orthonormal vectors give 1.
double normalised_gram_determinant(const std::vector<std::vector<double>>& vs) {
  const size_t k = vs.size();
  std::vector<std::vector<double>> g(k, std::vector<double>(k));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) {
      g[a][b] = dense_dot(vs[a], vs[b]) / std::sqrt(dense_dot(vs[a], vs[a]) * dense_dot(vs[b], vs[b]));
    }
  }
  double det = 1.0;
  for (size_t c = 0; c < k; ++c) {
    size_t pivot = c;
    for (size_t r = c + 1; r < k; ++r) {
      if (std::abs(g[r][c]) > std::abs(g[pivot][c])) pivot = r;
    }
    if (g[pivot][c] == 0.0) return 0.0;
    if (pivot != c) {
      std::swap(g[pivot], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (size_t r = c + 1; r < k; ++r) {
      const double f = g[r][c] / g[c][c];
      for (size_t j = c; j < k; ++j) g[r][j] -= f * g[c][j];
    }
  }
  return det;
}

TEST(NullModels, PathGraph) {
  const Graph g = path3();
  expect_dense_near(null_model_vector(g, NullModel::kErdosRenyi), {2.0 / 3, 2.0 / 3, 2.0 / 3},
                    1e-15);
  EXPECT_DOUBLE_EQ(corrected_edge_count(g), 1.25);
  expect_dense_near(null_model_vector(g, NullModel::kConfiguration), {0.8, 0.4, 0.8}, 1e-15);
}

TEST(NullModels, MassOfConfigurationModel) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 5 + trial, 0.3);
    if (g.edge_count() == 0) continue;
    // Summed over pairs, d_i d_j / 2 m~ equals m.
    EXPECT_NEAR(sum(null_model_vector(g, NullModel::kConfiguration)),
                static_cast<double>(g.edge_count()), 1e-9);
    EXPECT_NEAR(sum(null_model_vector(g, NullModel::kErdosRenyi)),
                static_cast<double>(g.edge_count()), 1e-9);
  }
  const Graph empty = Graph::from_edges(3, std::vector<std::pair<int, int>>{});
  EXPECT_THROW(corrected_edge_count(empty), DataError);
}

TEST(Modularity, PathGraphVector) {
  const Graph g = path3();
  expect_dense_near(modularity_vector(g, NullModel::kErdosRenyi, 1.0), {2.0 / 3, -4.0 / 3, 2.0 / 3},
                    1e-15);
  expect_dense_near(modularity_vector(g, NullModel::kConfiguration, 1.0), {0.4, -0.8, 0.4}, 1e-15);
}

TEST(Modularity, UnitResolutionSitsOnEquator) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 6 + trial, 0.25);
    if (g.edge_count() == 0) continue;
    for (NullModel model : {NullModel::kErdosRenyi, NullModel::kConfiguration}) {
      EXPECT_NEAR(modularity_latitude(g, model, 1.0), kPi / 2, 1e-12);
      EXPECT_NEAR(latitude(modularity_vector(g, model, 1.0)), kPi / 2, 1e-9);
    }
  }
}

TEST(Modularity, PathGraphZeroResolution) {
  EXPECT_NEAR(modularity_latitude(path3(), NullModel::kErdosRenyi, 0.0) / kPi, 0.804, 0.0005);
}

TEST(Modularity, ClosedFormLatitude) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 5 + trial % 20, 0.1 + 0.05 * (trial % 9));
    if (g.edge_count() == 0) continue;
    for (NullModel model : {NullModel::kErdosRenyi, NullModel::kConfiguration}) {
      for (double gamma : {-1.5, -0.3, 0.0, 0.5, 1.0, 1.7, 4.0}) {
        const PairVector q = modularity_vector(g, model, gamma);
        if (norm(q) < 1e-9) continue;
        EXPECT_NEAR(std::cos(modularity_latitude(g, model, gamma)), std::cos(latitude(q)), 1e-10)
            << "trial " << trial << " gamma " << gamma;
      }
    }
  }
}

// Raising gamma moves q along -p, towards the fine pole.
TEST(Modularity, LatitudeDecreasesWithResolution) {
  std::mt19937_64 rng(4);
  const Graph g = random_graph(rng, 30, 0.2);
  for (NullModel model : {NullModel::kErdosRenyi, NullModel::kConfiguration}) {
    double previous = 4.0;
    for (double gamma = 0.0; gamma <= 5.0; gamma += 0.25) {
      const double l = modularity_latitude(g, model, gamma);
      EXPECT_LT(l, previous);
      previous = l;
    }
  }
}

TEST(Modularity, ErdosRenyiFamilyIsPlanar) {
  std::mt19937_64 rng(5);
  const Graph g = random_graph(rng, 12, 0.3);
  const auto e = dense_of(edge_vector(g));
  const std::vector<double> ones(e.size(), 1.0);
  for (double gamma : {0.2, 1.0, 3.0}) {
    const auto q = dense_of(modularity_vector(g, NullModel::kErdosRenyi, gamma));
    EXPECT_NEAR(normalised_gram_determinant({q, e, ones}), 0.0, 1e-12);
    const auto p = dense_of(null_model_vector(g, NullModel::kConfiguration));
    const auto qcm = dense_of(modularity_vector(g, NullModel::kConfiguration, gamma));
    EXPECT_NEAR(normalised_gram_determinant({qcm, e, ones, p}), 0.0, 1e-12);
    EXPECT_GT(normalised_gram_determinant({q, p, ones}), 1e-6);
  }
}

TEST(Modularity, ErdosRenyiShareMeridianWithEdges) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 8 + trial, 0.3);
    if (g.edge_count() == 0) continue;
    for (double gamma : {0.3, 1.0, 2.5}) {
      const PairVector q = modularity_vector(g, NullModel::kErdosRenyi, gamma);
      EXPECT_NEAR(correlation_distance(q, edge_vector(g)), 0.0, 1e-7);
    }
  }
}

TEST(Modularity, EdgeVectorAtDensityResolution) {
  std::mt19937_64 rng(7);
  const Graph g = random_graph(rng, 15, 0.3);
  const double gamma =
      static_cast<double>(pair_count(g.n())) / (2.0 * static_cast<double>(g.edge_count()));
  expect_dense_near(modularity_vector(g, NullModel::kErdosRenyi, gamma), edge_vector(g).to_dense(),
                    1e-12);
}

TEST(QueryFamily, NamesRoundTrip) {
  for (QueryFamily f : {QueryFamily::kErModularity, QueryFamily::kCmModularity,
                        QueryFamily::kEdgeMeridian, QueryFamily::kCmMeridian,
                        QueryFamily::kWedgeMeridian, QueryFamily::kLinearCombo}) {
    EXPECT_EQ(parse_query_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_query_family("modularity").has_value());
  EXPECT_TRUE(requires_latitude(QueryFamily::kWedgeMeridian));
  EXPECT_FALSE(requires_latitude(QueryFamily::kCmModularity));
}

TEST(BuildQuery, ProjectsOntoRequestedParallel) {
  std::mt19937_64 rng(8);
  const Graph g = random_graph(rng, 20, 0.25);
  for (QueryFamily f : {QueryFamily::kEdgeMeridian, QueryFamily::kCmMeridian,
                        QueryFamily::kWedgeMeridian, QueryFamily::kErModularity}) {
    for (double lambda : {0.2, kPi / 2, 2.0}) {
      QuerySpec spec;
      spec.family = f;
      spec.latitude = lambda;
      const PairVector q = build_query(g, spec);
      EXPECT_NEAR(latitude(q), lambda, 1e-9);
      EXPECT_NEAR(correlation_distance(q, meridian_base(g, spec)), 0.0, 1e-6);
    }
  }
}

TEST(BuildQuery, CmMeridianUsesResolution) {
  std::mt19937_64 rng(9);
  const Graph g = random_graph(rng, 20, 0.25);
  QuerySpec spec;
  spec.family = QueryFamily::kCmMeridian;
  spec.gamma = 2.0;
  expect_dense_near(meridian_base(g, spec),
                    modularity_vector(g, NullModel::kConfiguration, 2.0).to_dense(), 1e-12);
}

TEST(BuildQuery, Errors) {
  const Graph g = path3();
  QuerySpec spec;
  spec.family = QueryFamily::kEdgeMeridian;
  EXPECT_THROW(build_query(g, spec), DataError);
  spec.latitude = -0.1;
  EXPECT_THROW(build_query(g, spec), DataError);
  spec.latitude = 4.0;
  EXPECT_THROW(build_query(g, spec), DataError);
  spec.family = QueryFamily::kErModularity;
  spec.latitude.reset();
  spec.gamma = std::nan("");
  EXPECT_THROW(build_query(g, spec), DataError);
}

TEST(BuildQuery, LinearCombination) {
  std::mt19937_64 rng(10);
  const Graph g = random_graph(rng, 15, 0.3);
  QuerySpec spec;
  spec.family = QueryFamily::kLinearCombo;
  spec.c1 = 0.3;
  spec.c2 = 0.7;
  const auto q = dense_of(build_query(g, spec));
  const auto a = dense_of(edge_vector(g));
  const auto per = dense_of(null_model_vector(g, NullModel::kErdosRenyi));
  const auto pcm = dense_of(null_model_vector(g, NullModel::kConfiguration));
  for (size_t p = 0; p < q.size(); ++p) {
    EXPECT_NEAR(q[p], (a[p] + 1.0) - 2.0 * (0.3 * per[p] + 0.7 * pcm[p]), 1e-12);
  }
}

TEST(Heatmap, SignedCoordinates) {
  std::mt19937_64 rng(11);
  const Graph g = random_graph(rng, 20, 0.25);
  const PairVector q = modularity_vector(g, NullModel::kConfiguration, -0.8);
  const HeatmapPoint neg = heatmap_coordinates(g, q, -1);
  const HeatmapPoint pos = heatmap_coordinates(g, q, 1);
  EXPECT_LT(neg.x, 0.0);
  EXPECT_DOUBLE_EQ(neg.x, -pos.x);
  EXPECT_DOUBLE_EQ(neg.y, latitude(q));
}

TEST(Decompose, RecoversCoefficients) {
  std::mt19937_64 rng(12);
  const Graph g = random_graph(rng, 18, 0.3);
  QuerySpec spec;
  spec.family = QueryFamily::kLinearCombo;
  spec.c1 = 0.25;
  spec.c2 = 1.5;
  auto found = decompose_linear_combo(g, build_query(g, spec));
  ASSERT_TRUE(found.has_value());
  EXPECT_NEAR(found->scale, 1.0, 1e-15);
  EXPECT_NEAR(found->c1, 0.25, 1e-12);
  EXPECT_NEAR(found->c2, 1.5, 1e-12);

  found = decompose_linear_combo(g, 3.0 * modularity_vector(g, NullModel::kConfiguration, 1.0));
  ASSERT_TRUE(found.has_value());
  EXPECT_NEAR(found->scale, 3.0, 1e-15);
  EXPECT_NEAR(found->c1, 0.0, 1e-12);
  EXPECT_NEAR(found->c2, 1.0, 1e-12);

  EXPECT_FALSE(decompose_linear_combo(g, wedge_vector(g)).has_value());
}

}  // namespace
}  // namespace hypercd
