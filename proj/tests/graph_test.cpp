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

#include "hypercd/graph.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "hypercd/clustering.hpp"
#include "hypercd/error.hpp"
#include "hypercd/generators.hpp"
#include "oracles.hpp"

namespace hypercd {
namespace {

using testing::count_triangles;
using testing::random_graph;

constexpr double kPi = std::numbers::pi;

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("hypercd_" + name);
  std::ofstream(path) << content;
  return path.string();
}

Graph path3() { return Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}); }
Graph triangle() {
  return Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
}

TEST(Graph, FromEdgesDropsLoopsAndDuplicates) {
  const Graph g = Graph::from_edges(
      4, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 2}, {1, 3}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(2, 2));
  EXPECT_EQ(g.degree(1), 2);
  double total = 0.0;
  for (double d : g.degrees()) total += d;
  EXPECT_EQ(total, 2.0 * g.edge_count());
  EXPECT_THROW(Graph::from_edges(2, std::vector<std::pair<int, int>>{{0, 2}}), DataError);
}

TEST(Graph, LoadEdgeList) {
  const std::string path = write_temp(
      "edges.txt", "# comment\n% other comment\n\nb a\na b\nc c\nb c 3.5\nd a\n");
  const LoadedGraph loaded = load_edge_list(path);
  EXPECT_EQ(loaded.graph.n(), 4);
  EXPECT_EQ(loaded.graph.edge_count(), 3);
  EXPECT_EQ(loaded.report.edge_lines, 5);
  EXPECT_EQ(loaded.report.self_loops, 1);
  EXPECT_EQ(loaded.report.duplicates, 1);
  EXPECT_EQ(loaded.graph.labels()[0], "b");
  EXPECT_EQ(*loaded.graph.index_of("d"), 3);
  EXPECT_FALSE(loaded.graph.index_of("zz").has_value());
  std::filesystem::remove(path);
}

TEST(Graph, NumericLabelsKeepNumericOrder) {
  const std::string path = write_temp("numeric.txt", "10 2\n2 0\n");
  const Graph g = load_edge_list(path).graph;
  EXPECT_EQ(std::vector<std::string>(g.labels().begin(), g.labels().end()),
            (std::vector<std::string>{"0", "2", "10"}));
  EXPECT_TRUE(g.has_edge(1, 2));
  std::filesystem::remove(path);
}

TEST(Graph, CsvFormat) {
  const std::string path = write_temp("edges.csv", "x, y\ny,z,1\n");
  EXPECT_EQ(edge_list_format_for(path), EdgeListFormat::kCsv);
  EXPECT_EQ(load_edge_list(path, EdgeListFormat::kCsv).graph.edge_count(), 2);
  std::filesystem::remove(path);
}

TEST(Graph, LoadErrors) {
  const std::string empty = write_temp("empty.txt", "# nothing here\n");
  try {
    load_edge_list(empty);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("no edges"), std::string::npos);
  }
  const std::string bad = write_temp("bad.txt", "0 1\n2\n");
  try {
    load_edge_list(bad);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
  }
  EXPECT_THROW(load_edge_list("/nonexistent/hypercd.edges"), DataError);
  std::filesystem::remove(empty);
  std::filesystem::remove(bad);
}

TEST(Graph, WithVerticesAppendsIsolated) {
  const Graph g = path3();
  const std::vector<std::string> labels{"2", "7", "0", "8"};
  const Graph h = with_vertices(g, labels);
  EXPECT_EQ(h.n(), 5);
  EXPECT_EQ(h.edge_count(), 2);
  EXPECT_EQ(*h.index_of("7"), 3);
  EXPECT_EQ(h.degree(4), 0);
}

TEST(Graph, Manifest) {
  const auto dir = std::filesystem::temp_directory_path() / "hypercd_manifest";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "datasets.manifest")
      << "# registered datasets\nkarate.graph = k.edges\nkarate.truth = /abs/k.truth\n";
  const auto entries = read_manifest((dir / "datasets.manifest").string());
  ASSERT_EQ(entries.count("karate"), 1u);
  EXPECT_EQ(entries.at("karate").graph_path, (dir / "k.edges").string());
  EXPECT_EQ(entries.at("karate").truth_path, "/abs/k.truth");
  std::ofstream(dir / "bad.manifest") << "karate.weights = x\n";
  EXPECT_THROW(read_manifest((dir / "bad.manifest").string()), DataError);
  std::filesystem::remove_all(dir);
}

TEST(EdgeVector, SignsAndLatitude) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 3 + trial, 0.3);
    const PairVector e = edge_vector(g);
    std::vector<std::pair<int, int>> recovered;
    for (int i = 0; i < g.n(); ++i) {
      for (int j = i + 1; j < g.n(); ++j) {
        const double v = e.coordinate(i, j);
        EXPECT_EQ(v, g.has_edge(i, j) ? 1.0 : -1.0);
        if (v > 0) recovered.emplace_back(i, j);
      }
    }
    EXPECT_EQ(recovered, g.edges());
    const double n_pairs = static_cast<double>(pair_count(g.n()));
    EXPECT_NEAR(latitude(e), std::acos(1.0 - 2.0 * g.edge_count() / n_pairs), 1e-12);
  }
  const Graph empty = Graph::from_edges(4, std::vector<std::pair<int, int>>{});
  for (double v : edge_vector(empty).to_dense()) EXPECT_EQ(v, -1.0);
}

TEST(WedgeVector, SmallGraphs) {
  EXPECT_EQ(wedge_vector(triangle()).to_dense(), (std::vector<double>{1.0, 1.0, 1.0}));
  EXPECT_EQ(wedge_vector(path3()).to_dense(), (std::vector<double>{0.0, 1.0, 0.0}));
  const Graph star =
      Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(sum(wedge_vector(star)), 6.0);
}

TEST(WedgeVector, CommonNeighbourOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 4 + trial, 0.35);
    const PairVector w = wedge_vector(g);
    double wedges = 0.0;
    for (int v = 0; v < g.n(); ++v) wedges += g.degree(v) * (g.degree(v) - 1) / 2.0;
    EXPECT_EQ(sum(w), wedges);
    for (int i = 0; i < g.n(); ++i) {
      for (int j = i + 1; j < g.n(); ++j) {
        int common = 0;
        for (int k = 0; k < g.n(); ++k) common += g.has_edge(i, k) && g.has_edge(j, k);
        EXPECT_EQ(w.coordinate(i, j), common);
      }
    }
    if (wedges > 0) {
      EXPECT_GE(latitude(w), kPi / 2 - 1e-12);
    }
  }
}

TEST(GlobalClustering, TrianglesAndTrees) {
  EXPECT_NEAR(*global_clustering(triangle()), 1.0, 1e-12);
  EXPECT_NEAR(*global_clustering(path3()), 0.0, 1e-12);
  const Graph two_cliques = Graph::from_edges(
      7, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 5},
                                          {4, 6}, {5, 6}});
  EXPECT_NEAR(*global_clustering(two_cliques), 1.0, 1e-12);
  const Graph matching = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  EXPECT_FALSE(global_clustering(matching).has_value());
}

TEST(GlobalClustering, MatchesTriangleCount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 28, 0.1 + 0.5 * (trial % 7) / 7.0);
    const auto counts = count_triangles(g);
    const auto gc = global_clustering(g);
    ASSERT_EQ(gc.has_value(), counts.wedges > 0);
    if (gc) {
      EXPECT_NEAR(*gc, 3.0 * counts.triangles / counts.wedges, 1e-12);
    }
  }
}

TEST(RingOfCliques, DistanceToEdgeVector) {
  for (auto [k, s] : std::vector<std::pair<int, int>>{{3, 3}, {10, 5}, {50, 4}}) {
    const GeneratedGraph ring = ring_of_cliques({k, s});
    const double n_pairs = static_cast<double>(pair_count(ring.graph.n()));
    EXPECT_NEAR(angular_distance(edge_vector(ring.graph), to_pair_vector(ring.truth)),
                std::acos(1.0 - 2.0 * k / n_pairs), 1e-12);
  }
}

}  // namespace
}  // namespace hypercd
