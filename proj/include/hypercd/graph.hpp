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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypercd/pair_vector.hpp"

namespace hypercd {

// Simple undirected graph on internal vertices 0..n-1, each carrying an
// external label.
class Graph {
 public:
  Graph() = default;

  // Self-loops and repeated edges (in either orientation) are dropped.
  // Labels default to the decimal vertex indices.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          std::vector<std::string> labels = {});

  int n() const { return static_cast<int>(adjacency_.size()); }
  int64_t edge_count() const { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::vector<double> degrees() const;
  bool has_edge(int u, int v) const;
  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  std::span<const std::string> labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  int64_t edge_count_ = 0;
};

enum class EdgeListFormat {
  kWhitespace,  // "u v [ignored ...]"
  kCsv,         // "u,v[,ignored ...]"
};

// kCsv for *.csv paths, kWhitespace otherwise.
EdgeListFormat edge_list_format_for(const std::string& path);

struct LoadReport {
  int64_t edge_lines = 0;
  int64_t self_loops = 0;
  int64_t duplicates = 0;  // includes the reverse of an edge already seen
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

// Lines starting with '#' or '%' are comments. When every node token is a
// non-negative integer, vertices are ordered numerically; otherwise by first
// appearance. Throws DataError with the line number on a malformed line and
// "no edges" when the file holds none.
LoadedGraph load_edge_list(const std::string& path,
                           EdgeListFormat format = EdgeListFormat::kWhitespace);

// The graph with every label in `labels` that it does not yet know appended
// as an isolated vertex.
Graph with_vertices(const Graph& g, std::span<const std::string> labels);

void write_edge_list(const std::string& path, const Graph& g);

// Datasets registered as "name.graph = path" and "name.truth = path" lines.
// Relative paths resolve against the manifest's directory.
struct DatasetEntry {
  std::string graph_path;
  std::string truth_path;
};
std::map<std::string, DatasetEntry> read_manifest(const std::string& path);

// e(G): +1 on edges, -1 elsewhere.
PairVector edge_vector(const Graph& g);

// w(G): number of common neighbours of every pair.
PairVector wedge_vector(const Graph& g);

// 3 * triangles / wedges evaluated from the angle between e(G) and w(G) and
// the latitude of w(G). nullopt when the graph has no wedge.
std::optional<double> global_clustering(const Graph& g);

}  // namespace hypercd
