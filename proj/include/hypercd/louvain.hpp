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
#include <vector>

#include "hypercd/clustering.hpp"
#include "hypercd/graph.hpp"
#include "hypercd/pair_vector.hpp"
#include "hypercd/queries.hpp"

namespace hypercd {

enum class VertexOrder { kAscending, kShuffle };

struct LouvainConfig {
  VertexOrder order = VertexOrder::kAscending;
  uint64_t seed = 0;      // used by kShuffle
  int max_passes = 100;   // per level
  bool aggregation = true;
  // After the levels converge, rerun vertex-level moves from the result and
  // aggregate again, until a round moves no vertex.
  bool refine = false;
};

struct LouvainResult {
  Clustering clustering;
  double objective = 0.0;  // <b(C), q>, recomputed from the final clustering
  int64_t moves = 0;
  int passes = 0;
  int levels = 0;
  // <b(C), q> as tracked incrementally at the end of every level.
  std::vector<double> level_objectives;
};

// Greedy maximisation of <b(C), q> from the singleton clustering: local
// moves with strictly positive gain, then (optionally) aggregation of
// clusters into super-nodes, until a level makes no move.
LouvainResult louvain_project(const PairVector& q, const LouvainConfig& config = {});

// A clustering maximising <b(C), q> by exhaustive search over set
// partitions in restricted-growth order, keeping the first optimum found.
// Throws DataError for n > 12.
Clustering exact_project(const PairVector& q);
inline constexpr int kExactProjectMaxNodes = 12;

// (1/m) <(1 + b(C)) / 2, (1 + e(G)) / 2 - gamma p(G)>. Throws DataError on
// an edgeless graph.
double modularity_value(const Clustering& c, const Graph& g, NullModel model, double gamma);

}  // namespace hypercd
