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

#include "hypercd/clustering.hpp"
#include "hypercd/graph.hpp"

namespace hypercd {

struct GeneratedGraph {
  Graph graph;
  Clustering truth;
};

struct RingOfCliquesSpec {
  int k = 3;  // cliques, >= 3
  int s = 3;  // clique size, >= 2
};

// Clique t holds vertices t*s .. t*s + s - 1; vertex 0 of clique t is joined
// to vertex 1 of clique t + 1 (mod k).
GeneratedGraph ring_of_cliques(const RingOfCliquesSpec& spec);

struct PlantedPartitionSpec {
  int communities = 2;
  int size = 2;
  double deg_in = 1.0;   // expected neighbours inside the own community
  double deg_out = 0.0;  // expected neighbours outside it
  uint64_t seed = 0;
};

// p_in = deg_in / (size - 1), p_out = deg_out / (n - size).
double intra_probability(const PlantedPartitionSpec& spec);
double inter_probability(const PlantedPartitionSpec& spec);

// Every pair is an edge independently with p_in or p_out. Vertex v belongs
// to community v / size. Throws DataError when a probability leaves [0, 1].
GeneratedGraph planted_partition(const PlantedPartitionSpec& spec);

}  // namespace hypercd
