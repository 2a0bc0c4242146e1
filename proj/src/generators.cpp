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

#include "hypercd/generators.hpp"

#include <utility>
#include <vector>

#include "hypercd/error.hpp"
#include "hypercd/random.hpp"

namespace hypercd {
namespace {

double probability(double degree, int partners, const char* what) {
  if (!(degree >= 0.0)) throw DataError(std::string(what) + " degree must be non-negative");
  if (degree == 0.0) return 0.0;
  const double p = partners > 0 ? degree / partners : 2.0;
  if (p > 1.0) {
    throw DataError(std::string(what) + " degree " + std::to_string(degree) +
                    " exceeds the available partners");
  }
  return p;
}

void check(const PlantedPartitionSpec& spec) {
  if (spec.communities < 1 || spec.size < 1) {
    throw DataError("planted partition needs at least one community of one vertex");
  }
}

}  // namespace

GeneratedGraph ring_of_cliques(const RingOfCliquesSpec& spec) {
  if (spec.k < 3 || spec.s < 2) throw DataError("ring of cliques needs k >= 3 and s >= 2");
  const int n = spec.k * spec.s;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> labels(n);
  for (int t = 0; t < spec.k; ++t) {
    const int base = t * spec.s;
    for (int a = 0; a < spec.s; ++a) {
      labels[base + a] = t;
      for (int b = a + 1; b < spec.s; ++b) edges.emplace_back(base + a, base + b);
    }
    edges.emplace_back(base, ((t + 1) % spec.k) * spec.s + 1);
  }
  return {Graph::from_edges(n, edges), Clustering(labels)};
}

double intra_probability(const PlantedPartitionSpec& spec) {
  check(spec);
  return probability(spec.deg_in, spec.size - 1, "intra-community");
}

double inter_probability(const PlantedPartitionSpec& spec) {
  check(spec);
  return probability(spec.deg_out, (spec.communities - 1) * spec.size, "inter-community");
}

GeneratedGraph planted_partition(const PlantedPartitionSpec& spec) {
  const double p_in = intra_probability(spec);
  const double p_out = inter_probability(spec);
  const int n = spec.communities * spec.size;
  Rng rng(spec.seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i / spec.size;
    for (int j = i + 1; j < n; ++j) {
      const double p = (i / spec.size == j / spec.size) ? p_in : p_out;
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  return {Graph::from_edges(n, edges), Clustering(labels)};
}

}  // namespace hypercd
