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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercd/pair_vector.hpp"

namespace hypercd {

// A partition of {0, ..., n-1}. Labels are canonical: clusters are numbered
// 0, 1, 2, ... in order of their first member, so two clusterings are equal
// exactly when their label vectors are.
class Clustering {
 public:
  Clustering() = default;
  // Arbitrary non-negative cluster identifiers; relabelled canonically.
  explicit Clustering(std::span<const int> labels);
  explicit Clustering(const std::vector<int>& labels)
      : Clustering(std::span<const int>(labels)) {}

  static Clustering singletons(int n);
  static Clustering whole(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  int cluster_count() const { return static_cast<int>(sizes_.size()); }
  int label(int node) const { return labels_[node]; }
  std::span<const int> labels() const { return labels_; }
  std::span<const int> cluster_sizes() const { return sizes_; }
  // m_C, the number of intra-cluster pairs.
  int64_t intra_pairs() const { return intra_pairs_; }

  std::vector<std::vector<int>> clusters() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<int> labels_;
  std::vector<int> sizes_;
  int64_t intra_pairs_ = 0;
};

// Sufficient statistics of every pair-counting index.
struct PairCounts {
  int64_t pairs = 0;       // N
  int64_t intra_t = 0;     // m_T
  int64_t intra_c = 0;     // m_C
  int64_t intra_both = 0;  // m_TC

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

// b(C): +1 on intra-cluster pairs, -1 elsewhere. Stored as the uniform
// kernel -1 plus sparse +2 on the intra-cluster pairs.
PairVector to_pair_vector(const Clustering& c);

// Contingency-table count, O(n) expected. Throws DimensionError on a size
// mismatch.
PairCounts pair_counts(const Clustering& t, const Clustering& c);

// Correlation coefficient of the two binary pair vectors; nullopt when
// either clustering is a pole (m in {0, N}) and the ratio is undefined.
std::optional<double> correlation_coefficient(const PairCounts& counts);
double rand_index(const PairCounts& counts);
// nullopt when both clusterings are all singletons.
std::optional<double> jaccard_index(const PairCounts& counts);
double hubert_index(const PairCounts& counts);

Pole pole_of(const Clustering& c);

// arccos of the correlation coefficient, with the pole conventions of the
// geometry layer when either side is a pole.
double correlation_distance(const Clustering& t, const Clustering& c);

// arccos(1 - 2 m_C / N). Requires at least two nodes.
double clustering_latitude(const Clustering& c);

// <q, b(C)> without materialising b(C): -<q, 1> + 2 * (sum of q over the
// intra-cluster pairs). O(|sparse| + n K).
double inner(const PairVector& q, const Clustering& c);
// Sum of q_ij over the intra-cluster pairs of c.
double intra_cluster_sum(const PairVector& q, const Clustering& c);

// Distances between a vector and b(C), evaluated through inner(q, C).
double angular_distance(const PairVector& q, const Clustering& c);
double correlation_distance(const PairVector& q, const Clustering& c);

// The clustering whose vector is x, or nullopt when x is not a transitive
// +-1 vector. Expands x densely, so meant for moderate n.
std::optional<Clustering> decode_clustering_vector(const PairVector& x);
bool is_clustering_vector(const PairVector& x);

// Clustering files hold one "node_id<TAB>cluster_id" line per node.
// Nodes are resolved against `vocabulary` (graph labels, by index); unknown
// or repeated nodes and nodes without a line raise DataError.
Clustering read_clustering(const std::string& path,
                           std::span<const std::string> vocabulary);
void write_clustering(const std::string& path, const Clustering& c,
                      std::span<const std::string> vocabulary);

// A clustering file read on its own: node ids in file order.
struct LabelledClustering {
  std::vector<std::string> nodes;
  Clustering clustering;
};
LabelledClustering read_labelled_clustering(const std::string& path);

}  // namespace hypercd
