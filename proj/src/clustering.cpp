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

#include "hypercd/clustering.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hypercd/error.hpp"

namespace hypercd {
namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

// Two whitespace-separated tokens per non-blank, non-comment line.
template <typename Fn>
void for_each_assignment(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open clustering file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string node;
    std::string cluster;
    std::string extra;
    if (!(tokens >> node) || node[0] == '#') continue;
    if (!(tokens >> cluster) || (tokens >> extra)) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected \"node_id<TAB>cluster_id\"");
    }
    fn(node, cluster, line_no);
  }
}

}  // namespace

Clustering::Clustering(std::span<const int> labels) {
  labels_.reserve(labels.size());
  std::unordered_map<int, int> canonical;
  for (int raw : labels) {
    if (raw < 0) throw DataError("negative cluster identifier");
    auto [it, inserted] = canonical.try_emplace(raw, static_cast<int>(sizes_.size()));
    if (inserted) sizes_.push_back(0);
    ++sizes_[it->second];
    labels_.push_back(it->second);
  }
  for (int s : sizes_) intra_pairs_ += static_cast<int64_t>(s) * (s - 1) / 2;
}

Clustering Clustering::singletons(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Clustering(labels);
}

Clustering Clustering::whole(int n) { return Clustering(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> Clustering::clusters() const {
  std::vector<std::vector<int>> out(sizes_.size());
  for (size_t c = 0; c < sizes_.size(); ++c) out[c].reserve(sizes_[c]);
  for (int v = 0; v < size(); ++v) out[labels_[v]].push_back(v);
  return out;
}

PairVector to_pair_vector(const Clustering& c) {
  std::vector<PairEntry> intra;
  intra.reserve(static_cast<size_t>(c.intra_pairs()));
  for (const auto& members : c.clusters()) {
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        intra.push_back({members[a], members[b], 2.0});
      }
    }
  }
  return PairVector(c.size(), std::move(intra),
                    {ProductKernel::uniform(c.size(), -1.0)});
}

PairCounts pair_counts(const Clustering& t, const Clustering& c) {
  if (t.size() != c.size()) {
    throw DimensionError("clusterings of " + std::to_string(t.size()) + " and " +
                         std::to_string(c.size()) + " nodes");
  }
  std::unordered_map<int64_t, int64_t> joint;
  const int64_t stride = c.cluster_count();
  for (int v = 0; v < t.size(); ++v) ++joint[t.label(v) * stride + c.label(v)];
  int64_t both = 0;
  for (const auto& [key, count] : joint) both += count * (count - 1) / 2;
  return {pair_count(t.size()), t.intra_pairs(), c.intra_pairs(), both};
}

std::optional<double> correlation_coefficient(const PairCounts& k) {
  const int64_t n = k.pairs;
  if (k.intra_t == 0 || k.intra_t == n || k.intra_c == 0 || k.intra_c == n) {
    return std::nullopt;
  }
  if (k.intra_both == k.intra_t && k.intra_both == k.intra_c) return 1.0;
  const double numerator =
      static_cast<double>(k.intra_both * n - k.intra_t * k.intra_c);
  const double spread_t = static_cast<double>(k.intra_t * (n - k.intra_t));
  const double spread_c = static_cast<double>(k.intra_c * (n - k.intra_c));
  return std::clamp(numerator / (std::sqrt(spread_t) * std::sqrt(spread_c)), -1.0, 1.0);
}

double rand_index(const PairCounts& k) {
  const int64_t agree = k.pairs - k.intra_t - k.intra_c + 2 * k.intra_both;
  return static_cast<double>(agree) / static_cast<double>(k.pairs);
}

std::optional<double> jaccard_index(const PairCounts& k) {
  const int64_t either = k.intra_t + k.intra_c - k.intra_both;
  if (either == 0) return std::nullopt;
  return static_cast<double>(k.intra_both) / static_cast<double>(either);
}

double hubert_index(const PairCounts& k) { return 2.0 * rand_index(k) - 1.0; }

Pole pole_of(const Clustering& c) {
  if (c.intra_pairs() == 0) return Pole::kFine;
  if (c.intra_pairs() == pair_count(c.size())) return Pole::kCoarse;
  return Pole::kNone;
}

double correlation_distance(const Clustering& t, const Clustering& c) {
  const Pole pt = pole_of(t);
  const Pole pc = pole_of(c);
  if (pt != Pole::kNone || pc != Pole::kNone) return pole_convention(pt, pc);
  return safe_acos(*correlation_coefficient(pair_counts(t, c)));
}

double clustering_latitude(const Clustering& c) {
  if (c.size() < 2) throw DomainError("clustering_latitude: fewer than two nodes");
  const double n_pairs = static_cast<double>(pair_count(c.size()));
  return safe_acos(1.0 - 2.0 * static_cast<double>(c.intra_pairs()) / n_pairs);
}

double intra_cluster_sum(const PairVector& q, const Clustering& c) {
  if (q.n() != c.size()) {
    throw DimensionError("vector on " + std::to_string(q.n()) +
                         " vertices, clustering of " + std::to_string(c.size()));
  }
  double total = 0.0;
  for (const PairEntry& e : q.sparse()) {
    if (c.label(e.i) == c.label(e.j)) total += e.value;
  }
  std::vector<double> sums(c.cluster_count());
  std::vector<double> squares(c.cluster_count());
  for (const ProductKernel& k : q.kernels()) {
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(squares.begin(), squares.end(), 0.0);
    const auto a = k.attribute();
    for (int v = 0; v < c.size(); ++v) {
      sums[c.label(v)] += a[v];
      squares[c.label(v)] += a[v] * a[v];
    }
    double within = 0.0;
    for (int b = 0; b < c.cluster_count(); ++b) {
      within += 0.5 * (sums[b] * sums[b] - squares[b]);
    }
    total += k.coefficient() * within;
  }
  return total;
}

double inner(const PairVector& q, const Clustering& c) {
  return -sum(q) + 2.0 * intra_cluster_sum(q, c);
}

double angular_distance(const PairVector& q, const Clustering& c) {
  const double nq = norm(q);
  if (!(nq > 0.0)) throw DomainError("angular_distance: zero vector");
  const double root_n = std::sqrt(static_cast<double>(q.dimension()));
  return safe_acos(inner(q, c) / (nq * root_n));
}

double correlation_distance(const PairVector& q, const Clustering& c) {
  const Pole pq = pole_of(q);
  const Pole pc = pole_of(c);
  if (pq != Pole::kNone || pc != Pole::kNone) return pole_convention(pq, pc);
  // With q' = q minus its uniform part and b = b(C):
  //   <q'_c, b_c> = 2 (intra(q') - sum(q') m_C / N),
  //   ||b_c||     = 2 sqrt(m_C (N - m_C) / N).
  const PairVector off_pole = q.without_uniform();
  const double n_pairs = static_cast<double>(q.dimension());
  const double m_c = static_cast<double>(c.intra_pairs());
  const double numerator = intra_cluster_sum(off_pole, c) - sum(off_pole) * m_c / n_pairs;
  const double b_spread = std::sqrt(m_c * (n_pairs - m_c) / n_pairs);
  return safe_acos(numerator / (centered_norm(off_pole) * b_spread));
}

std::optional<Clustering> decode_clustering_vector(const PairVector& x) {
  constexpr double kTol = 1e-9;
  const int n = x.n();
  const std::vector<double> dense = x.to_dense();
  DisjointSets sets(n);
  size_t p = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++p) {
      if (std::abs(dense[p] - 1.0) <= kTol) {
        sets.unite(i, j);
      } else if (std::abs(dense[p] + 1.0) > kTol) {
        return std::nullopt;
      }
    }
  }
  p = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++p) {
      const bool together = sets.find(i) == sets.find(j);
      if (together != (dense[p] > 0.0)) return std::nullopt;
    }
  }
  std::vector<int> roots(n);
  for (int v = 0; v < n; ++v) roots[v] = sets.find(v);
  return Clustering(roots);
}

bool is_clustering_vector(const PairVector& x) {
  return decode_clustering_vector(x).has_value();
}

Clustering read_clustering(const std::string& path,
                           std::span<const std::string> vocabulary) {
  std::unordered_map<std::string, int> index;
  for (size_t v = 0; v < vocabulary.size(); ++v) index.emplace(vocabulary[v], static_cast<int>(v));
  std::unordered_map<std::string, int> cluster_ids;
  std::vector<int> labels(vocabulary.size(), -1);
  for_each_assignment(path, [&](const std::string& node, const std::string& cluster,
                                int line_no) {
    auto it = index.find(node);
    if (it == index.end()) {
      throw DataError(path + ":" + std::to_string(line_no) + ": unknown node " + node);
    }
    if (labels[it->second] != -1) {
      throw DataError(path + ":" + std::to_string(line_no) + ": node " + node +
                      " assigned twice");
    }
    labels[it->second] =
        cluster_ids.try_emplace(cluster, static_cast<int>(cluster_ids.size())).first->second;
  });
  for (size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == -1) throw DataError(path + ": no cluster for node " + vocabulary[v]);
  }
  return Clustering(labels);
}

void write_clustering(const std::string& path, const Clustering& c,
                      std::span<const std::string> vocabulary) {
  if (vocabulary.size() != static_cast<size_t>(c.size())) {
    throw DimensionError("vocabulary does not match clustering size");
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  for (int v = 0; v < c.size(); ++v) out << vocabulary[v] << '\t' << c.label(v) << '\n';
  if (!out) throw DataError("failed writing " + path);
}

LabelledClustering read_labelled_clustering(const std::string& path) {
  LabelledClustering result;
  std::unordered_map<std::string, int> seen;
  std::unordered_map<std::string, int> cluster_ids;
  std::vector<int> labels;
  for_each_assignment(path, [&](const std::string& node, const std::string& cluster,
                                int line_no) {
    if (!seen.emplace(node, static_cast<int>(labels.size())).second) {
      throw DataError(path + ":" + std::to_string(line_no) + ": node " + node +
                      " assigned twice");
    }
    result.nodes.push_back(node);
    labels.push_back(
        cluster_ids.try_emplace(cluster, static_cast<int>(cluster_ids.size())).first->second);
  });
  result.clustering = Clustering(labels);
  return result;
}

}  // namespace hypercd
