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

// Structured vectors in the vertex-pair space R^N, N = n(n-1)/2, and the
// hyperspherical geometry on them.
//
// A PairVector is stored as a sparse part plus a short list of rank-one
// product kernels, so the uniform vector, degree-product null models and
// aggregated super-node weights never need N dense coordinates:
//
//   x_ij = S_ij + sum_k coefficient_k * a_k(i) * a_k(j),   i < j.

#include <cstdint>
#include <span>
#include <vector>

namespace hypercd {

// Number of unordered vertex pairs, n choose 2.
int64_t pair_count(int n);

// Position of pair (i, j), i < j, in lexicographic pair order.
int64_t pair_index(int n, int i, int j);

struct PairEntry {
  int i;
  int j;
  double value;
};

// coefficient * a(i) * a(j) on every pair ij.
class ProductKernel {
 public:
  ProductKernel(double coefficient, std::vector<double> attribute);

  // coefficient * 1.
  static ProductKernel uniform(int n, double coefficient);

  double coefficient() const { return coefficient_; }
  std::span<const double> attribute() const { return attribute_; }
  int size() const { return static_cast<int>(attribute_.size()); }
  // True when every attribute entry is exactly 1.
  bool is_uniform() const { return uniform_; }

 private:
  friend class PairVector;

  double coefficient_;
  std::vector<double> attribute_;
  bool uniform_;
};

class PairVector {
 public:
  // The zero vector on n vertices.
  explicit PairVector(int n = 0);

  // Throws DataError if a sparse key is not 0 <= i < j < n, a key repeats,
  // or a kernel attribute has the wrong length.
  PairVector(int n, std::vector<PairEntry> sparse,
             std::vector<ProductKernel> kernels = {});

  // value * 1.
  static PairVector uniform(int n, double value);

  int n() const { return n_; }
  // N, the dimension of the pair space.
  int64_t dimension() const { return pair_count(n_); }

  // Sorted by (i, j).
  std::span<const PairEntry> sparse() const { return sparse_; }
  std::span<const ProductKernel> kernels() const { return kernels_; }

  double coordinate(int i, int j) const;

  // All N coordinates in lexicographic pair order. Intended for small n.
  std::vector<double> to_dense() const;

  // Adds c * 1, folding it into an existing uniform kernel when present.
  PairVector& add_uniform(double c);

  // The same vector with every uniform kernel removed. Centered quantities
  // are invariant under this, and dropping the constant first avoids
  // cancellation when x is close to a pole.
  PairVector without_uniform() const;

  PairVector& operator*=(double s);
  PairVector& operator+=(const PairVector& other);
  PairVector& operator-=(const PairVector& other);

  friend PairVector operator+(PairVector a, const PairVector& b) {
    a += b;
    return a;
  }
  friend PairVector operator-(PairVector a, const PairVector& b) {
    a -= b;
    return a;
  }
  friend PairVector operator*(double s, PairVector a) {
    a *= s;
    return a;
  }
  friend PairVector operator-(PairVector a) {
    a *= -1.0;
    return a;
  }

 private:
  int n_;
  std::vector<PairEntry> sparse_;
  std::vector<ProductKernel> kernels_;
};

// <x, y>. Throws DimensionError when x.n() != y.n().
double inner(const PairVector& x, const PairVector& y);
// <x, 1>.
double sum(const PairVector& x);
double norm(const PairVector& x);

// <x - mean(x) 1, y - mean(y) 1>.
double centered_inner(const PairVector& x, const PairVector& y);
double centered_norm(const PairVector& x);

struct GeometrySummary {
  double inner_with_ones;
  double norm;
  double latitude;
};

GeometrySummary summarize(const PairVector& x);

enum class Pole { kNone, kFine, kCoarse };

// A vector is on a pole when its centered norm is at most 1e-12 of its norm.
// Throws DomainError for the zero vector.
Pole pole_of(const PairVector& x);

// Correlation distance / meridian angle when at least one side is a pole:
// 0 on the same pole, pi on opposite poles, pi/2 otherwise.
double pole_convention(Pole a, Pole b);

// arccos with its argument clamped to [-1, 1].
double safe_acos(double cosine);

double angular_distance(const PairVector& x, const PairVector& y);
double correlation_distance(const PairVector& x, const PairVector& y);
// Angle at the fine pole between the meridians of x and y, evaluated with
// the hyperspherical cosine rule.
double meridian_angle(const PairVector& x, const PairVector& y);
// Angular distance to the fine pole -1.
double latitude(const PairVector& x);

// Rescales x onto the hypersphere of radius sqrt(N).
PairVector hypersphere_project(const PairVector& x);

// The point on the meridian of x with latitude `lambda` (radians, [0, pi]).
// lambda = 0 and lambda = pi return the fine and coarse pole exactly.
// Throws DomainError when x is a multiple of 1.
PairVector parallel_project(const PairVector& x, double lambda);

struct Concentration {
  double exact;   // arccos(1 - 2 (s - 1) / (n - 1))
  double approx;  // 2 sqrt((s - 1) / (n - 1))
};

// Latitude of a community structure with expected community size s.
Concentration concentration_approx(double s, int64_t n);

}  // namespace hypercd
