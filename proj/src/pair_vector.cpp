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

#include "hypercd/pair_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hypercd/error.hpp"

namespace hypercd {
namespace {

constexpr double kPoleTolerance = 1e-12;

bool pair_less(const PairEntry& a, const PairEntry& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

bool same_pair(const PairEntry& a, const PairEntry& b) {
  return a.i == b.i && a.j == b.j;
}

void check_same_space(const PairVector& x, const PairVector& y) {
  if (x.n() != y.n()) {
    throw DimensionError("pair vectors on " + std::to_string(x.n()) + " and " +
                         std::to_string(y.n()) + " vertices");
  }
}

// sum_{i<j} c(i) c(j) for c = a * b elementwise.
double kernel_pair_sum(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  double squares = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double c = a[i] * b[i];
    total += c;
    squares += c * c;
  }
  return 0.5 * (total * total - squares);
}

double sparse_against_kernels(std::span<const PairEntry> sparse,
                              std::span<const ProductKernel> kernels,
                              bool skip_uniform) {
  double total = 0.0;
  for (const ProductKernel& k : kernels) {
    if (skip_uniform && k.is_uniform()) continue;
    const auto a = k.attribute();
    double partial = 0.0;
    for (const PairEntry& e : sparse) partial += e.value * a[e.i] * a[e.j];
    total += k.coefficient() * partial;
  }
  return total;
}

double inner_impl(const PairVector& x, const PairVector& y, bool skip_x,
                  bool skip_y) {
  check_same_space(x, y);
  double total = 0.0;

  const auto xs = x.sparse();
  const auto ys = y.sparse();
  size_t a = 0;
  size_t b = 0;
  while (a < xs.size() && b < ys.size()) {
    if (same_pair(xs[a], ys[b])) {
      total += xs[a].value * ys[b].value;
      ++a;
      ++b;
    } else if (pair_less(xs[a], ys[b])) {
      ++a;
    } else {
      ++b;
    }
  }

  total += sparse_against_kernels(xs, y.kernels(), skip_y);
  total += sparse_against_kernels(ys, x.kernels(), skip_x);

  for (const ProductKernel& kx : x.kernels()) {
    if (skip_x && kx.is_uniform()) continue;
    for (const ProductKernel& ky : y.kernels()) {
      if (skip_y && ky.is_uniform()) continue;
      total += kx.coefficient() * ky.coefficient() *
               kernel_pair_sum(kx.attribute(), ky.attribute());
    }
  }
  return total;
}

double sum_impl(const PairVector& x, bool skip_uniform) {
  double total = 0.0;
  for (const PairEntry& e : x.sparse()) total += e.value;
  for (const ProductKernel& k : x.kernels()) {
    if (skip_uniform && k.is_uniform()) continue;
    double s = 0.0;
    double sq = 0.0;
    for (double v : k.attribute()) {
      s += v;
      sq += v * v;
    }
    total += k.coefficient() * 0.5 * (s * s - sq);
  }
  return total;
}

double nonzero_norm(const PairVector& x, const char* what) {
  const double nx = norm(x);
  if (!(nx > 0.0)) throw DomainError(std::string(what) + ": zero vector");
  return nx;
}

}  // namespace

int64_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<int64_t>(n) * (n - 1) / 2;
}

int64_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs preceding row i: sum_{r<i} (n - 1 - r).
  const int64_t before = static_cast<int64_t>(i) * (2 * static_cast<int64_t>(n) - i - 1) / 2;
  return before + (j - i - 1);
}

ProductKernel::ProductKernel(double coefficient, std::vector<double> attribute)
    : coefficient_(coefficient),
      attribute_(std::move(attribute)),
      uniform_(std::all_of(attribute_.begin(), attribute_.end(),
                           [](double v) { return v == 1.0; })) {}

ProductKernel ProductKernel::uniform(int n, double coefficient) {
  return ProductKernel(coefficient, std::vector<double>(n, 1.0));
}

PairVector::PairVector(int n) : n_(n) {
  if (n < 0) throw DataError("negative vertex count");
}

PairVector::PairVector(int n, std::vector<PairEntry> sparse,
                       std::vector<ProductKernel> kernels)
    : n_(n), sparse_(std::move(sparse)), kernels_(std::move(kernels)) {
  if (n < 0) throw DataError("negative vertex count");
  for (const PairEntry& e : sparse_) {
    if (!(0 <= e.i && e.i < e.j && e.j < n_)) {
      throw DataError("sparse key (" + std::to_string(e.i) + ", " +
                      std::to_string(e.j) + ") outside 0 <= i < j < " +
                      std::to_string(n_));
    }
  }
  if (!std::is_sorted(sparse_.begin(), sparse_.end(), pair_less)) {
    std::sort(sparse_.begin(), sparse_.end(), pair_less);
  }
  for (size_t k = 1; k < sparse_.size(); ++k) {
    if (same_pair(sparse_[k - 1], sparse_[k])) {
      throw DataError("duplicate sparse key (" + std::to_string(sparse_[k].i) +
                      ", " + std::to_string(sparse_[k].j) + ")");
    }
  }
  for (const ProductKernel& k : kernels_) {
    if (k.size() != n_) {
      throw DataError("kernel attribute of length " + std::to_string(k.size()) +
                      " on " + std::to_string(n_) + " vertices");
    }
  }
}

PairVector PairVector::uniform(int n, double value) {
  return PairVector(n, {}, {ProductKernel::uniform(n, value)});
}

double PairVector::coordinate(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw DataError("no pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (i > j) std::swap(i, j);
  double value = 0.0;
  const PairEntry key{i, j, 0.0};
  auto it = std::lower_bound(sparse_.begin(), sparse_.end(), key, pair_less);
  if (it != sparse_.end() && same_pair(*it, key)) value += it->value;
  for (const ProductKernel& k : kernels_) {
    value += k.coefficient() * k.attribute()[i] * k.attribute()[j];
  }
  return value;
}

std::vector<double> PairVector::to_dense() const {
  std::vector<double> dense(static_cast<size_t>(dimension()), 0.0);
  for (const PairEntry& e : sparse_) dense[pair_index(n_, e.i, e.j)] += e.value;
  for (const ProductKernel& k : kernels_) {
    const auto a = k.attribute();
    size_t p = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) dense[p++] += k.coefficient() * a[i] * a[j];
    }
  }
  return dense;
}

PairVector& PairVector::add_uniform(double c) {
  for (ProductKernel& k : kernels_) {
    if (k.is_uniform()) {
      k.coefficient_ += c;
      return *this;
    }
  }
  kernels_.push_back(ProductKernel::uniform(n_, c));
  return *this;
}

PairVector PairVector::without_uniform() const {
  PairVector out(n_);
  out.sparse_ = sparse_;
  for (const ProductKernel& k : kernels_) {
    if (!k.is_uniform()) out.kernels_.push_back(k);
  }
  return out;
}

PairVector& PairVector::operator*=(double s) {
  if (s == 0.0) {
    sparse_.clear();
    kernels_.clear();
    return *this;
  }
  for (PairEntry& e : sparse_) e.value *= s;
  for (ProductKernel& k : kernels_) k.coefficient_ *= s;
  return *this;
}

PairVector& PairVector::operator+=(const PairVector& other) {
  check_same_space(*this, other);
  std::vector<PairEntry> merged;
  merged.reserve(sparse_.size() + other.sparse_.size());
  size_t a = 0;
  size_t b = 0;
  auto emit = [&merged](const PairEntry& e) {
    if (e.value != 0.0) merged.push_back(e);
  };
  while (a < sparse_.size() || b < other.sparse_.size()) {
    if (b == other.sparse_.size() ||
        (a < sparse_.size() && pair_less(sparse_[a], other.sparse_[b]))) {
      emit(sparse_[a++]);
    } else if (a == sparse_.size() || pair_less(other.sparse_[b], sparse_[a])) {
      emit(other.sparse_[b++]);
    } else {
      emit({sparse_[a].i, sparse_[a].j, sparse_[a].value + other.sparse_[b].value});
      ++a;
      ++b;
    }
  }
  sparse_ = std::move(merged);
  for (const ProductKernel& k : other.kernels_) {
    if (k.is_uniform()) {
      add_uniform(k.coefficient());
    } else {
      kernels_.push_back(k);
    }
  }
  return *this;
}

PairVector& PairVector::operator-=(const PairVector& other) {
  return *this += -1.0 * other;
}

double inner(const PairVector& x, const PairVector& y) {
  return inner_impl(x, y, false, false);
}

double sum(const PairVector& x) { return sum_impl(x, false); }

double norm(const PairVector& x) {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

double centered_inner(const PairVector& x, const PairVector& y) {
  check_same_space(x, y);
  const double n_pairs = static_cast<double>(x.dimension());
  if (n_pairs == 0.0) return 0.0;
  return inner_impl(x, y, true, true) -
         sum_impl(x, true) * sum_impl(y, true) / n_pairs;
}

double centered_norm(const PairVector& x) {
  return std::sqrt(std::max(0.0, centered_inner(x, x)));
}

GeometrySummary summarize(const PairVector& x) {
  return {sum(x), norm(x), latitude(x)};
}

Pole pole_of(const PairVector& x) {
  const double nx = nonzero_norm(x, "pole_of");
  if (centered_norm(x) > kPoleTolerance * nx) return Pole::kNone;
  return sum(x) > 0.0 ? Pole::kCoarse : Pole::kFine;
}

double pole_convention(Pole a, Pole b) {
  if (a == Pole::kNone || b == Pole::kNone) return std::numbers::pi / 2;
  return a == b ? 0.0 : std::numbers::pi;
}

double safe_acos(double cosine) {
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double angular_distance(const PairVector& x, const PairVector& y) {
  check_same_space(x, y);
  const double nx = nonzero_norm(x, "angular_distance");
  const double ny = nonzero_norm(y, "angular_distance");
  const Pole px = pole_of(x);
  const Pole py = pole_of(y);
  if (px != Pole::kNone && py != Pole::kNone) return pole_convention(px, py);
  return safe_acos(inner(x, y) / (nx * ny));
}

double correlation_distance(const PairVector& x, const PairVector& y) {
  check_same_space(x, y);
  const Pole px = pole_of(x);
  const Pole py = pole_of(y);
  if (px != Pole::kNone || py != Pole::kNone) return pole_convention(px, py);
  return safe_acos(centered_inner(x, y) / (centered_norm(x) * centered_norm(y)));
}

double meridian_angle(const PairVector& x, const PairVector& y) {
  check_same_space(x, y);
  const Pole px = pole_of(x);
  const Pole py = pole_of(y);
  if (px != Pole::kNone || py != Pole::kNone) return pole_convention(px, py);

  const double cos_xy = std::cos(angular_distance(x, y));
  const double cos_lx = std::cos(latitude(x));
  const double cos_ly = std::cos(latitude(y));
  const double sin_lx = std::sin(latitude(x));
  const double sin_ly = std::sin(latitude(y));
  if (sin_lx == 0.0 || sin_ly == 0.0) return std::numbers::pi / 2;
  return safe_acos((cos_xy - cos_lx * cos_ly) / (sin_lx * sin_ly));
}

double latitude(const PairVector& x) {
  const double nx = nonzero_norm(x, "latitude");
  switch (pole_of(x)) {
    case Pole::kFine:
      return 0.0;
    case Pole::kCoarse:
      return std::numbers::pi;
    case Pole::kNone:
      break;
  }
  const double root_n = std::sqrt(static_cast<double>(x.dimension()));
  return safe_acos(-sum(x) / (root_n * nx));
}

PairVector hypersphere_project(const PairVector& x) {
  const double nx = nonzero_norm(x, "hypersphere_project");
  return (std::sqrt(static_cast<double>(x.dimension())) / nx) * x;
}

PairVector parallel_project(const PairVector& x, double lambda) {
  if (!(lambda >= 0.0 && lambda <= std::numbers::pi)) {
    throw DomainError("parallel_project: latitude outside [0, pi]");
  }
  if (pole_of(x) != Pole::kNone) {
    throw DomainError("parallel_project: vector on a pole has no meridian");
  }
  const int n = x.n();
  if (lambda == 0.0) return PairVector::uniform(n, -1.0);
  if (lambda == std::numbers::pi) return PairVector::uniform(n, 1.0);

  const double n_pairs = static_cast<double>(x.dimension());
  PairVector off_pole = x.without_uniform();
  const double scale = std::sin(lambda) * std::sqrt(n_pairs) / centered_norm(off_pole);
  const double shift = -scale * sum(off_pole) / n_pairs - std::cos(lambda);
  off_pole *= scale;
  off_pole.add_uniform(shift);
  return off_pole;
}

Concentration concentration_approx(double s, int64_t n) {
  if (n < 2 || !(s >= 1.0 && s <= static_cast<double>(n))) {
    throw DomainError("concentration_approx: need 1 <= s <= n and n >= 2");
  }
  const double ratio = (s - 1.0) / static_cast<double>(n - 1);
  return {safe_acos(1.0 - 2.0 * ratio), 2.0 * std::sqrt(ratio)};
}

}  // namespace hypercd
