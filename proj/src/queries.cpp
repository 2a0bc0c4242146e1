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

#include <cmath>
#include <numbers>

#include "hypercd/error.hpp"

namespace hypercd {
namespace {

PairVector adjacency_twice(const Graph& g) {
  std::vector<PairEntry> sparse;
  sparse.reserve(static_cast<size_t>(g.edge_count()));
  for (auto [u, v] : g.edges()) sparse.push_back({u, v, 2.0});
  return PairVector(g.n(), std::move(sparse));
}

void require_pairs(const Graph& g) {
  if (g.n() < 2) throw DataError("graph needs at least two vertices");
}

}  // namespace

double corrected_edge_count(const Graph& g) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) throw DataError("configuration null model needs at least one edge");
  double squares = 0.0;
  for (double d : g.degrees()) squares += d * d;
  return m - squares / (4.0 * m);
}

PairVector null_model_vector(const Graph& g, NullModel model) {
  require_pairs(g);
  if (model == NullModel::kErdosRenyi) {
    const double density =
        static_cast<double>(g.edge_count()) / static_cast<double>(pair_count(g.n()));
    return PairVector::uniform(g.n(), density);
  }
  const double m_tilde = corrected_edge_count(g);
  return PairVector(g.n(), {}, {ProductKernel(1.0 / (2.0 * m_tilde), g.degrees())});
}

PairVector modularity_vector(const Graph& g, NullModel model, double gamma) {
  if (!std::isfinite(gamma)) throw DataError("resolution must be finite");
  PairVector q = adjacency_twice(g);
  q += (-2.0 * gamma) * null_model_vector(g, model);
  return q;
}

double modularity_latitude(const Graph& g, NullModel model, double gamma) {
  require_pairs(g);
  const double m = static_cast<double>(g.edge_count());
  const double n_pairs = static_cast<double>(pair_count(g.n()));
  double p_sq = 0.0;
  double p_dot_e = 0.0;
  if (model == NullModel::kErdosRenyi) {
    p_sq = m * m / n_pairs;
    p_dot_e = (m / n_pairs) * (2.0 * m - n_pairs);
  } else {
    const double m_tilde = corrected_edge_count(g);
    double d2 = 0.0;
    double d4 = 0.0;
    for (double d : g.degrees()) {
      d2 += d * d;
      d4 += d * d * d * d;
    }
    p_sq = 0.5 * (d2 * d2 - d4) / (4.0 * m_tilde * m_tilde);
    double on_edges = 0.0;
    for (auto [u, v] : g.edges()) on_edges += g.degree(u) * static_cast<double>(g.degree(v));
    p_dot_e = 2.0 * on_edges / (2.0 * m_tilde) - m;
  }
  const double radicand = (1.0 - gamma) * m + gamma * gamma * p_sq - gamma * p_dot_e;
  if (!(radicand > 0.0)) throw DomainError("modularity vector is zero");
  return safe_acos((gamma - 1.0) * m / (std::sqrt(n_pairs) * std::sqrt(radicand)));
}

std::optional<QueryFamily> parse_query_family(const std::string& name) {
  if (name == "er-modularity") return QueryFamily::kErModularity;
  if (name == "cm-modularity") return QueryFamily::kCmModularity;
  if (name == "edge-meridian") return QueryFamily::kEdgeMeridian;
  if (name == "cm-meridian") return QueryFamily::kCmMeridian;
  if (name == "wedge-meridian") return QueryFamily::kWedgeMeridian;
  if (name == "combo") return QueryFamily::kLinearCombo;
  return std::nullopt;
}

std::string to_string(QueryFamily family) {
  switch (family) {
    case QueryFamily::kErModularity: return "er-modularity";
    case QueryFamily::kCmModularity: return "cm-modularity";
    case QueryFamily::kEdgeMeridian: return "edge-meridian";
    case QueryFamily::kCmMeridian: return "cm-meridian";
    case QueryFamily::kWedgeMeridian: return "wedge-meridian";
    case QueryFamily::kLinearCombo: return "combo";
  }
  return "unknown";
}

bool requires_latitude(QueryFamily family) {
  return family == QueryFamily::kEdgeMeridian || family == QueryFamily::kCmMeridian ||
         family == QueryFamily::kWedgeMeridian;
}

PairVector meridian_base(const Graph& g, const QuerySpec& spec) {
  switch (spec.family) {
    case QueryFamily::kErModularity:
      return modularity_vector(g, NullModel::kErdosRenyi, spec.gamma);
    case QueryFamily::kCmModularity:
    case QueryFamily::kCmMeridian:
      return modularity_vector(g, NullModel::kConfiguration, spec.gamma);
    case QueryFamily::kEdgeMeridian:
      return edge_vector(g);
    case QueryFamily::kWedgeMeridian:
      return wedge_vector(g);
    case QueryFamily::kLinearCombo: {
      PairVector q = adjacency_twice(g);
      q += (-2.0 * spec.gamma * spec.c1) * null_model_vector(g, NullModel::kErdosRenyi);
      q += (-2.0 * spec.gamma * spec.c2) * null_model_vector(g, NullModel::kConfiguration);
      return q;
    }
  }
  throw DataError("unknown query family");
}

PairVector build_query(const Graph& g, const QuerySpec& spec) {
  if (spec.latitude) {
    const double lambda = *spec.latitude;
    if (!(lambda >= 0.0 && lambda <= std::numbers::pi)) {
      throw DataError("query latitude must lie in [0, pi]");
    }
    return parallel_project(meridian_base(g, spec), lambda);
  }
  if (requires_latitude(spec.family)) {
    throw DataError(to_string(spec.family) + " query needs a latitude");
  }
  return meridian_base(g, spec);
}

HeatmapPoint heatmap_coordinates(const Graph& g, const PairVector& q, int gamma_sign) {
  const double sign = gamma_sign < 0 ? -1.0 : 1.0;
  return {sign * correlation_distance(q, edge_vector(g)), latitude(q)};
}

std::optional<ComboCoefficients> decompose_linear_combo(const Graph& g, const PairVector& q) {
  if (q.n() != g.n() || g.edge_count() == 0) return std::nullopt;
  const auto sparse = q.sparse();
  if (sparse.size() != static_cast<size_t>(g.edge_count())) return std::nullopt;
  const double edge_value = sparse.front().value;
  for (const PairEntry& e : sparse) {
    if (e.value != edge_value || !g.has_edge(e.i, e.j)) return std::nullopt;
  }
  const double scale = edge_value / 2.0;
  if (!(scale > 0.0)) return std::nullopt;

  const std::vector<double> degrees = g.degrees();
  double uniform = 0.0;
  double degree_coefficient = 0.0;
  for (const ProductKernel& k : q.kernels()) {
    if (k.is_uniform()) {
      uniform += k.coefficient();
      continue;
    }
    const auto a = k.attribute();
    if (!std::equal(a.begin(), a.end(), degrees.begin())) return std::nullopt;
    degree_coefficient += k.coefficient();
  }
  const double m = static_cast<double>(g.edge_count());
  const double n_pairs = static_cast<double>(pair_count(g.n()));
  const double c1 = -(uniform / scale) * n_pairs / (2.0 * m);
  const double c2 =
      degree_coefficient == 0.0 ? 0.0 : -(degree_coefficient / scale) * corrected_edge_count(g);
  return ComboCoefficients{scale, c1, c2};
}

}  // namespace hypercd
