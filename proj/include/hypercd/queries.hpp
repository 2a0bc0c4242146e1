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

#include <optional>
#include <string>
#include <utility>

#include "hypercd/graph.hpp"
#include "hypercd/pair_vector.hpp"

namespace hypercd {

enum class NullModel { kErdosRenyi, kConfiguration };

// p(G): expected edge count of every pair under the null model. Both models
// sum to m. The configuration model divides by 2 m~ with
// m~ = m - sum(d^2) / (4 m), and needs at least one edge.
PairVector null_model_vector(const Graph& g, NullModel model);

// m - sum(d^2) / (4 m).
double corrected_edge_count(const Graph& g);

// 1 + e(G) - 2 gamma p(G). Negative gamma is allowed.
PairVector modularity_vector(const Graph& g, NullModel model, double gamma);

// Latitude of the modularity vector from its closed form in m, N, ||p|| and
// <p, e>.
double modularity_latitude(const Graph& g, NullModel model, double gamma);

enum class QueryFamily {
  kErModularity,
  kCmModularity,
  kEdgeMeridian,
  kCmMeridian,
  kWedgeMeridian,
  kLinearCombo,
};

// CLI spellings: er-modularity, cm-modularity, edge-meridian, cm-meridian,
// wedge-meridian, combo.
std::optional<QueryFamily> parse_query_family(const std::string& name);
std::string to_string(QueryFamily family);

struct QuerySpec {
  QueryFamily family = QueryFamily::kErModularity;
  double gamma = 1.0;
  // Radians. Required by the meridian families; optional re-projection for
  // the others.
  std::optional<double> latitude;
  double c1 = 1.0;  // weight of p_ER in the combo family
  double c2 = 0.0;  // weight of p_CM in the combo family
};

bool requires_latitude(QueryFamily family);

// Meridian families project a base vector to spec.latitude: e(G), the CM
// modularity vector at spec.gamma, or w(G). Throws DataError when a
// required latitude is missing or out of [0, pi].
PairVector build_query(const Graph& g, const QuerySpec& spec);

// The meridian a meridian family sweeps along, before parallel projection.
PairVector meridian_base(const Graph& g, const QuerySpec& spec);

struct HeatmapPoint {
  double x;  // sign * d_CC(q, e(G))
  double y;  // latitude(q)
};
HeatmapPoint heatmap_coordinates(const Graph& g, const PairVector& q, int gamma_sign);

// Writes q as a positive multiple of 1 + e(G) - 2 (c1 p_ER + c2 p_CM) when
// q is built from 2A, 1 and one degree kernel (the combo and CM-meridian
// queries). nullopt when q has another shape or a non-positive edge weight.
struct ComboCoefficients {
  double scale;
  double c1;
  double c2;
};
std::optional<ComboCoefficients> decompose_linear_combo(const Graph& g, const PairVector& q);

}  // namespace hypercd
