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
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hypercd/clustering.hpp"
#include "hypercd/graph.hpp"
#include "hypercd/louvain.hpp"
#include "hypercd/queries.hpp"

namespace hypercd {

// Angles below are radians; writers print them in units of pi.
struct DatasetStats {
  int n = 0;
  int64_t edges = 0;
  int truth_clusters = 0;
  double truth_latitude = 0.0;   // l(b(T))
  double edge_latitude = 0.0;    // l(e(G))
  double dcc_er_truth = 0.0;     // d_CC(q_ER(G; 1), b(T))
  double dcc_cm_truth = 0.0;     // d_CC(q_CM(G; 1), b(T))
  double dcc_wedge_truth = 0.0;  // d_CC(w(G), b(T))
};

DatasetStats compute_stats(const Graph& g, const Clustering& truth);

// One query/candidate(/truth) evaluation.
struct SweepRecord {
  QueryFamily family = QueryFamily::kErModularity;
  double gamma = 1.0;
  uint64_t seed = 0;
  double query_latitude = 0.0;
  double candidate_latitude = 0.0;
  double da_q_c = 0.0;
  std::optional<double> da_q_t;
  double dcc_q_c = 0.0;
  std::optional<double> dcc_q_t;
  std::optional<double> dcc_t_c;
};

SweepRecord evaluate(const PairVector& q, const Clustering& candidate,
                     const Clustering* truth = nullptr);

struct SweepOptions {
  QuerySpec query;                  // latitude is overwritten per grid point
  std::vector<double> latitudes;    // radians
  std::vector<uint64_t> seeds{0};
  LouvainConfig louvain;            // seed is overwritten per run
  int threads = 0;                  // 0: hardware concurrency
};

// Rows ordered by latitude index, then seed.
std::vector<SweepRecord> run_sweep(const Graph& g, const Clustering& truth,
                                   const SweepOptions& options);

struct SweepSummary {
  uint64_t seed = 0;
  double best_latitude = 0.0;  // query latitude minimising d_CC(T, C)
  double best_dcc = 0.0;
  double lambda_prime = 0.0;   // query latitude minimising d_a(q, b(T))
  // First query latitude whose candidate reaches l(b(T)).
  std::optional<double> crossing_latitude;
};

// One summary per seed, in the order seeds first appear in `rows`.
std::vector<SweepSummary> summarize_sweep(const std::vector<SweepRecord>& rows,
                                          double truth_latitude);

struct HeatmapRecord {
  double gamma = 0.0;
  double latitude = 0.0;
  uint64_t seed = 0;
  std::optional<double> x;      // sgn(gamma) d_CC(q, e(G))
  std::optional<double> y;      // l(q)
  std::optional<double> value;  // CC(T, C); missing when q_CM(G; gamma) is a pole
};

struct HeatmapOptions {
  std::vector<double> gammas;
  std::vector<double> latitudes;  // radians
  std::vector<uint64_t> seeds{0};
  LouvainConfig louvain;
  int threads = 0;
};

inline constexpr int kDefaultHeatmapResolution = 40;
std::vector<double> default_heatmap_gammas();
std::vector<double> default_heatmap_latitudes();

// Rows ordered by gamma index, then latitude index, then seed.
std::vector<HeatmapRecord> run_heatmap(const Graph& g, const Clustering& truth,
                                       const HeatmapOptions& options);

// cos d_CC(T, C): the correlation coefficient, or the cosine of the pole
// convention when either clustering is a pole.
double correlation_value(const Clustering& t, const Clustering& c);

// Inclusive linspace from "a:b:steps"; steps >= 1. Values are multiplied by
// `unit`. Throws DataError on malformed input.
std::vector<double> parse_grid(const std::string& text, double unit = 1.0);
std::vector<double> linspace(double a, double b, int steps);

// x / pi with six decimals.
std::string format_pi(double radians);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);
void write_heatmap_csv(std::ostream& out, const std::vector<HeatmapRecord>& rows);

// Runs fn(0) .. fn(count - 1) on up to `threads` workers (0: hardware
// concurrency). The first exception thrown is rethrown after all workers stop.
void parallel_for(int64_t count, int threads, const std::function<void(int64_t)>& fn);

}  // namespace hypercd
