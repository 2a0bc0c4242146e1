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

#include "hypercd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "hypercd/error.hpp"

namespace hypercd {
namespace {

constexpr double kPi = std::numbers::pi;

std::string format_optional_pi(const std::optional<double>& radians) {
  return radians ? format_pi(*radians) : std::string();
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

double parse_real(const std::string& text, const std::string& context) {
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(value)) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw DataError("invalid number \"" + text + "\" in " + context);
  }
}

}  // namespace

DatasetStats compute_stats(const Graph& g, const Clustering& truth) {
  if (truth.size() != g.n()) {
    throw DimensionError("ground truth covers " + std::to_string(truth.size()) +
                         " nodes, graph has " + std::to_string(g.n()));
  }
  DatasetStats s;
  s.n = g.n();
  s.edges = g.edge_count();
  s.truth_clusters = truth.cluster_count();
  s.truth_latitude = clustering_latitude(truth);
  s.edge_latitude = latitude(edge_vector(g));
  s.dcc_er_truth =
      correlation_distance(modularity_vector(g, NullModel::kErdosRenyi, 1.0), truth);
  s.dcc_cm_truth =
      correlation_distance(modularity_vector(g, NullModel::kConfiguration, 1.0), truth);
  s.dcc_wedge_truth = correlation_distance(wedge_vector(g), truth);
  return s;
}

SweepRecord evaluate(const PairVector& q, const Clustering& candidate, const Clustering* truth) {
  SweepRecord r;
  r.query_latitude = latitude(q);
  r.candidate_latitude = clustering_latitude(candidate);
  r.da_q_c = angular_distance(q, candidate);
  r.dcc_q_c = correlation_distance(q, candidate);
  if (truth != nullptr) {
    r.da_q_t = angular_distance(q, *truth);
    r.dcc_q_t = correlation_distance(q, *truth);
    r.dcc_t_c = correlation_distance(*truth, candidate);
  }
  return r;
}

std::vector<SweepRecord> run_sweep(const Graph& g, const Clustering& truth,
                                   const SweepOptions& options) {
  if (truth.size() != g.n()) throw DimensionError("ground truth does not match the graph");
  for (double lambda : options.latitudes) {
    if (!(lambda >= 0.0 && lambda <= kPi)) throw DataError("sweep latitude outside [0, pi]");
  }
  const PairVector base = meridian_base(g, options.query);
  const int64_t seeds = static_cast<int64_t>(options.seeds.size());
  std::vector<SweepRecord> rows(options.latitudes.size() * options.seeds.size());
  parallel_for(static_cast<int64_t>(rows.size()), options.threads, [&](int64_t job) {
    const double lambda = options.latitudes[job / seeds];
    const uint64_t seed = options.seeds[job % seeds];
    const PairVector q = parallel_project(base, lambda);
    LouvainConfig config = options.louvain;
    config.seed = seed;
    const LouvainResult result = louvain_project(q, config);
    SweepRecord r = evaluate(q, result.clustering, &truth);
    r.family = options.query.family;
    r.gamma = options.query.gamma;
    r.seed = seed;
    rows[job] = r;
  });
  return rows;
}

std::vector<SweepSummary> summarize_sweep(const std::vector<SweepRecord>& rows,
                                          double truth_latitude) {
  std::vector<SweepSummary> out;
  std::map<uint64_t, size_t> slot;
  std::vector<double> best_da;
  for (const SweepRecord& r : rows) {
    auto [it, inserted] = slot.try_emplace(r.seed, out.size());
    if (inserted) {
      SweepSummary s;
      s.seed = r.seed;
      s.best_dcc = std::numeric_limits<double>::infinity();
      out.push_back(s);
      best_da.push_back(std::numeric_limits<double>::infinity());
    }
    SweepSummary& s = out[it->second];
    if (r.dcc_t_c && *r.dcc_t_c < s.best_dcc) {
      s.best_dcc = *r.dcc_t_c;
      s.best_latitude = r.query_latitude;
    }
    if (r.da_q_t && *r.da_q_t < best_da[it->second]) {
      best_da[it->second] = *r.da_q_t;
      s.lambda_prime = r.query_latitude;
    }
    if (!s.crossing_latitude && r.candidate_latitude >= truth_latitude - 1e-12) {
      s.crossing_latitude = r.query_latitude;
    }
  }
  return out;
}

std::vector<double> default_heatmap_gammas() {
  return linspace(-1.5, 2.0, kDefaultHeatmapResolution);
}

std::vector<double> default_heatmap_latitudes() {
  return linspace(kPi / 3.0, 2.0 * kPi / 3.0, kDefaultHeatmapResolution);
}

double correlation_value(const Clustering& t, const Clustering& c) {
  if (auto cc = correlation_coefficient(pair_counts(t, c))) return *cc;
  const double convention = pole_convention(pole_of(t), pole_of(c));
  if (convention == 0.0) return 1.0;
  if (convention == kPi) return -1.0;
  return 0.0;
}

std::vector<HeatmapRecord> run_heatmap(const Graph& g, const Clustering& truth,
                                       const HeatmapOptions& options) {
  if (truth.size() != g.n()) throw DimensionError("ground truth does not match the graph");
  for (double lambda : options.latitudes) {
    if (!(lambda >= 0.0 && lambda <= kPi)) throw DataError("heatmap latitude outside [0, pi]");
  }
  std::vector<std::optional<PairVector>> bases;
  for (double gamma : options.gammas) {
    PairVector base = modularity_vector(g, NullModel::kConfiguration, gamma);
    if (norm(base) > 0.0 && pole_of(base) == Pole::kNone) {
      bases.emplace_back(std::move(base));
    } else {
      bases.emplace_back(std::nullopt);
    }
  }
  const int64_t lats = static_cast<int64_t>(options.latitudes.size());
  const int64_t seeds = static_cast<int64_t>(options.seeds.size());
  std::vector<HeatmapRecord> rows(options.gammas.size() * lats * seeds);
  parallel_for(static_cast<int64_t>(rows.size()), options.threads, [&](int64_t job) {
    const int64_t gi = job / (lats * seeds);
    HeatmapRecord r;
    r.gamma = options.gammas[gi];
    r.latitude = options.latitudes[(job / seeds) % lats];
    r.seed = options.seeds[job % seeds];
    if (bases[gi]) {
      const PairVector q = parallel_project(*bases[gi], r.latitude);
      LouvainConfig config = options.louvain;
      config.seed = r.seed;
      const LouvainResult result = louvain_project(q, config);
      const HeatmapPoint p = heatmap_coordinates(g, q, r.gamma < 0.0 ? -1 : 1);
      r.x = p.x;
      r.y = p.y;
      r.value = correlation_value(truth, result.clustering);
    }
    rows[job] = r;
  });
  return rows;
}

std::vector<double> linspace(double a, double b, int steps) {
  if (steps < 1) throw DataError("grid needs at least one step");
  std::vector<double> out(steps);
  for (int k = 0; k < steps; ++k) {
    out[k] = steps == 1 ? a : a + (b - a) * k / (steps - 1);
  }
  if (steps > 1) out.back() = b;
  return out;
}

std::vector<double> parse_grid(const std::string& text, double unit) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw DataError("grid \"" + text + "\" is not of the form a:b:steps");
  const double a = parse_real(parts[0], "grid " + text);
  const double b = parse_real(parts[1], "grid " + text);
  const double steps = parse_real(parts[2], "grid " + text);
  if (steps < 1 || steps != std::floor(steps) || steps > 1e7) {
    throw DataError("grid step count must be a positive integer");
  }
  std::vector<double> out = linspace(a, b, static_cast<int>(steps));
  for (double& v : out) v *= unit;
  return out;
}

std::string format_pi(double radians) { return format_real(radians / kPi); }

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << "family,gamma,seed,query_latitude,candidate_latitude,da_q_c,da_q_t,dcc_q_c,"
         "dcc_q_t,dcc_t_c\n";
  for (const SweepRecord& r : rows) {
    out << to_string(r.family) << ',' << format_real(r.gamma) << ',' << r.seed << ','
        << format_pi(r.query_latitude) << ',' << format_pi(r.candidate_latitude) << ','
        << format_pi(r.da_q_c) << ',' << format_optional_pi(r.da_q_t) << ','
        << format_pi(r.dcc_q_c) << ',' << format_optional_pi(r.dcc_q_t) << ','
        << format_optional_pi(r.dcc_t_c) << '\n';
  }
}

void write_heatmap_csv(std::ostream& out, const std::vector<HeatmapRecord>& rows) {
  out << "gamma,latitude,seed,x,y,value\n";
  for (const HeatmapRecord& r : rows) {
    out << format_real(r.gamma) << ',' << format_pi(r.latitude) << ',' << r.seed << ','
        << format_optional_pi(r.x) << ',' << format_optional_pi(r.y) << ','
        << (r.value ? format_real(*r.value) : std::string()) << '\n';
  }
}

void parallel_for(int64_t count, int threads, const std::function<void(int64_t)>& fn) {
  if (count <= 0) return;
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::clamp<int64_t>(workers, 1, count));
  std::atomic<int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const int64_t job = next.fetch_add(1);
      if (job >= count) return;
      try {
        fn(job);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hypercd
