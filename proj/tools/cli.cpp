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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypercd/clustering.hpp"
#include "hypercd/error.hpp"
#include "hypercd/experiments.hpp"
#include "hypercd/generators.hpp"
#include "hypercd/graph.hpp"
#include "hypercd/louvain.hpp"
#include "hypercd/queries.hpp"

namespace hypercd::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double rounded(double value) { return std::round(value * 1e6) / 1e6; }
double in_pi(double radians) { return rounded(radians / kPi); }
json in_pi(const std::optional<double>& radians) {
  return radians ? json(in_pi(*radians)) : json(nullptr);
}

struct Inputs {
  Graph graph;
  LoadReport report;
  std::optional<Clustering> truth;
  int isolated_from_truth = 0;
};

// Truth nodes absent from the edge list join the graph as isolated vertices.
Inputs load_inputs(const std::string& graph_path, const std::string& truth_path) {
  Inputs in;
  LoadedGraph loaded = load_edge_list(graph_path, edge_list_format_for(graph_path));
  in.graph = std::move(loaded.graph);
  in.report = loaded.report;
  if (!truth_path.empty()) {
    const LabelledClustering labelled = read_labelled_clustering(truth_path);
    const int before = in.graph.n();
    in.graph = with_vertices(in.graph, labelled.nodes);
    in.isolated_from_truth = in.graph.n() - before;
    in.truth = read_clustering(truth_path, in.graph.labels());
  }
  return in;
}

json graph_json(const std::string& path, const Inputs& in) {
  return {{"path", path},
          {"n", in.graph.n()},
          {"m", in.graph.edge_count()},
          {"edge_lines", in.report.edge_lines},
          {"self_loops_dropped", in.report.self_loops},
          {"duplicates_dropped", in.report.duplicates},
          {"isolated_vertices_from_truth", in.isolated_from_truth}};
}

std::vector<uint64_t> parse_seeds(const std::string& text) {
  std::vector<uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("invalid seed list \"" + text + "\"");
    }
    return static_cast<uint64_t>(std::stoull(s));
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      seeds.push_back(number(item));
      continue;
    }
    const uint64_t lo = number(item.substr(0, dash));
    const uint64_t hi = number(item.substr(dash + 1));
    if (hi < lo || hi - lo > 100000) throw UsageError("invalid seed range \"" + item + "\"");
    for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw UsageError("empty seed list");
  return seeds;
}

std::vector<double> grid_or(const std::string& text, double unit, std::vector<double> fallback) {
  if (text.empty()) return fallback;
  try {
    return parse_grid(text, unit);
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

struct QueryFlags {
  std::string family = "er-modularity";
  double gamma = 1.0;
  double latitude = 0.0;  // units of pi
  CLI::Option* latitude_option = nullptr;
  double c1 = 1.0;
  double c2 = 0.0;
};

void add_query_flags(CLI::App* app, QueryFlags& f, bool with_latitude) {
  app->add_option("--query", f.family,
                  "er-modularity|cm-modularity|edge-meridian|cm-meridian|wedge-meridian|combo")
      ->capture_default_str();
  app->add_option("--gamma", f.gamma, "Resolution parameter")->capture_default_str();
  if (with_latitude) {
    f.latitude_option =
        app->add_option("--latitude", f.latitude, "Query latitude in units of pi");
  }
  app->add_option("--c1", f.c1, "Weight of the ER null model (combo)")->capture_default_str();
  app->add_option("--c2", f.c2, "Weight of the CM null model (combo)")->capture_default_str();
}

QuerySpec to_spec(const QueryFlags& f) {
  const auto family = parse_query_family(f.family);
  if (!family) throw UsageError("unknown query family \"" + f.family + "\"");
  QuerySpec spec;
  spec.family = *family;
  spec.gamma = f.gamma;
  spec.c1 = f.c1;
  spec.c2 = f.c2;
  if (f.latitude_option != nullptr && f.latitude_option->count() > 0) {
    if (!(f.latitude >= 0.0 && f.latitude <= 1.0)) {
      throw UsageError("--latitude must lie in [0, 1] (units of pi)");
    }
    spec.latitude = f.latitude == 1.0 ? kPi : f.latitude * kPi;
  }
  return spec;
}

json query_json(const QuerySpec& spec) {
  json j = {{"family", to_string(spec.family)}, {"gamma", spec.gamma}};
  j["latitude"] = in_pi(spec.latitude);
  if (spec.family == QueryFamily::kLinearCombo) {
    j["c1"] = spec.c1;
    j["c2"] = spec.c2;
  }
  return j;
}

struct LouvainFlags {
  std::string order = "ascending";
  bool no_aggregation = false;
  bool refine = false;
  int max_passes = 100;
};

void add_louvain_flags(CLI::App* app, LouvainFlags& f) {
  app->add_option("--order", f.order, "Vertex order: ascending|shuffle")->capture_default_str();
  app->add_flag("--no-aggregation", f.no_aggregation, "Local moves only");
  app->add_flag("--refine", f.refine, "Repeat vertex-level moves after aggregation");
  app->add_option("--max-passes", f.max_passes, "Passes per level")->capture_default_str();
}

LouvainConfig to_config(const LouvainFlags& f) {
  LouvainConfig config;
  if (f.order == "ascending") {
    config.order = VertexOrder::kAscending;
  } else if (f.order == "shuffle") {
    config.order = VertexOrder::kShuffle;
  } else {
    throw UsageError("--order must be ascending or shuffle");
  }
  if (f.max_passes < 1) throw UsageError("--max-passes must be at least 1");
  config.aggregation = !f.no_aggregation;
  config.refine = f.refine;
  config.max_passes = f.max_passes;
  return config;
}

json louvain_json(const LouvainConfig& c) {
  return {{"order", c.order == VertexOrder::kShuffle ? "shuffle" : "ascending"},
          {"aggregation", c.aggregation},
          {"refine", c.refine},
          {"max_passes", c.max_passes}};
}

json record_json(const SweepRecord& r) {
  json j = {{"query_latitude", in_pi(r.query_latitude)},
            {"candidate_latitude", in_pi(r.candidate_latitude)},
            {"da_q_c", in_pi(r.da_q_c)},
            {"dcc_q_c", in_pi(r.dcc_q_c)}};
  if (r.dcc_t_c) {
    j["da_q_t"] = in_pi(r.da_q_t);
    j["dcc_q_t"] = in_pi(r.dcc_q_t);
    j["dcc_t_c"] = in_pi(r.dcc_t_c);
  }
  return j;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path);
  return file;
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  auto file = open_output(path);
  file << j.dump(2) << '\n';
}

// --- subcommands ---------------------------------------------------------

struct StatsArgs {
  std::string graph, truth, out;
};

void cmd_stats(const StatsArgs& a, std::ostream& out) {
  const Inputs in = load_inputs(a.graph, a.truth);
  const DatasetStats s = compute_stats(in.graph, *in.truth);
  json j = {{"schema_version", kSchemaVersion},
            {"graph", graph_json(a.graph, in)},
            {"truth", a.truth},
            {"angle_unit", "pi"},
            {"n", s.n},
            {"m", s.edges},
            {"truth_clusters", s.truth_clusters},
            {"truth_latitude", in_pi(s.truth_latitude)},
            {"edge_latitude", in_pi(s.edge_latitude)},
            {"dcc_er_modularity_truth", in_pi(s.dcc_er_truth)},
            {"dcc_cm_modularity_truth", in_pi(s.dcc_cm_truth)},
            {"dcc_wedge_truth", in_pi(s.dcc_wedge_truth)}};
  emit_json(j, a.out, out);
}

struct DetectArgs {
  std::string graph, truth, out, summary;
  QueryFlags query;
  LouvainFlags louvain;
  uint64_t seed = 0;
};

void cmd_detect(const DetectArgs& a, std::ostream& out) {
  const QuerySpec spec = to_spec(a.query);
  if (requires_latitude(spec.family) && !spec.latitude) {
    throw UsageError(to_string(spec.family) + " needs --latitude");
  }
  LouvainConfig config = to_config(a.louvain);
  config.seed = a.seed;
  const Inputs in = load_inputs(a.graph, a.truth);
  const PairVector q = build_query(in.graph, spec);
  const LouvainResult result = louvain_project(q, config);
  if (!a.out.empty()) write_clustering(a.out, result.clustering, in.graph.labels());

  const SweepRecord r = evaluate(q, result.clustering, in.truth ? &*in.truth : nullptr);
  json j = {{"schema_version", kSchemaVersion},
            {"graph", graph_json(a.graph, in)},
            {"query", query_json(spec)},
            {"louvain", louvain_json(config)},
            {"seed", a.seed},
            {"angle_unit", "pi"},
            {"clusters", result.clustering.cluster_count()},
            {"objective", result.objective},
            {"moves", result.moves},
            {"passes", result.passes},
            {"levels", result.levels},
            {"record", record_json(r)}};
  if (auto combo = decompose_linear_combo(in.graph, q)) {
    j["combo_decomposition"] = {{"c1", combo->c1}, {"c2", combo->c2}};
  }
  if (!a.out.empty()) j["clustering_file"] = a.out;
  emit_json(j, a.summary, out);
}

struct SweepArgs {
  std::string graph, truth, out, summary, lat_grid, seeds = "0";
  QueryFlags query;
  LouvainFlags louvain;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepOptions options;
  options.query = to_spec(a.query);
  options.latitudes = grid_or(a.lat_grid, kPi, linspace(0.0, kPi, 50));
  for (double lambda : options.latitudes) {
    if (!(lambda >= 0.0 && lambda <= kPi * (1 + 1e-15))) {
      throw UsageError("--lat-grid must stay within [0, 1] (units of pi)");
    }
  }
  for (double& lambda : options.latitudes) lambda = std::min(lambda, kPi);
  options.seeds = parse_seeds(a.seeds);
  options.louvain = to_config(a.louvain);
  const Inputs in = load_inputs(a.graph, a.truth);

  const auto rows = run_sweep(in.graph, *in.truth, options);
  if (a.out.empty() || a.out == "-") {
    write_sweep_csv(out, rows);
  } else {
    auto file = open_output(a.out);
    write_sweep_csv(file, rows);
  }

  const double truth_latitude = clustering_latitude(*in.truth);
  json summaries = json::array();
  for (const SweepSummary& s : summarize_sweep(rows, truth_latitude)) {
    summaries.push_back({{"seed", s.seed},
                         {"best_query_latitude", in_pi(s.best_latitude)},
                         {"best_dcc_t_c", in_pi(s.best_dcc)},
                         {"lambda_prime", in_pi(s.lambda_prime)},
                         {"crossing_latitude", in_pi(s.crossing_latitude)}});
  }
  json j = {{"schema_version", kSchemaVersion},
            {"graph", graph_json(a.graph, in)},
            {"query", query_json(options.query)},
            {"louvain", louvain_json(options.louvain)},
            {"angle_unit", "pi"},
            {"truth_latitude", in_pi(truth_latitude)},
            {"grid_points", options.latitudes.size()},
            {"summaries", summaries}};
  if (!a.summary.empty()) {
    emit_json(j, a.summary, out);
  } else if (!a.out.empty() && a.out != "-") {
    emit_json(j, "", out);
  }
}

struct HeatmapArgs {
  std::string graph, truth, out, summary, lat_grid, gamma_grid, seeds = "0";
  LouvainFlags louvain;
};

void cmd_heatmap(const HeatmapArgs& a, std::ostream& out) {
  HeatmapOptions options;
  options.gammas = grid_or(a.gamma_grid, 1.0, default_heatmap_gammas());
  options.latitudes = grid_or(a.lat_grid, kPi, default_heatmap_latitudes());
  for (double& lambda : options.latitudes) {
    if (!(lambda >= 0.0 && lambda <= kPi * (1 + 1e-15))) {
      throw UsageError("--lat-grid must stay within [0, 1] (units of pi)");
    }
    lambda = std::min(lambda, kPi);
  }
  options.seeds = parse_seeds(a.seeds);
  options.louvain = to_config(a.louvain);
  const Inputs in = load_inputs(a.graph, a.truth);

  const auto rows = run_heatmap(in.graph, *in.truth, options);
  if (a.out.empty() || a.out == "-") {
    write_heatmap_csv(out, rows);
  } else {
    auto file = open_output(a.out);
    write_heatmap_csv(file, rows);
  }
  int missing = 0;
  int perfect = 0;
  for (const auto& r : rows) {
    if (!r.value) ++missing;
    if (r.value && *r.value == 1.0) ++perfect;
  }
  json j = {{"schema_version", kSchemaVersion},
            {"graph", graph_json(a.graph, in)},
            {"louvain", louvain_json(options.louvain)},
            {"angle_unit", "pi"},
            {"gamma_points", options.gammas.size()},
            {"latitude_points", options.latitudes.size()},
            {"gamma_range", {options.gammas.front(), options.gammas.back()}},
            {"latitude_range", {in_pi(options.latitudes.front()), in_pi(options.latitudes.back())}},
            {"missing_cells", missing},
            {"perfect_cells", perfect}};
  if (!a.summary.empty()) {
    emit_json(j, a.summary, out);
  } else if (!a.out.empty() && a.out != "-") {
    emit_json(j, "", out);
  }
}

struct GenerateArgs {
  std::string model, out;
  RingOfCliquesSpec ring;
  PlantedPartitionSpec ppm;
};

void cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GeneratedGraph generated;
  json params;
  if (a.model == "ring") {
    generated = ring_of_cliques(a.ring);
    params = {{"k", a.ring.k}, {"s", a.ring.s}};
  } else if (a.model == "ppm") {
    generated = planted_partition(a.ppm);
    params = {{"communities", a.ppm.communities},
              {"size", a.ppm.size},
              {"deg_in", a.ppm.deg_in},
              {"deg_out", a.ppm.deg_out},
              {"seed", a.ppm.seed},
              {"p_in", intra_probability(a.ppm)},
              {"p_out", inter_probability(a.ppm)}};
  } else {
    throw UsageError("--model must be ring or ppm");
  }
  const std::string edges_path = a.out + ".edges";
  const std::string truth_path = a.out + ".truth";
  write_edge_list(edges_path, generated.graph);
  write_clustering(truth_path, generated.truth, generated.graph.labels());
  json j = {{"schema_version", kSchemaVersion},
            {"model", a.model},
            {"parameters", params},
            {"edges_file", edges_path},
            {"truth_file", truth_path},
            {"angle_unit", "pi"},
            {"n", generated.graph.n()},
            {"m", generated.graph.edge_count()},
            {"truth_latitude", in_pi(clustering_latitude(generated.truth))},
            {"edge_latitude", in_pi(latitude(edge_vector(generated.graph)))}};
  emit_json(j, "", out);
}

struct CompareArgs {
  std::string first, second, out;
};

void cmd_compare(const CompareArgs& a, std::ostream& out) {
  const LabelledClustering t = read_labelled_clustering(a.first);
  const Clustering c = read_clustering(a.second, t.nodes);
  const PairCounts k = pair_counts(t.clustering, c);
  auto optional_number = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  json j = {{"schema_version", kSchemaVersion},
            {"first", a.first},
            {"second", a.second},
            {"n", t.clustering.size()},
            {"pairs", k.pairs},
            {"intra_first", k.intra_t},
            {"intra_second", k.intra_c},
            {"intra_both", k.intra_both},
            {"rand", rand_index(k)},
            {"jaccard", optional_number(jaccard_index(k))},
            {"hubert", hubert_index(k)},
            {"correlation", optional_number(correlation_coefficient(k))},
            {"angle_unit", "pi"},
            {"correlation_distance", in_pi(correlation_distance(t.clustering, c))}};
  emit_json(j, a.out, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Community detection as projection onto clustering vectors", "hypercd"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Geometry summary of a graph and its ground truth");
  s->add_option("--graph", stats.graph, "Edge list")->required();
  s->add_option("--truth", stats.truth, "Ground-truth clustering")->required();
  s->add_option("--out", stats.out, "JSON output (default stdout)");

  DetectArgs detect;
  auto* d = app.add_subcommand("detect", "Project one query vector onto a clustering");
  d->add_option("--graph", detect.graph, "Edge list")->required();
  d->add_option("--truth", detect.truth, "Ground-truth clustering");
  add_query_flags(d, detect.query, true);
  add_louvain_flags(d, detect.louvain);
  d->add_option("--seed", detect.seed, "Seed for --order shuffle")->capture_default_str();
  d->add_option("--out", detect.out, "Candidate clustering file");
  d->add_option("--summary", detect.summary, "JSON summary (default stdout)");

  SweepArgs sweep;
  auto* w = app.add_subcommand("sweep", "Sweep the query latitude along a meridian");
  w->add_option("--graph", sweep.graph, "Edge list")->required();
  w->add_option("--truth", sweep.truth, "Ground-truth clustering")->required();
  add_query_flags(w, sweep.query, false);
  w->add_option("--lat-grid", sweep.lat_grid, "a:b:steps in units of pi (default 0:1:50)");
  w->add_option("--seeds,--seed", sweep.seeds, "Seeds, e.g. 0,3,5-9")->capture_default_str();
  add_louvain_flags(w, sweep.louvain);
  w->add_option("--out", sweep.out, "CSV output (default stdout)");
  w->add_option("--summary", sweep.summary, "JSON summary");

  HeatmapArgs heat;
  auto* h = app.add_subcommand("heatmap", "CM-meridian heatmap of CC(T, C)");
  h->add_option("--graph", heat.graph, "Edge list")->required();
  h->add_option("--truth", heat.truth, "Ground-truth clustering")->required();
  h->add_option("--gamma-grid", heat.gamma_grid, "a:b:steps (default -1.5:2:40)");
  h->add_option("--lat-grid", heat.lat_grid, "a:b:steps in units of pi (default 1/3:2/3:40)");
  h->add_option("--seeds,--seed", heat.seeds, "Seeds, e.g. 0,3,5-9")->capture_default_str();
  add_louvain_flags(h, heat.louvain);
  h->add_option("--out", heat.out, "CSV output (default stdout)");
  h->add_option("--summary", heat.summary, "JSON summary");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a synthetic graph and its ground truth");
  g->add_option("--model", gen.model, "ring|ppm")->required();
  g->add_option("--k", gen.ring.k, "Cliques (ring)")->capture_default_str();
  g->add_option("--s", gen.ring.s, "Clique size (ring)")->capture_default_str();
  g->add_option("--communities", gen.ppm.communities, "Communities (ppm)")->capture_default_str();
  g->add_option("--size", gen.ppm.size, "Community size (ppm)")->capture_default_str();
  g->add_option("--deg-in", gen.ppm.deg_in, "Expected intra degree (ppm)")->capture_default_str();
  g->add_option("--deg-out", gen.ppm.deg_out, "Expected inter degree (ppm)")
      ->capture_default_str();
  g->add_option("--seed", gen.ppm.seed, "Seed (ppm)")->capture_default_str();
  g->add_option("--out", gen.out, "Output prefix for .edges and .truth")->required();

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "Pair-counting indices between two clusterings");
  c->add_option("--truth", cmp.first, "First clustering file")->required();
  c->add_option("--candidate", cmp.second, "Second clustering file")->required();
  c->add_option("--out", cmp.out, "JSON output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*s) cmd_stats(stats, out);
    if (*d) cmd_detect(detect, out);
    if (*w) cmd_sweep(sweep, out);
    if (*h) cmd_heatmap(heat, out);
    if (*g) cmd_generate(gen, out);
    if (*c) cmd_compare(cmp, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace hypercd::cli
