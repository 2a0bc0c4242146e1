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

#include "hypercd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypercd/error.hpp"

namespace hypercd {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line, EdgeListFormat format) {
  std::vector<std::string> out;
  if (format == EdgeListFormat::kCsv) {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
  } else {
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) out.push_back(token);
  }
  return out;
}

std::optional<int64_t> parse_index(const std::string& token) {
  int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
  return value;
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw DataError("negative vertex count");
  if (labels.empty()) {
    labels.reserve(n);
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  if (labels.size() != static_cast<size_t>(n)) {
    throw DataError("label count does not match vertex count");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DataError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) continue;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += static_cast<int64_t>(list.size());
  }
  g.edge_count_ /= 2;
  g.labels_ = std::move(labels);
  for (int v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second) {
      throw DataError("duplicate vertex label " + g.labels_[v]);
    }
  }
  return g;
}

std::vector<double> Graph::degrees() const {
  std::vector<double> d(adjacency_.size());
  for (size_t v = 0; v < d.size(); ++v) d[v] = static_cast<double>(adjacency_[v].size());
  return d;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < n(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EdgeListFormat edge_list_format_for(const std::string& path) {
  return std::filesystem::path(path).extension() == ".csv" ? EdgeListFormat::kCsv
                                                           : EdgeListFormat::kWhitespace;
}

LoadedGraph load_edge_list(const std::string& path, EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list " + path);

  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#' || body[0] == '%') continue;
    auto fields = split_fields(body, format);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected two node identifiers");
    }
    raw.emplace_back(std::move(fields[0]), std::move(fields[1]));
  }
  if (raw.empty()) throw DataError(path + ": no edges");

  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& [u, v] : raw) {
    intern(u);
    intern(v);
  }

  // Numeric ids keep their numeric order.
  std::vector<std::pair<int64_t, int>> numeric;
  for (size_t k = 0; k < labels.size(); ++k) {
    auto value = parse_index(labels[k]);
    if (!value) {
      numeric.clear();
      break;
    }
    numeric.emplace_back(*value, static_cast<int>(k));
  }
  std::vector<int> position(labels.size());
  for (size_t k = 0; k < labels.size(); ++k) position[k] = static_cast<int>(k);
  if (!numeric.empty()) {
    std::sort(numeric.begin(), numeric.end());
    std::vector<std::string> ordered(labels.size());
    for (size_t r = 0; r < numeric.size(); ++r) {
      position[numeric[r].second] = static_cast<int>(r);
      ordered[r] = labels[numeric[r].second];
    }
    labels = std::move(ordered);
  }

  LoadReport report;
  report.edge_lines = static_cast<int64_t>(raw.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    const int u = position[index.at(a)];
    const int v = position[index.at(b)];
    if (u == v) {
      ++report.self_loops;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::vector<std::pair<int, int>> distinct = edges;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  report.duplicates = static_cast<int64_t>(edges.size() - distinct.size());

  const int n = static_cast<int>(labels.size());
  return {Graph::from_edges(n, distinct, std::move(labels)), report};
}

Graph with_vertices(const Graph& g, std::span<const std::string> labels) {
  std::vector<std::string> all(g.labels().begin(), g.labels().end());
  std::unordered_map<std::string, int> known;
  for (size_t v = 0; v < all.size(); ++v) known.emplace(all[v], static_cast<int>(v));
  for (const auto& label : labels) {
    if (known.emplace(label, static_cast<int>(all.size())).second) all.push_back(label);
  }
  if (all.size() == static_cast<size_t>(g.n())) return g;
  const auto edges = g.edges();
  const int n = static_cast<int>(all.size());
  return Graph::from_edges(n, edges, std::move(all));
}

void write_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  for (auto [u, v] : g.edges()) out << g.labels()[u] << ' ' << g.labels()[v] << '\n';
  if (!out) throw DataError("failed writing " + path);
}

std::map<std::string, DatasetEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest " + path);
  const auto base = std::filesystem::path(path).parent_path();
  std::map<std::string, DatasetEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    const std::string key = eq == std::string::npos ? "" : trim(body.substr(0, eq));
    const auto dot = key.rfind('.');
    if (eq == std::string::npos || dot == std::string::npos || dot == 0) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected \"name.graph = path\" or \"name.truth = path\"");
    }
    const std::string name = key.substr(0, dot);
    const std::string field = key.substr(dot + 1);
    std::filesystem::path target = trim(body.substr(eq + 1));
    if (target.is_relative()) target = base / target;
    if (field == "graph") {
      out[name].graph_path = target.string();
    } else if (field == "truth") {
      out[name].truth_path = target.string();
    } else {
      throw DataError(path + ":" + std::to_string(line_no) + ": unknown field " + field);
    }
  }
  return out;
}

PairVector edge_vector(const Graph& g) {
  std::vector<PairEntry> sparse;
  sparse.reserve(static_cast<size_t>(g.edge_count()));
  for (auto [u, v] : g.edges()) sparse.push_back({u, v, 2.0});
  return PairVector(g.n(), std::move(sparse), {ProductKernel::uniform(g.n(), -1.0)});
}

PairVector wedge_vector(const Graph& g) {
  std::vector<int64_t> keys;
  int64_t wedges = 0;
  for (int v = 0; v < g.n(); ++v) {
    const int64_t d = g.degree(v);
    wedges += d * (d - 1) / 2;
  }
  keys.reserve(static_cast<size_t>(wedges));
  for (int v = 0; v < g.n(); ++v) {
    const auto nb = g.neighbors(v);
    for (size_t a = 0; a < nb.size(); ++a) {
      for (size_t b = a + 1; b < nb.size(); ++b) {
        keys.push_back(static_cast<int64_t>(nb[a]) * g.n() + nb[b]);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<PairEntry> sparse;
  for (size_t k = 0; k < keys.size();) {
    size_t end = k;
    while (end < keys.size() && keys[end] == keys[k]) ++end;
    sparse.push_back({static_cast<int>(keys[k] / g.n()), static_cast<int>(keys[k] % g.n()),
                      static_cast<double>(end - k)});
    k = end;
  }
  return PairVector(g.n(), std::move(sparse));
}

std::optional<double> global_clustering(const Graph& g) {
  const PairVector w = wedge_vector(g);
  if (w.sparse().empty()) return std::nullopt;
  const PairVector e = edge_vector(g);
  const double cos_angle = inner(e, w) / (norm(e) * norm(w));
  const double cos_latitude =
      -sum(w) / (std::sqrt(static_cast<double>(w.dimension())) * norm(w));
  return 0.5 * (1.0 - cos_angle / cos_latitude);
}

}  // namespace hypercd
