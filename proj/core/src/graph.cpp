// Copyright 2026 The dks Authors
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

#include "dks/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <limits>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "dks/errors.hpp"

namespace dks {

Graph Graph::FromEdges(VertexId n, std::span<const Edge> edges,
                       std::int64_t* self_loops_dropped,
                       std::int64_t* duplicates_dropped) {
  if (n < 0) throw ConfigError("negative vertex count");
  Graph g;
  g.n_ = n;
  std::int64_t loops = 0;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ConfigError("edge endpoint out of range");
    }
    if (u == v) {
      ++loops;
      continue;
    }
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (VertexId v = 0; v < n; ++v) counts[v + 1] += counts[v];

  std::vector<VertexId> raw(static_cast<std::size_t>(counts[n]));
  std::vector<std::int64_t> fill(counts.begin(), counts.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.degrees_.assign(static_cast<std::size_t>(n), 0);
  g.adjacency_.reserve(raw.size());
  for (VertexId v = 0; v < n; ++v) {
    auto first = raw.begin() + counts[v];
    auto last = raw.begin() + counts[v + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    g.offsets_[v + 1] = static_cast<std::int64_t>(g.adjacency_.size());
    g.degrees_[v] = static_cast<VertexId>(last - first);
  }
  g.adjacency_.shrink_to_fit();
  g.m_ = static_cast<std::int64_t>(g.adjacency_.size()) / 2;

  const auto kept_input = static_cast<std::int64_t>(edges.size()) - loops;
  if (self_loops_dropped != nullptr) *self_loops_dropped = loops;
  if (duplicates_dropped != nullptr) *duplicates_dropped = kept_input - g.m_;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
    throw ConfigError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool IsCommentOrBlank(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  if (pos == std::string_view::npos) return true;
  return line[pos] == '#' || line[pos] == '%';
}

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t ParseId(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "malformed vertex id '" + std::string(token) + "'");
  }
  if (value < 0) {
    throw ParseError(line_no, "negative vertex id '" + std::string(token) + "'");
  }
  return value;
}

void ParseWeight(std::string_view token, std::size_t line_no) {
  // std::from_chars for double is not available on every toolchain we target.
  std::string s(token);
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw ParseError(line_no, "malformed edge weight '" + s + "'");
  }
}

struct RawEdge {
  std::int64_t u;
  std::int64_t v;
};

}  // namespace

LoadedGraph LoadEdgeList(std::istream& in) {
  LoadDiagnostics diag;
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    const auto tokens = Tokenize(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected two vertex ids (and an optional "
                                "weight), got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    const std::int64_t u = ParseId(tokens[0], line_no);
    const std::int64_t v = ParseId(tokens[1], line_no);
    if (tokens.size() == 3) {
      ParseWeight(tokens[2], line_no);
      diag.weights_ignored = true;
    }
    raw.push_back({u, v});
  }
  if (raw.empty()) throw ParseError(0, "empty edge list");

  // "n m" header: exactly m data lines follow and they mention at most n
  // distinct vertices.
  std::size_t first = 0;
  if (raw.size() > 1 &&
      static_cast<std::int64_t>(raw.size()) - 1 == raw.front().v) {
    std::vector<std::int64_t> ids;
    ids.reserve(2 * raw.size());
    for (std::size_t i = 1; i < raw.size(); ++i) {
      if (raw[i].u == raw[i].v) continue;
      ids.push_back(raw[i].u);
      ids.push_back(raw[i].v);
    }
    std::sort(ids.begin(), ids.end());
    const auto distinct =
        std::unique(ids.begin(), ids.end()) - ids.begin();
    if (distinct <= raw.front().u) {
      first = 1;
      diag.header_used = true;
    }
  }
  diag.data_lines = static_cast<std::int64_t>(raw.size() - first);

  std::unordered_map<std::int64_t, VertexId> index;
  std::vector<std::int64_t> labels;
  auto intern = [&](std::int64_t label) {
    auto [it, inserted] =
        index.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) {
      if (labels.size() >=
          static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) {
        throw ParseError(0, "too many vertices");
      }
      labels.push_back(label);
    }
    return it->second;
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size() - first);
  for (std::size_t i = first; i < raw.size(); ++i) {
    if (raw[i].u == raw[i].v) {
      ++diag.self_loops_dropped;
      continue;
    }
    const VertexId a = intern(raw[i].u);
    const VertexId b = intern(raw[i].v);
    edges.emplace_back(a, b);
  }

  LoadedGraph out;
  out.graph = Graph::FromEdges(static_cast<VertexId>(labels.size()), edges,
                               nullptr, &diag.duplicates_dropped);
  out.graph.set_labels(std::move(labels));
  out.diagnostics = diag;
  return out;
}

LoadedGraph LoadKClusterMatrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    header = Tokenize(line);
  }
  if (header.empty()) throw ParseError(0, "empty kcluster file");
  if (header.size() < 1 || header.size() > 2) {
    throw ParseError(line_no, "expected header 'n d'");
  }
  const std::int64_t n = ParseId(header[0], line_no);
  if (n < 1 || n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "vertex count out of range");
  }

  std::vector<char> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    for (auto token : Tokenize(line)) {
      if (token != "0" && token != "1") {
        throw ParseError(line_no,
                         "expected 0/1 entry, got '" + std::string(token) + "'");
      }
      entries.push_back(token == "1" ? 1 : 0);
    }
  }

  const std::int64_t strict = n * (n - 1) / 2;
  const std::int64_t with_diag = n * (n + 1) / 2;
  const std::int64_t full = n * n;
  const auto count = static_cast<std::int64_t>(entries.size());
  std::vector<Edge> edges;
  LoadDiagnostics diag;
  auto at = [&](std::int64_t idx) { return entries[idx] != 0; };
  std::int64_t pos = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t row_len = 0;
    if (count == strict) {
      row_len = i;
    } else if (count == with_diag) {
      row_len = i + 1;
    } else if (count == full) {
      row_len = n;
    } else {
      throw ParseError(0, "kcluster matrix has " + std::to_string(count) +
                              " entries; expected " + std::to_string(strict) +
                              ", " + std::to_string(with_diag) + " or " +
                              std::to_string(full));
    }
    for (std::int64_t j = 0; j < row_len; ++j, ++pos) {
      if (j < i && at(pos)) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      } else if (j == i && at(pos)) {
        ++diag.self_loops_dropped;
      }
    }
  }
  diag.data_lines = static_cast<std::int64_t>(edges.size());
  LoadedGraph out;
  out.graph = Graph::FromEdges(static_cast<VertexId>(n), edges);
  out.diagnostics = diag;
  return out;
}

std::string Validate(const Graph& g) {
  std::ostringstream err;
  std::int64_t degree_sum = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbors(u);
    if (static_cast<VertexId>(nb.size()) != g.degrees()[u]) {
      err << "degree of " << u << " does not match its neighbor list";
      return err.str();
    }
    degree_sum += static_cast<std::int64_t>(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const VertexId v = nb[i];
      if (v < 0 || v >= g.num_vertices()) {
        err << "neighbor " << v << " of " << u << " out of range";
        return err.str();
      }
      if (v == u) {
        err << "self-loop at " << u;
        return err.str();
      }
      if (i > 0 && nb[i - 1] >= v) {
        err << "neighbor list of " << u << " not strictly ascending";
        return err.str();
      }
      if (!g.has_edge(v, u)) {
        err << "edge " << u << "-" << v << " is not symmetric";
        return err.str();
      }
    }
  }
  if (degree_sum != 2 * g.num_edges()) {
    err << "degree sum " << degree_sum << " != 2m = " << 2 * g.num_edges();
    return err.str();
  }
  return {};
}

std::int64_t InducedEdgeCount(const Graph& g,
                              std::span<const VertexId> vertices) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.num_vertices()) {
      throw ConfigError("vertex " + std::to_string(sorted[i]) +
                        " out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw ConfigError("vertex " + std::to_string(sorted[i]) + " repeated");
    }
  }
  std::int64_t twice = 0;
  for (VertexId u : sorted) {
    auto nb = g.neighbors(u);
    auto a = nb.begin();
    auto b = sorted.begin();
    while (a != nb.end() && b != sorted.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++twice;
        ++a;
        ++b;
      }
    }
  }
  return twice / 2;
}

}  // namespace dks
