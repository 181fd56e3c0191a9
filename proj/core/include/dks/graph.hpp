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

#ifndef DKS_GRAPH_HPP_
#define DKS_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dks {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

// Immutable undirected simple graph in compressed sparse row layout.
//
// Neighbor lists are sorted ascending and symmetric. Each vertex also carries
// an external label (the id it had in the source file); generated graphs use
// the identity labelling.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over vertices 0..n-1. Self-loops and duplicate edges are
  // dropped; the counts are written to the optional out-parameters.
  static Graph FromEdges(VertexId n, std::span<const Edge> edges,
                         std::int64_t* self_loops_dropped = nullptr,
                         std::int64_t* duplicates_dropped = nullptr);

  VertexId num_vertices() const { return n_; }
  std::int64_t num_edges() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  VertexId degree(VertexId v) const {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const VertexId> degrees() const { return degrees_; }

  bool has_edge(VertexId u, VertexId v) const;

  std::int64_t label(VertexId v) const {
    return labels_.empty() ? v : labels_[v];
  }
  void set_labels(std::vector<std::int64_t> labels);

  std::vector<Edge> edges() const;

 private:
  VertexId n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<VertexId> degrees_;
  std::vector<std::int64_t> labels_;
};

// Counts of input records that did not become edges.
struct LoadDiagnostics {
  std::int64_t data_lines = 0;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicates_dropped = 0;
  bool header_used = false;
  // Set when data lines carried a third (weight) column.
  bool weights_ignored = false;
};

struct LoadedGraph {
  Graph graph;
  LoadDiagnostics diagnostics;
};

// Whitespace-separated edge list. Lines starting with '#' or '%' are
// comments. The first data line is treated as an "n m" header when exactly m
// data lines follow it. Vertex ids are relabeled densely in order of first
// appearance in a kept edge. Throws ParseError.
LoadedGraph LoadEdgeList(std::istream& in);

// Dense 0/1 lower-triangular adjacency matrix preceded by an "n d" header.
// Accepts the strict lower triangle (n(n-1)/2 entries), the lower triangle
// with diagonal (n(n+1)/2), or the full n x n matrix (only the strict lower
// triangle is read). Throws ParseError.
LoadedGraph LoadKClusterMatrix(std::istream& in);

// Checks the structural invariants: symmetric, sorted, loop-free, duplicate
// free, degree sum = 2m. Returns an empty string when valid, otherwise a
// description of the first violation.
std::string Validate(const Graph& g);

// Number of edges with both endpoints in the vertex set, by merging sorted
// neighbor lists. Throws ConfigError on an out-of-range or repeated vertex.
std::int64_t InducedEdgeCount(const Graph& g,
                              std::span<const VertexId> vertices);

}  // namespace dks

#endif  // DKS_GRAPH_HPP_
