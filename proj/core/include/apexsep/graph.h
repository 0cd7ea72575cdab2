// Copyright 2026 The apexsep Authors
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

#ifndef APEXSEP_GRAPH_H_
#define APEXSEP_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace apexsep {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

// Sorts and deduplicates `vertices` in place and returns it.
VertexSet normalize(VertexSet vertices);

// Semantic name of a vertex. Only the fields relevant to `kind` are set; the
// others stay zero so that defaulted comparison is meaningful.
struct VertexLabel {
  enum class Kind : std::uint8_t { kGridCell, kApex, kPlain };

  Kind kind = Kind::kPlain;
  int part = 0;
  int row = 0;         // GridCell, 1-based.
  int col = 0;         // GridCell, 1-based.
  int apex_index = 0;  // Apex, 1-based.
  int id = 0;          // Plain.

  static VertexLabel grid_cell(int part, int row, int col);
  static VertexLabel apex(int part, int apex_index);
  static VertexLabel plain(int part, int id);

  bool is_grid_cell() const { return kind == Kind::kGridCell; }
  bool is_apex() const { return kind == Kind::kApex; }

  // Short human-readable name, e.g. "g0_r1_c2", "x0_1", "p0_7".
  std::string name() const;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph on vertices 0..size()-1.
//
// Adjacency is held twice: sorted neighbor lists for iteration and dense
// bitset rows for O(1) edge queries. Dense rows are fine up to a few
// thousand vertices, which covers every family this library builds.
class Graph {
 public:
  Graph() = default;

  // Edges are normalized (u < v), sorted and deduplicated. Throws
  // Error(kVertexOutOfRange) for bad endpoints, Error(kInvalidEdge) for
  // self-loops and Error(kDuplicateLabel) if two labels coincide.
  Graph(std::vector<VertexLabel> labels, std::vector<Edge> edges);

  // Graph whose vertex i carries VertexLabel::plain(0, i).
  static Graph plain(int n, std::vector<Edge> edges);

  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int u, int v) const;
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Lexicographically sorted, u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexLabel& label(int v) const { return labels_[v]; }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  bool contains(int v) const { return v >= 0 && v < size(); }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_per_row_ = 0;
};

// True iff both graphs have the same labels and the same edge set.
bool same_vertex_set(const Graph& a, const Graph& b);
bool edge_equal(const Graph& a, const Graph& b);

// Edge intersection of graphs on a shared labeled vertex set. Throws
// Error(kMismatchedVertexSets) if the factors disagree on vertices and
// Error(kInvalidSize) when `factors` is empty.
Graph intersect_graphs(std::span<const Graph> factors);

struct InducedSubgraph {
  Graph graph;
  // original[i] is the index in the parent graph of subgraph vertex i.
  std::vector<int> original;
};

// Vertices of `s` (taken as a set, ascending) with all edges among them.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

// Components ordered by their smallest vertex; each component ascending.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of g minus the vertices in `removed`.
std::vector<VertexSet> connected_components_without(
    const Graph& g, std::span<const int> removed);

bool is_clique(const Graph& g, std::span<const int> s);
bool is_independent(const Graph& g, std::span<const int> s);

// BFS hop distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Largest finite BFS distance; -1 if g is disconnected or empty.
int diameter(const Graph& g);

}  // namespace apexsep

#endif  // APEXSEP_GRAPH_H_
