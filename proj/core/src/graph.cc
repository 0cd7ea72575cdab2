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

#include "apexsep/graph.h"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "apexsep/error.h"

namespace apexsep {
namespace {

void check_vertices(const Graph& g, std::span<const int> s) {
  for (int v : s) {
    if (!g.contains(v)) {
      throw Error(Errc::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph of size " +
                      std::to_string(g.size()));
    }
  }
}

}  // namespace

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

VertexLabel VertexLabel::grid_cell(int part, int row, int col) {
  VertexLabel l;
  l.kind = Kind::kGridCell;
  l.part = part;
  l.row = row;
  l.col = col;
  return l;
}

VertexLabel VertexLabel::apex(int part, int apex_index) {
  VertexLabel l;
  l.kind = Kind::kApex;
  l.part = part;
  l.apex_index = apex_index;
  return l;
}

VertexLabel VertexLabel::plain(int part, int id) {
  VertexLabel l;
  l.kind = Kind::kPlain;
  l.part = part;
  l.id = id;
  return l;
}

std::string VertexLabel::name() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kGridCell:
      out << 'g' << part << "_r" << row << "_c" << col;
      break;
    case Kind::kApex:
      out << 'x' << part << '_' << apex_index;
      break;
    case Kind::kPlain:
      out << 'p' << part << '_' << id;
      break;
  }
  return out.str();
}

Graph::Graph(std::vector<VertexLabel> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const int n = size();
  {
    std::set<VertexLabel> seen;
    for (const VertexLabel& l : labels_) {
      if (!seen.insert(l).second) {
        throw Error(Errc::kDuplicateLabel, "duplicate label " + l.name());
      }
    }
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(Errc::kVertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside graph of size " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(Errc::kInvalidEdge,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  words_per_row_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(words_per_row_ * n, 0);
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    rows_[e.u * words_per_row_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    rows_[e.v * words_per_row_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::plain(int n, std::vector<Edge> edges) {
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(VertexLabel::plain(0, i));
  return Graph(std::move(labels), std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
  if (!contains(u) || !contains(v)) return false;
  return (rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
}

bool same_vertex_set(const Graph& a, const Graph& b) {
  return a.labels() == b.labels();
}

bool edge_equal(const Graph& a, const Graph& b) {
  return a.size() == b.size() && a.edges() == b.edges();
}

Graph intersect_graphs(std::span<const Graph> factors) {
  if (factors.empty()) {
    throw Error(Errc::kInvalidSize, "intersection of zero graphs");
  }
  const Graph& first = factors.front();
  for (const Graph& f : factors.subspan(1)) {
    if (f.size() != first.size() || !same_vertex_set(first, f)) {
      throw Error(Errc::kMismatchedVertexSets,
                  "factors disagree on their vertex sets");
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : first.edges()) {
    bool everywhere = true;
    for (const Graph& f : factors.subspan(1)) {
      if (!f.has_edge(e.u, e.v)) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) kept.push_back(e);
  }
  return Graph(first.labels(), std::move(kept));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  check_vertices(g, s);
  VertexSet vertices = normalize(VertexSet(s.begin(), s.end()));
  std::vector<int> position(g.size(), -1);
  std::vector<VertexLabel> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[vertices[i]] = static_cast<int>(i);
    labels.push_back(g.label(vertices[i]));
  }
  std::vector<Edge> edges;
  for (int v : vertices) {
    for (int w : g.neighbors(v)) {
      if (w > v && position[w] >= 0) edges.push_back({position[v], position[w]});
    }
  }
  return {Graph(std::move(labels), std::move(edges)), std::move(vertices)};
}

std::vector<VertexSet> connected_components_without(
    const Graph& g, std::span<const int> removed) {
  check_vertices(g, removed);
  std::vector<char> blocked(g.size(), 0);
  for (int v : removed) blocked[v] = 1;
  std::vector<int> seen(g.size(), 0);
  std::vector<VertexSet> components;
  std::vector<int> stack;
  for (int root = 0; root < g.size(); ++root) {
    if (blocked[root] || seen[root]) continue;
    VertexSet component;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!blocked[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components_without(g, {});
}

bool is_clique(const Graph& g, std::span<const int> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && !g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const int> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  int src[] = {source};
  check_vertices(g, src);
  std::vector<int> dist(g.size(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.size() == 0) return -1;
  int best = 0;
  for (int v = 0; v < g.size(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace apexsep
