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

#include "apexsep/chordal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>

#include "apexsep/error.h"

namespace apexsep {
namespace {

bool is_permutation_of_vertices(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.size()) return false;
  std::vector<char> seen(g.size(), 0);
  for (int v : order) {
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> positions_of(std::span<const int> order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

// A vertex whose later neighbors are not a clique, witnessed by its parent
// (earliest later neighbor) and a later neighbor the parent misses.
struct PeoViolation {
  int vertex = -1;
  int parent = -1;
  int missed = -1;
};

// Tarjan-Yannakakis test: it suffices that each vertex's later neighbors,
// minus its parent, are neighbors of the parent.
std::optional<PeoViolation> find_peo_violation(const Graph& g,
                                               std::span<const int> order) {
  std::vector<int> pos = positions_of(order);
  for (int v : order) {
    int parent = -1;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    }
    if (parent < 0) continue;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != parent && !g.has_edge(parent, w)) {
        return PeoViolation{v, parent, w};
      }
    }
  }
  return std::nullopt;
}

// Shortest path from a to b avoiding `blocked`; empty if none.
std::vector<int> shortest_path_avoiding(const Graph& g, int a, int b,
                                        const std::vector<char>& blocked) {
  std::vector<int> prev(g.size(), -2);
  std::queue<int> frontier;
  prev[a] = -1;
  frontier.push(a);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    if (v == b) break;
    for (int w : g.neighbors(v)) {
      if (prev[w] == -2 && !blocked[w]) {
        prev[w] = v;
        frontier.push(w);
      }
    }
  }
  if (prev[b] == -2) return {};
  std::vector<int> path;
  for (int v = b; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Hole through v, a, b where a and b are non-adjacent neighbors of v: the
// shortest a-b path outside N[v] closes a chordless cycle with v.
std::vector<int> hole_through(const Graph& g, int v, int a, int b) {
  std::vector<char> blocked(g.size(), 0);
  blocked[v] = 1;
  for (int w : g.neighbors(v)) blocked[w] = 1;
  blocked[a] = 0;
  blocked[b] = 0;
  std::vector<int> path = shortest_path_avoiding(g, a, b, blocked);
  if (path.empty()) return {};
  std::vector<int> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

// Exhaustive fallback: every hole passes through some v whose two cycle
// neighbors a, b share a component of g - N[v].
std::vector<int> find_any_hole(const Graph& g) {
  for (int v = 0; v < g.size(); ++v) {
    VertexSet closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.push_back(v);
    for (const VertexSet& component : connected_components_without(g, closed)) {
      std::vector<char> in_component(g.size(), 0);
      for (int u : component) in_component[u] = 1;
      std::vector<int> attached;
      for (int a : g.neighbors(v)) {
        for (int u : g.neighbors(a)) {
          if (in_component[u]) {
            attached.push_back(a);
            break;
          }
        }
      }
      for (std::size_t i = 0; i < attached.size(); ++i) {
        for (std::size_t j = i + 1; j < attached.size(); ++j) {
          if (!g.has_edge(attached[i], attached[j])) {
            std::vector<int> hole = hole_through(g, v, attached[i], attached[j]);
            if (!hole.empty()) return hole;
          }
        }
      }
    }
  }
  return {};
}

void require_peo(const Graph& g, std::span<const int> peo) {
  if (!is_permutation_of_vertices(g, peo)) {
    throw Error(Errc::kInvalidPeo, "ordering is not a permutation of V");
  }
  if (auto bad = find_peo_violation(g, peo)) {
    throw Error(Errc::kInvalidPeo,
                "later neighbors of vertex " + std::to_string(bad->vertex) +
                    " are not a clique");
  }
}

}  // namespace

Measure::Measure(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(Errc::kInvalidMeasure, "weights must be finite and >= 0");
    }
    total_ += w;
  }
}

Measure Measure::uniform(int n) {
  return Measure(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

double Measure::of(std::span<const int> vertices) const {
  double sum = 0.0;
  for (int v : vertices) sum += weights_[v];
  return sum;
}

std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.size();
  // Unvisited vertices live in order[i..n) as consecutive cells; the first
  // cell holds the lexicographically largest labels.
  struct Cell {
    int start;
    int end;
    int stamp;
    int moved;
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<Cell> cells;
  std::vector<int> cell_of(n, 0);
  if (n > 0) cells.push_back({0, n, -1, 0});

  auto swap_positions = [&](int i, int j) {
    std::swap(order[i], order[j]);
    pos[order[i]] = i;
    pos[order[j]] = j;
  };

  std::vector<int> touched;
  for (int i = 0; i < n; ++i) {
    Cell& first = cells[cell_of[order[i]]];
    int pick = i;
    for (int p = first.start; p < first.end; ++p) {
      if (order[p] < order[pick]) pick = p;
    }
    swap_positions(i, pick);
    const int pivot = order[i];
    ++first.start;

    touched.clear();
    for (int w : g.neighbors(pivot)) {
      if (pos[w] <= i) continue;
      const int c = cell_of[w];
      Cell& cell = cells[c];
      if (cell.stamp != i) {
        cell.stamp = i;
        cell.moved = 0;
        touched.push_back(c);
      }
      swap_positions(pos[w], cell.start + cell.moved);
      ++cell.moved;
    }
    for (int c : touched) {
      Cell cell = cells[c];
      if (cell.moved == cell.end - cell.start) continue;
      const int fresh = static_cast<int>(cells.size());
      cells.push_back({cell.start, cell.start + cell.moved, -1, 0});
      for (int p = cell.start; p < cell.start + cell.moved; ++p) {
        cell_of[order[p]] = fresh;
      }
      cells[c].start += cell.moved;
    }
  }
  return order;
}

ChordalityResult is_chordal(const Graph& g) {
  std::vector<int> visit = lex_bfs(g);
  std::vector<int> peo(visit.rbegin(), visit.rend());
  auto bad = find_peo_violation(g, peo);
  if (!bad) return {true, PerfectEliminationOrder{std::move(peo)}};

  std::vector<int> hole = hole_through(g, bad->vertex, bad->parent, bad->missed);
  if (hole.empty() || !verify_hole(g, hole)) hole = find_any_hole(g);
  if (hole.empty()) {
    throw std::logic_error("Lex-BFS order failed but no hole was found");
  }
  return {false, ChordlessCycle{std::move(hole)}};
}

bool verify_peo(const Graph& g, std::span<const int> order) {
  if (!is_permutation_of_vertices(g, order)) return false;
  std::vector<int> pos = positions_of(order);
  std::vector<int> later;
  for (int v = 0; v < g.size(); ++v) {
    later.clear();
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.has_edge(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

bool verify_hole(const Graph& g, std::span<const int> cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  std::vector<int> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (int v : cycle) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool verify_certificate(const Graph& g, const ChordalCertificate& cert) {
  if (const auto* peo = std::get_if<PerfectEliminationOrder>(&cert)) {
    return verify_peo(g, peo->order);
  }
  return verify_hole(g, std::get<ChordlessCycle>(cert).cycle);
}

bool certifies_chordal(const Graph& g, const ChordalCertificate& cert) {
  const auto* peo = std::get_if<PerfectEliminationOrder>(&cert);
  return peo != nullptr && verify_peo(g, peo->order);
}

CliqueTree clique_tree(const Graph& g, std::span<const int> peo) {
  require_peo(g, peo);
  std::vector<int> pos = positions_of(peo);
  CliqueTree tree;
  std::vector<int> clique_of(g.size(), -1);
  std::vector<int> roots;
  std::vector<int> later;

  // Walk the PEO backwards. The later neighbors of v always sit inside the
  // bag holding its parent; v either extends that bag or starts a new one.
  for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
    const int v = *it;
    later.clear();
    int parent = -1;
    for (int w : g.neighbors(v)) {
      if (pos[w] <= pos[v]) continue;
      later.push_back(w);
      if (parent < 0 || pos[w] < pos[parent]) parent = w;
    }
    if (parent < 0) {
      clique_of[v] = static_cast<int>(tree.bags.size());
      roots.push_back(clique_of[v]);
      tree.bags.push_back({v});
      continue;
    }
    const int host = clique_of[parent];
    if (later.size() == tree.bags[host].size()) {
      tree.bags[host].push_back(v);
      clique_of[v] = host;
    } else {
      const int fresh = static_cast<int>(tree.bags.size());
      later.push_back(v);
      tree.bags.push_back(later);
      tree.tree_edges.emplace_back(host, fresh);
      clique_of[v] = fresh;
    }
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    tree.tree_edges.emplace_back(roots[i - 1], roots[i]);
  }
  for (VertexSet& bag : tree.bags) bag = normalize(std::move(bag));
  return tree;
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g,
                                               std::span<const int> peo) {
  return clique_tree(g, peo).bags;
}

bool verify_clique_tree(const Graph& g, const CliqueTree& tree) {
  const int bag_count = static_cast<int>(tree.bags.size());
  if (g.size() == 0) return bag_count == 0 && tree.tree_edges.empty();
  if (static_cast<int>(tree.tree_edges.size()) != bag_count - 1) return false;

  std::vector<std::vector<int>> bags_of(g.size());
  for (int b = 0; b < bag_count; ++b) {
    const VertexSet& bag = tree.bags[b];
    if (bag.empty() || !is_clique(g, bag)) return false;
    for (int v : bag) bags_of[v].push_back(b);
    // Maximal: no outside vertex sees the whole bag.
    for (int u = 0; u < g.size(); ++u) {
      if (std::binary_search(bag.begin(), bag.end(), u)) continue;
      bool sees_all = true;
      for (int v : bag) {
        if (!g.has_edge(u, v)) {
          sees_all = false;
          break;
        }
      }
      if (sees_all) return false;
    }
  }

  std::vector<std::vector<int>> adj(bag_count);
  for (auto [a, b] : tree.tree_edges) {
    if (a < 0 || b < 0 || a >= bag_count || b >= bag_count || a == b) {
      return false;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // Connected + (|E| = |bags| - 1) means tree. Then the bags holding a
  // vertex must be connected inside the tree.
  auto connected_within = [&](const std::vector<char>& allowed, int start) {
    std::vector<char> seen(bag_count, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      ++reached;
      for (int c : adj[b]) {
        if (allowed[c] && !seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
    return reached;
  };
  if (connected_within(std::vector<char>(bag_count, 1), 0) != bag_count) {
    return false;
  }
  for (int v = 0; v < g.size(); ++v) {
    if (bags_of[v].empty()) return false;
    std::vector<char> allowed(bag_count, 0);
    for (int b : bags_of[v]) allowed[b] = 1;
    if (connected_within(allowed, bags_of[v].front()) !=
        static_cast<int>(bags_of[v].size())) {
      return false;
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int b : bags_of[e.u]) {
      const VertexSet& bag = tree.bags[b];
      if (std::binary_search(bag.begin(), bag.end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

VertexSet balanced_clique_separator(const Graph& g, const Measure& mu,
                                    double balance) {
  if (balance < 2.0 / 3.0 - 1e-12) {
    throw Error(Errc::kInvalidArgument, "balance must be at least 2/3");
  }
  if (mu.size() != g.size()) {
    throw Error(Errc::kInvalidArgument, "measure size does not match graph");
  }
  ChordalityResult chordal = is_chordal(g);
  if (!chordal.chordal) throw Error(Errc::kNotChordal, "graph has a hole");
  if (g.size() == 0) return {};

  const auto& peo = std::get<PerfectEliminationOrder>(chordal.certificate).order;
  CliqueTree tree = clique_tree(g, peo);
  const int bag_count = static_cast<int>(tree.bags.size());
  std::vector<std::vector<int>> adj(bag_count);
  for (auto [a, b] : tree.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> home_bag(g.size(), -1);
  for (int b = 0; b < bag_count; ++b) {
    for (int v : tree.bags[b]) {
      if (home_bag[v] < 0) home_bag[v] = b;
    }
  }

  const double limit = balance * mu.total() + 1e-9 * mu.total();
  int current = 0;
  int previous = -1;
  for (int step = 0; step <= bag_count; ++step) {
    const VertexSet& bag = tree.bags[current];
    double heaviest = -1.0;
    int heavy_vertex = -1;
    for (const VertexSet& component : connected_components_without(g, bag)) {
      double m = mu.of(component);
      if (m > heaviest) {
        heaviest = m;
        heavy_vertex = component.front();
      }
    }
    if (heavy_vertex < 0 || heaviest <= limit) return bag;

    // First step on the tree path from `current` toward a bag that holds
    // part of the heavy component.
    const int target = home_bag[heavy_vertex];
    std::vector<int> via(bag_count, -1);
    std::queue<int> frontier;
    via[current] = current;
    frontier.push(current);
    while (!frontier.empty()) {
      int b = frontier.front();
      frontier.pop();
      for (int c : adj[b]) {
        if (via[c] < 0) {
          via[c] = (b == current) ? c : via[b];
          frontier.push(c);
        }
      }
    }
    const int next = via[target];
    if (next == previous || next == current) {
      throw std::logic_error("clique-tree walk failed to make progress");
    }
    previous = current;
    current = next;
  }
  throw std::logic_error("clique-tree walk did not terminate");
}

}  // namespace apexsep
