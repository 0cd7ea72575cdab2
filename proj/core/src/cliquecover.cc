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

#include "apexsep/cliquecover.h"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

#include "apexsep/error.h"

namespace apexsep {
namespace {

// Per-component solving: both widths of a disconnected graph are the maximum
// over its components, and per-component solutions concatenate.
template <typename Solve>
void for_each_component(const Graph& g, Solve&& solve) {
  for (const VertexSet& component : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, component);
    solve(sub);
  }
}

std::vector<int> bfs_order(const Graph& g, int start) {
  std::vector<int> order;
  std::vector<char> seen(g.size(), 0);
  std::queue<int> frontier;
  seen[start] = 1;
  frontier.push(start);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
    }
  }
  return order;
}

std::vector<int> sweep_starts(const Graph& g) {
  std::vector<int> starts(g.size());
  std::iota(starts.begin(), starts.end(), 0);
  if (g.size() <= 64) return starts;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  starts.resize(16);
  return starts;
}

// Greedy clique blocks along a BFS order: each block starts at the first
// unassigned vertex and absorbs later unassigned vertices adjacent to the
// whole block.
OrderedCliqueCover sweep_cover(const Graph& g, std::span<const int> order) {
  std::vector<int> rank(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<char> used(g.size(), 0);
  OrderedCliqueCover cover;
  for (int v : order) {
    if (used[v]) continue;
    used[v] = 1;
    VertexSet block{v};
    std::vector<int> candidates;
    for (int w : g.neighbors(v)) {
      if (!used[w]) candidates.push_back(w);
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](int a, int b) { return rank[a] < rank[b]; });
    for (int w : candidates) {
      bool fits = true;
      for (int b : block) {
        if (!g.has_edge(w, b)) {
          fits = false;
          break;
        }
      }
      if (fits) {
        block.push_back(w);
        used[w] = 1;
      }
    }
    cover.blocks.push_back(normalize(std::move(block)));
  }
  return cover;
}

OrderedCliqueCover singleton_cover(std::span<const int> order) {
  OrderedCliqueCover cover;
  for (int v : order) cover.blocks.push_back({v});
  return cover;
}

// Width of a cover assumed valid; no verification.
int raw_cover_width(const Graph& g, const OrderedCliqueCover& cover) {
  std::vector<int> block(g.size(), 0);
  for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
    for (int v : cover.blocks[i]) block[v] = static_cast<int>(i);
  }
  int width = 0;
  for (const Edge& e : g.edges()) {
    width = std::max(width, std::abs(block[e.u] - block[e.v]));
  }
  return width;
}

OrderedCliqueCover lift(const OrderedCliqueCover& local,
                        std::span<const int> original) {
  OrderedCliqueCover out;
  for (const VertexSet& block : local.blocks) {
    VertexSet mapped;
    for (int v : block) mapped.push_back(original[v]);
    out.blocks.push_back(normalize(std::move(mapped)));
  }
  return out;
}

CcwResult greedy_connected(const Graph& g) {
  CcwResult best;
  best.width = INT_MAX;
  for (int start : sweep_starts(g)) {
    std::vector<int> order = bfs_order(g, start);
    for (OrderedCliqueCover cover : {sweep_cover(g, order), singleton_cover(order)}) {
      int w = raw_cover_width(g, cover);
      if (w < best.width) {
        best.width = w;
        best.cover = std::move(cover);
      }
    }
  }
  return best;
}

// Vertices of a connected graph are mapped to integer block positions with
// the first vertex pinned at 0 and the second at >= 0 (mirror symmetry).
// Non-adjacent vertices need distinct positions; a position is only tried if
// every already-placed neighbor is closer than the incumbent width.
class CcwSearch {
 public:
  CcwSearch(const Graph& g, int incumbent, std::uint64_t budget)
      : g_(g), best_(incumbent), budget_(budget), value_(g.size(), kUnset) {
    int start = 0;
    for (int v = 1; v < g.size(); ++v) {
      if (g.degree(v) > g.degree(start)) start = v;
    }
    order_ = bfs_order(g, start);
    lower_bound_ = is_clique(g, order_) ? 0 : 1;
  }

  void run() {
    if (best_ > lower_bound_) dfs(0);
  }

  int best() const { return best_; }
  bool improved() const { return !best_values_.empty(); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  OrderedCliqueCover best_cover() const {
    std::vector<int> values = best_values_;
    std::vector<int> distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    OrderedCliqueCover cover;
    cover.blocks.resize(distinct.size());
    for (int v = 0; v < g_.size(); ++v) {
      auto it = std::lower_bound(distinct.begin(), distinct.end(), values[v]);
      cover.blocks[it - distinct.begin()].push_back(v);
    }
    return cover;
  }

 private:
  static constexpr int kUnset = INT_MIN;

  void dfs(std::size_t depth) {
    if (aborted_ || best_ <= lower_bound_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (depth == order_.size()) {
      int width = 0;
      for (const Edge& e : g_.edges()) {
        width = std::max(width, std::abs(value_[e.u] - value_[e.v]));
      }
      if (width < best_) {
        best_ = width;
        best_values_ = value_;
      }
      return;
    }
    const int v = order_[depth];
    if (depth == 0) {
      value_[v] = 0;
      dfs(1);
      value_[v] = kUnset;
      return;
    }
    long lo = LONG_MIN / 4;
    long hi = LONG_MAX / 4;
    for (int u : g_.neighbors(v)) {
      if (value_[u] == kUnset) continue;
      lo = std::max(lo, static_cast<long>(value_[u]) - (best_ - 1));
      hi = std::min(hi, static_cast<long>(value_[u]) + (best_ - 1));
    }
    if (depth == 1) lo = std::max(lo, 0L);
    for (long candidate = lo; candidate <= hi; ++candidate) {
      bool clash = false;
      for (std::size_t i = 0; i < depth; ++i) {
        int u = order_[i];
        if (value_[u] == candidate && !g_.has_edge(u, v)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      value_[v] = static_cast<int>(candidate);
      dfs(depth + 1);
      value_[v] = kUnset;
      if (aborted_ || best_ <= lower_bound_) return;
      // The window narrows as the incumbent improves.
      long new_hi = LONG_MAX / 4;
      for (int u : g_.neighbors(v)) {
        if (value_[u] != kUnset) {
          new_hi = std::min(new_hi, static_cast<long>(value_[u]) + (best_ - 1));
        }
      }
      hi = std::min(hi, new_hi);
    }
  }

  const Graph& g_;
  int best_;
  std::uint64_t budget_;
  std::vector<int> value_;
  std::vector<int> order_;
  std::vector<int> best_values_;
  int lower_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Decides bandwidth <= w by filling positions left to right. A vertex placed
// at p forces its unplaced neighbors into positions <= p + w; states that
// failed are memoized on (placed set, last w vertices) for small graphs.
class BandwidthSearch {
 public:
  BandwidthSearch(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget) {}

  bool decide(int w) {
    width_ = w;
    const int n = g_.size();
    pos_.assign(n, -1);
    deadline_.assign(n, INT_MAX);
    placed_order_.clear();
    failed_.clear();
    mask_ = 0;
    return dfs();
  }

  const std::vector<int>& ordering() const { return placed_order_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool memo_enabled() const { return g_.size() <= 64; }

  std::string state_key() const {
    std::string key(reinterpret_cast<const char*>(&mask_), sizeof(mask_));
    const int p = static_cast<int>(placed_order_.size());
    for (int i = std::max(0, p - width_); i < p; ++i) {
      key.push_back(static_cast<char>(placed_order_[i]));
    }
    return key;
  }

  bool feasible(int p) const {
    std::vector<int> deadlines;
    for (int u = 0; u < g_.size(); ++u) {
      if (pos_[u] < 0 && deadline_[u] != INT_MAX) deadlines.push_back(deadline_[u]);
    }
    std::sort(deadlines.begin(), deadlines.end());
    for (std::size_t j = 0; j < deadlines.size(); ++j) {
      if (deadlines[j] < p + static_cast<int>(j)) return false;
    }
    return true;
  }

  bool dfs() {
    const int n = g_.size();
    const int p = static_cast<int>(placed_order_.size());
    if (p == n) return true;
    if (aborted_) return false;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (!feasible(p)) return false;
    std::string key;
    if (memo_enabled()) {
      key = state_key();
      if (failed_.count(key)) return false;
    }

    int forced = -1;
    for (int u = 0; u < n; ++u) {
      if (pos_[u] < 0 && deadline_[u] == p) forced = u;
    }
    for (int v = 0; v < n; ++v) {
      if (pos_[v] >= 0 || (forced >= 0 && v != forced)) continue;
      pos_[v] = p;
      placed_order_.push_back(v);
      if (memo_enabled()) mask_ |= std::uint64_t{1} << v;
      std::vector<std::pair<int, int>> undo;
      for (int u : g_.neighbors(v)) {
        if (pos_[u] < 0 && deadline_[u] > p + width_) {
          undo.emplace_back(u, deadline_[u]);
          deadline_[u] = p + width_;
        }
      }
      if (dfs()) return true;
      for (auto [u, d] : undo) deadline_[u] = d;
      if (memo_enabled()) mask_ &= ~(std::uint64_t{1} << v);
      placed_order_.pop_back();
      pos_[v] = -1;
      if (aborted_) return false;
    }
    if (memo_enabled()) failed_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  int width_ = 0;
  std::vector<int> pos_;
  std::vector<int> deadline_;
  std::vector<int> placed_order_;
  std::uint64_t mask_ = 0;
  std::unordered_set<std::string> failed_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

BandwidthResult bandwidth_connected(const Graph& g, std::uint64_t budget) {
  BandwidthResult result;
  if (g.size() <= 1) {
    result.exact = true;
    for (int v = 0; v < g.size(); ++v) result.ordering.push_back(v);
    return result;
  }
  // Cuthill-McKee style upper bound.
  result.width = INT_MAX;
  for (int start : sweep_starts(g)) {
    std::vector<int> order = bfs_order(g, start);
    int w = ordering_width(g, order);
    if (w < result.width) {
      result.width = w;
      result.ordering = std::move(order);
    }
  }
  int max_degree = 0;
  for (int v = 0; v < g.size(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const int diam = diameter(g);
  const int lower = std::max((max_degree + 1) / 2,
                             (g.size() - 1 + diam - 1) / std::max(diam, 1));

  BandwidthSearch search(g, budget);
  for (int w = std::max(lower, 1); w < result.width; ++w) {
    if (search.decide(w)) {
      result.width = w;
      result.ordering = search.ordering();
      break;
    }
    if (search.aborted()) break;
  }
  result.exact = !search.aborted();
  result.nodes = search.nodes();
  return result;
}

}  // namespace

CoverCheck verify_cover(const Graph& g, const OrderedCliqueCover& cover) {
  std::vector<int> owner(g.size(), -1);
  for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
    const VertexSet& block = cover.blocks[i];
    if (block.empty()) {
      return {false, "block " + std::to_string(i) + " is empty"};
    }
    for (int v : block) {
      if (!g.contains(v)) {
        return {false, "block " + std::to_string(i) + " names vertex " +
                           std::to_string(v) + " outside the graph"};
      }
      if (owner[v] >= 0) {
        return {false, "vertex " + std::to_string(v) + " appears in blocks " +
                           std::to_string(owner[v]) + " and " +
                           std::to_string(i)};
      }
      owner[v] = static_cast<int>(i);
    }
    if (!is_clique(g, block)) {
      return {false, "block " + std::to_string(i) + " is not a clique"};
    }
  }
  for (int v = 0; v < g.size(); ++v) {
    if (owner[v] < 0) {
      return {false, "vertex " + std::to_string(v) + " is not covered"};
    }
  }
  return {};
}

WidthReport cover_width(const Graph& g, const OrderedCliqueCover& cover) {
  if (CoverCheck check = verify_cover(g, cover); !check) {
    throw Error(Errc::kInvalidCover, check.failure);
  }
  std::vector<int> block(g.size(), 0);
  for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
    for (int v : cover.blocks[i]) block[v] = static_cast<int>(i);
  }
  WidthReport report;
  for (const Edge& e : g.edges()) {
    const int gap = std::abs(block[e.u] - block[e.v]);
    if (gap > report.width) {
      report.width = gap;
      report.witness = WidthWitness{e.u, e.v, block[e.u], block[e.v]};
    }
  }
  return report;
}

int ordering_width(const Graph& g, std::span<const int> ordering) {
  if (static_cast<int>(ordering.size()) != g.size()) {
    throw Error(Errc::kInvalidArgument, "ordering must list every vertex once");
  }
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const int v = ordering[i];
    if (!g.contains(v) || pos[v] >= 0) {
      throw Error(Errc::kInvalidArgument, "ordering must list every vertex once");
    }
    pos[v] = static_cast<int>(i);
  }
  int width = 0;
  for (const Edge& e : g.edges()) width = std::max(width, std::abs(pos[e.u] - pos[e.v]));
  return width;
}

CcwResult ccw_upper_greedy(const Graph& g) {
  CcwResult result;
  for_each_component(g, [&](const InducedSubgraph& sub) {
    CcwResult local = greedy_connected(sub.graph);
    result.width = std::max(result.width, local.width);
    for (VertexSet& block : lift(local.cover, sub.original).blocks) {
      result.cover.blocks.push_back(std::move(block));
    }
  });
  return result;
}

CcwResult ccw_exact(const Graph& g, std::uint64_t budget) {
  CcwResult result;
  result.exact = true;
  for_each_component(g, [&](const InducedSubgraph& sub) {
    CcwResult local = greedy_connected(sub.graph);
    const std::uint64_t left = budget > result.nodes ? budget - result.nodes : 0;
    CcwSearch search(sub.graph, local.width, left);
    search.run();
    result.nodes += search.nodes();
    if (search.aborted()) result.exact = false;
    if (search.improved()) {
      local.cover = search.best_cover();
      local.width = raw_cover_width(sub.graph, local.cover);
    }
    result.width = std::max(result.width, local.width);
    for (VertexSet& block : lift(local.cover, sub.original).blocks) {
      result.cover.blocks.push_back(std::move(block));
    }
  });
  return result;
}

BandwidthResult bandwidth_exact(const Graph& g, std::uint64_t budget) {
  BandwidthResult result;
  result.exact = true;
  for_each_component(g, [&](const InducedSubgraph& sub) {
    const std::uint64_t left = budget > result.nodes ? budget - result.nodes : 0;
    BandwidthResult local = bandwidth_connected(sub.graph, left);
    result.nodes += local.nodes;
    result.exact = result.exact && local.exact;
    result.width = std::max(result.width, local.width);
    for (int v : local.ordering) result.ordering.push_back(sub.original[v]);
  });
  return result;
}

}  // namespace apexsep
