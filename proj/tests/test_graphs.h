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

#ifndef APEXSEP_TESTS_TEST_GRAPHS_H_
#define APEXSEP_TESTS_TEST_GRAPHS_H_

#include <random>
#include <vector>

#include "apexsep/graph.h"

namespace apexsep::testing {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::plain(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::plain(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph::plain(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::plain(leaves + 1, e);
}

inline Graph empty_graph(int n) { return Graph::plain(n, {}); }

// Graph on n vertices whose edges are the set bits of `mask` over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline Graph from_mask(int n, unsigned long long mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1ULL) e.push_back({u, v});
  return Graph::plain(n, e);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::plain(n, e);
}

// Random chordal graph: each new vertex attaches to a random clique of the
// neighborhood-closed prefix (a subset of an existing vertex's earlier
// clique), giving a reverse perfect elimination order.
inline Graph random_chordal(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> cliques;  // cliques[v] = {v} ∪ attach set
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    std::vector<int> attach;
    if (v > 0) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      const auto& base = cliques[pick(rng)];
      std::bernoulli_distribution keep(0.6);
      for (int u : base)
        if (keep(rng)) attach.push_back(u);
    }
    for (int u : attach) e.push_back({u, v});
    attach.push_back(v);
    cliques.push_back(attach);
  }
  return Graph::plain(n, e);
}

inline Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return Graph::plain(g.size(), e);
}

}  // namespace apexsep::testing

#endif  // APEXSEP_TESTS_TEST_GRAPHS_H_
