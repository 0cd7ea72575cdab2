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

#ifndef APEXSEP_CONSTRUCTIONS_H_
#define APEXSEP_CONSTRUCTIONS_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apexsep/chordal.h"
#include "apexsep/cliquecover.h"
#include "apexsep/graph.h"

namespace apexsep {

// G = G_1 ∩ ... ∩ G_d with G_1 chordal and an ordered clique cover for each
// later factor.
struct Factorization {
  Graph base;
  std::vector<Graph> factors;
  ChordalCertificate chordal_cert;           // for factors[0]
  std::vector<OrderedCliqueCover> covers;    // covers[i] covers factors[i + 1]
  std::vector<int> widths;                   // claimed width of covers[i]
  int lstar = 0;                             // max of widths
  std::optional<int> width_bound;            // what the construction promises

  // Provenance, used for reports and CSV rows.
  std::string family;
  int n = 0;
  int k = 0;

  int d() const { return static_cast<int>(factors.size()); }
};

// Pairs of 1-based apex indices.
using ApexEdges = std::vector<std::pair<int, int>>;

ApexEdges complete_apex_edges(int k);

// n x n grid; vertex (r, c) has index (r - 1) * n + (c - 1).
Graph grid(int n);

// grid(n) followed by k apex vertices adjacent to every grid vertex, plus
// `apex_edges` among the apexes. Apex a has index n*n + a - 1.
Graph apex_grid(int k, int n, const ApexEdges& apex_edges = {});

// Chordal factor: grid vertices adjacent iff their rows differ by at most
// one, apexes complete and joined to the grid. Second factor: the grid with
// every column made a clique, apexes joined to the grid, apex edges as given.
// The cover lists columns 1..ceil(n/2), the k apex singletons, then the
// remaining columns, so its width is at most ceil(n/2) + k.
Factorization factorize_apex_grid(int k, int n,
                                  const ApexEdges& apex_edges = {});

// Identification of the next part onto the running sum.
struct Junction {
  // (vertex of the running sum, vertex of the next part)
  std::vector<std::pair<int, int>> identify;
  // E': edges of the identified clique dropped from the result, given as
  // running-sum indices.
  std::vector<Edge> removed;
};

struct CliqueSumResult {
  Graph graph;
  // vertex_map[p][v] is the index in `graph` of vertex v of part p.
  std::vector<std::vector<int>> vertex_map;
};

// Iterated clique sum parts[0] ⊕ parts[1] ⊕ ... with junctions[i] gluing
// parts[i + 1]. New vertices of part p are relabeled into part p; identified
// vertices keep the earliest label. Throws Error(kJunctionNotClique) or
// Error(kBadRemovedEdge) when the preconditions fail.
CliqueSumResult clique_sum_mapped(std::span<const Graph> parts,
                                  std::span<const Junction> junctions);
Graph clique_sum(std::span<const Graph> parts,
                 std::span<const Junction> junctions);

struct CliqueSumPart {
  int k = 0;
  int n = 0;
  ApexEdges apex_edges;  // must make the apex set complete
};

struct CliqueSumSpec {
  std::vector<CliqueSumPart> parts;
  // Apex pairs removed once all parts are glued.
  ApexEdges removed_edges;
};

// The clique sum of the apex grids in `spec`, glued at their apex sets.
Graph clique_sum_base(const CliqueSumSpec& spec);

// Sums the per-part apex-grid factorizations. The merged cover interleaves
// the part covers round-robin around the shared apex blocks; its width is at
// most the sum over parts of (n_i + k_i).
Factorization factorize_clique_sum(const CliqueSumSpec& spec);

// k blocks of n-cliques; the first ceil(n/2) vertices of consecutive blocks
// are completely joined. Second factor is the graph itself with its block
// cover, first factor adds every edge between consecutive blocks.
Factorization example3_i(int n, int k);

// Each grid(n) cell blown up into a k-clique, grid edges becoming complete
// bipartite joins. Factors: sliding row-pair cliques and column cliques.
Factorization example3_ii(int n, int k);

}  // namespace apexsep

#endif  // APEXSEP_CONSTRUCTIONS_H_
