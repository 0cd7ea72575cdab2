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

#ifndef APEXSEP_CHORDAL_H_
#define APEXSEP_CHORDAL_H_

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "apexsep/graph.h"
#include "apexsep/measure.h"

namespace apexsep {

// Vertex order in which each vertex's later neighbors form a clique.
struct PerfectEliminationOrder {
  std::vector<int> order;
};

// Cyclic vertex sequence of length >= 4 with no chords.
struct ChordlessCycle {
  std::vector<int> cycle;
};

using ChordalCertificate = std::variant<PerfectEliminationOrder, ChordlessCycle>;

struct ChordalityResult {
  bool chordal = false;
  ChordalCertificate certificate;
};

// Lexicographic breadth-first search visit order. Ties are broken by the
// smallest vertex index, so the first visited vertex is 0.
std::vector<int> lex_bfs(const Graph& g);

// Recognition by Lex-BFS. Either branch of the certificate is re-verifiable
// with verify_certificate().
ChordalityResult is_chordal(const Graph& g);

// Straightforward checkers that do not share code with is_chordal(): the PEO
// check tests every pair of later neighbors directly.
bool verify_peo(const Graph& g, std::span<const int> order);
bool verify_hole(const Graph& g, std::span<const int> cycle);
bool verify_certificate(const Graph& g, const ChordalCertificate& cert);
// True when `cert` holds a PEO that verifies, i.e. certifies chordality.
bool certifies_chordal(const Graph& g, const ChordalCertificate& cert);

struct CliqueTree {
  std::vector<VertexSet> bags;                    // maximal cliques
  std::vector<std::pair<int, int>> tree_edges;    // bag index pairs
};

// Clique tree built from a perfect elimination order. Disconnected graphs get
// their per-component trees chained by edges with empty separators. Throws
// Error(kInvalidPeo) if `peo` is not a perfect elimination order of g.
CliqueTree clique_tree(const Graph& g, std::span<const int> peo);

// The bags of clique_tree(g, peo).
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g,
                                               std::span<const int> peo);

// Checks the clique-tree invariants (maximal bags, tree shape, running
// intersection, edge coverage) against g.
bool verify_clique_tree(const Graph& g, const CliqueTree& tree);

// Bag S of a clique tree of chordal g such that every component of g - S has
// measure <= balance * mu.total(). Found by walking the clique tree toward the
// heaviest component. Throws Error(kNotChordal) if g is not chordal and
// Error(kInvalidArgument) if balance < 2/3 or mu does not match g.
VertexSet balanced_clique_separator(const Graph& g, const Measure& mu,
                                    double balance = 2.0 / 3.0);

}  // namespace apexsep

#endif  // APEXSEP_CHORDAL_H_
