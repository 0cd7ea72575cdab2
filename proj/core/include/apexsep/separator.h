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

#ifndef APEXSEP_SEPARATOR_H_
#define APEXSEP_SEPARATOR_H_

#include <span>
#include <vector>

#include "apexsep/constructions.h"
#include "apexsep/measure.h"
#include "apexsep/verify.h"

namespace apexsep {

struct SeparatorResult {
  VertexSet separator;
  std::vector<VertexSet> separator_cliques;  // partition of separator
  VertexSet side_a;
  VertexSet side_b;
  double mu_total = 0.0;
  double mu_a = 0.0;
  double mu_b = 0.0;
  double mu_separator = 0.0;
  int lstar = 0;
  int d = 0;
  // 2^d * lstar^((d-1)/d) * mu^((d-1)/d)
  double bound_value = 0.0;
  // Same with lstar replaced by (prod of cover widths)^(1/(d-1)).
  double alt_bound_value = 0.0;
};

// Balanced separator of f.base: a clique-tree bag of factor 1 whose removal
// leaves components of measure <= 2/3 of the total, the components packed
// greedily into two sides, and the bag covered by product cells. All result
// invariants are checked before returning. Throws
// Error(kInvalidFactorization) if f does not verify.
SeparatorResult separate(const Factorization& f, const Measure& mu);

// Groups the vertices of s by their tuple of block indices, one index per
// cover. Each group is a clique of every factor and therefore of the base.
// Groups come out ordered by tuple. Throws Error(kNotCliqueInFactorOne) if s
// is not a clique of factor 1.
std::vector<VertexSet> product_cell_cover(const Factorization& f,
                                          std::span<const int> s);

// Independent re-check of a separator result against the base graph.
VerificationReport verify_separator(const Graph& base, const Measure& mu,
                                    const SeparatorResult& result);

struct AuditReport {
  int apex_vertex = -1;
  VertexSet grid_clique;                    // S
  VertexSet independent_set;                // S'
  int grid_clique_size = 0;
  int indep_size = 0;
  std::vector<int> restricted_cover_sizes;  // |B_i| for each factor i >= 2
  int product_cells = 0;                    // cells needed to cover S'
  long long product_bound = 0;              // prod of restricted_cover_sizes
  bool independent_in_cofactors = false;    // S' independent in ∩_{i>=2} G_i
};

// Steps of the lower-bound argument on an apex-grid factorization: a maximum
// clique S of factor 1 restricted to grid vertices, the larger color class S'
// of S in the grid bipartition, the covers restricted to S plus apex
// `apex_index`, and the number of product cells that S' occupies. Throws
// Error(kNoApex) when no apex has that index and Error(kNotChordal) if
// factor 1 is not chordal.
AuditReport audit_lower_bound(const Factorization& f, int apex_index);

}  // namespace apexsep

#endif  // APEXSEP_SEPARATOR_H_
