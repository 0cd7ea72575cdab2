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

#ifndef APEXSEP_CLIQUECOVER_H_
#define APEXSEP_CLIQUECOVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apexsep/graph.h"

namespace apexsep {

// Ordered sequence C_0..C_t of disjoint cliques covering every vertex.
struct OrderedCliqueCover {
  std::vector<VertexSet> blocks;

  friend bool operator==(const OrderedCliqueCover&,
                         const OrderedCliqueCover&) = default;
};

struct CoverCheck {
  bool ok = true;
  std::string failure;  // first violated condition when !ok

  explicit operator bool() const { return ok; }
};

// Blocks pairwise disjoint, union = V(g), every block a clique of g.
CoverCheck verify_cover(const Graph& g, const OrderedCliqueCover& cover);

// Edge xy with x in block_x, y in block_y attaining the width.
struct WidthWitness {
  int x = 0;
  int y = 0;
  int block_x = 0;
  int block_y = 0;
};

struct WidthReport {
  int width = 0;
  std::optional<WidthWitness> witness;  // empty when no edge crosses blocks
};

// max over edges xy of |block(x) - block(y)|, with the lexicographically
// first attaining edge as witness. Throws Error(kInvalidCover) when the cover
// does not verify.
WidthReport cover_width(const Graph& g, const OrderedCliqueCover& cover);

// Largest index gap spanned by an edge; `ordering` must be a permutation.
int ordering_width(const Graph& g, std::span<const int> ordering);

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

struct CcwResult {
  int width = 0;
  OrderedCliqueCover cover;
  bool exact = false;
  std::uint64_t nodes = 0;
};

struct BandwidthResult {
  int width = 0;
  std::vector<int> ordering;
  bool exact = false;
  std::uint64_t nodes = 0;
};

// Minimum clique cover width by branch and bound. When the node budget runs
// out the best cover found so far is returned with exact == false.
CcwResult ccw_exact(const Graph& g,
                    std::uint64_t budget = kDefaultSearchBudget);

// Minimum bandwidth by branch and bound over left-to-right layouts, with the
// same budget semantics as ccw_exact.
BandwidthResult bandwidth_exact(const Graph& g,
                                std::uint64_t budget = kDefaultSearchBudget);

// Heuristic cover from BFS sweeps; `exact` is always false.
CcwResult ccw_upper_greedy(const Graph& g);

}  // namespace apexsep

#endif  // APEXSEP_CLIQUECOVER_H_
