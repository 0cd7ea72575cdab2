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

#include "apexsep/constructions.h"

#include <algorithm>
#include <set>

#include "apexsep/error.h"
#include "apexsep/verify.h"

namespace apexsep {
namespace {

int ceil_half(int n) { return (n + 1) / 2; }

void require_size(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kInvalidSize, what);
}

ApexEdges normalized_apex_edges(int k, const ApexEdges& apex_edges) {
  ApexEdges out;
  for (auto [a, b] : apex_edges) {
    if (a < 1 || b < 1 || a > k || b > k || a == b) {
      throw Error(Errc::kInvalidApexEdge,
                  "apex edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") invalid for k = " + std::to_string(k));
    }
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexLabel> apex_grid_labels(int k, int n) {
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(n) * n + k);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) labels.push_back(VertexLabel::grid_cell(0, r, c));
  }
  for (int a = 1; a <= k; ++a) labels.push_back(VertexLabel::apex(0, a));
  return labels;
}

Graph without_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::set<Edge> drop;
  for (Edge e : removed) drop.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!drop.count(e)) kept.push_back(e);
  }
  return Graph(g.labels(), std::move(kept));
}

// Fills in the certificate, widths and l*, then runs the independent checker.
Factorization finalize(Graph base, std::vector<Graph> factors,
                       std::vector<OrderedCliqueCover> covers,
                       std::optional<int> bound, std::string family, int n,
                       int k) {
  Factorization f;
  f.base = std::move(base);
  f.factors = std::move(factors);
  f.covers = std::move(covers);
  f.width_bound = bound;
  f.family = std::move(family);
  f.n = n;
  f.k = k;
  ChordalityResult chordal = is_chordal(f.factors.front());
  f.chordal_cert = std::move(chordal.certificate);
  for (std::size_t i = 0; i < f.covers.size(); ++i) {
    f.widths.push_back(cover_width(f.factors[i + 1], f.covers[i]).width);
  }
  f.lstar = f.widths.empty() ? 0 : *std::max_element(f.widths.begin(), f.widths.end());

  VerificationReport report = verify_factorization(f);
  if (const CheckResult* failure = report.first_failure()) {
    throw Error(Errc::kInvalidFactorization,
                f.family + ": " + failure->detail);
  }
  return f;
}

struct ApexPartValidation {
  int k = 0;
};

ApexPartValidation validate_spec(const CliqueSumSpec& spec) {
  if (spec.parts.empty()) throw Error(Errc::kEmptyParts, "no parts to sum");
  const int k = spec.parts.front().k;
  for (const CliqueSumPart& part : spec.parts) {
    if (part.k != k) {
      throw Error(Errc::kUnequalApexSizes,
                  "all parts must have the same number of apexes");
    }
    if (normalized_apex_edges(part.k, part.apex_edges) != complete_apex_edges(k)) {
      throw Error(Errc::kJunctionNotClique,
                  "apex set of every part must be complete");
    }
  }
  if (k == 0 && spec.parts.size() > 1) {
    throw Error(Errc::kJunctionNotClique, "cannot glue parts without apexes");
  }
  for (auto [a, b] : spec.removed_edges) {
    if (a < 1 || b < 1 || a > k || b > k || a == b) {
      throw Error(Errc::kBadRemovedEdge,
                  "removed edge (" + std::to_string(a) + "," +
                      std::to_string(b) + ") is not an apex pair");
    }
  }
  return {k};
}

// Junction i glues part i + 1's apexes onto those of part 0.
std::vector<Junction> apex_junctions(const CliqueSumSpec& spec) {
  std::vector<Junction> junctions;
  const int n0 = spec.parts.front().n;
  for (std::size_t i = 1; i < spec.parts.size(); ++i) {
    const int ni = spec.parts[i].n;
    Junction j;
    for (int a = 1; a <= spec.parts[i].k; ++a) {
      j.identify.emplace_back(n0 * n0 + a - 1, ni * ni + a - 1);
    }
    junctions.push_back(std::move(j));
  }
  return junctions;
}

std::vector<Edge> removed_in_sum(const CliqueSumSpec& spec) {
  const int n0 = spec.parts.front().n;
  std::vector<Edge> removed;
  for (auto [a, b] : spec.removed_edges) {
    removed.push_back({n0 * n0 + a - 1, n0 * n0 + b - 1});
  }
  return removed;
}

}  // namespace

ApexEdges complete_apex_edges(int k) {
  ApexEdges edges;
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) edges.emplace_back(a, b);
  }
  return edges;
}

Graph grid(int n) {
  require_size(n >= 1, "grid side must be >= 1");
  return apex_grid(0, n);
}

Graph apex_grid(int k, int n, const ApexEdges& apex_edges) {
  require_size(n >= 1, "grid side must be >= 1");
  require_size(k >= 0, "apex count must be >= 0");
  const ApexEdges among = normalized_apex_edges(k, apex_edges);
  auto cell = [n](int r, int c) { return (r - 1) * n + (c - 1); };
  std::vector<Edge> edges;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (c < n) edges.push_back({cell(r, c), cell(r, c + 1)});
      if (r < n) edges.push_back({cell(r, c), cell(r + 1, c)});
    }
  }
  const int grid_size = n * n;
  for (int a = 1; a <= k; ++a) {
    for (int v = 0; v < grid_size; ++v) edges.push_back({v, grid_size + a - 1});
  }
  for (auto [a, b] : among) edges.push_back({grid_size + a - 1, grid_size + b - 1});
  return Graph(apex_grid_labels(k, n), std::move(edges));
}

Factorization factorize_apex_grid(int k, int n, const ApexEdges& apex_edges) {
  require_size(n >= 2, "factorization needs grid side >= 2");
  require_size(k >= 0, "apex count must be >= 0");
  Graph base = apex_grid(k, n, apex_edges);
  const ApexEdges among = normalized_apex_edges(k, apex_edges);
  const int grid_size = n * n;
  auto cell = [n](int r, int c) { return (r - 1) * n + (c - 1); };

  std::vector<Edge> apex_join;
  for (int a = 1; a <= k; ++a) {
    for (int v = 0; v < grid_size; ++v) apex_join.push_back({v, grid_size + a - 1});
  }

  // Rows r and r + 1 form one clique for every r.
  std::vector<Edge> chordal_edges = apex_join;
  for (int u = 0; u < grid_size; ++u) {
    for (int v = u + 1; v < grid_size; ++v) {
      if (v / n - u / n <= 1) chordal_edges.push_back({u, v});
    }
  }
  for (auto [a, b] : complete_apex_edges(k)) {
    chordal_edges.push_back({grid_size + a - 1, grid_size + b - 1});
  }

  // Grid plus column cliques.
  std::vector<Edge> column_edges = apex_join;
  for (const Edge& e : base.edges()) {
    if (e.v < grid_size) column_edges.push_back(e);
  }
  for (int c = 1; c <= n; ++c) {
    for (int r = 1; r <= n; ++r) {
      for (int s = r + 1; s <= n; ++s) column_edges.push_back({cell(r, c), cell(s, c)});
    }
  }
  for (auto [a, b] : among) column_edges.push_back({grid_size + a - 1, grid_size + b - 1});

  OrderedCliqueCover cover;
  auto column_block = [&](int c) {
    VertexSet block;
    for (int r = 1; r <= n; ++r) block.push_back(cell(r, c));
    return block;
  };
  const int middle = ceil_half(n);
  for (int c = 1; c <= middle; ++c) cover.blocks.push_back(column_block(c));
  for (int a = 1; a <= k; ++a) cover.blocks.push_back({grid_size + a - 1});
  for (int c = middle + 1; c <= n; ++c) cover.blocks.push_back(column_block(c));

  std::vector<Graph> factors;
  factors.emplace_back(base.labels(), std::move(chordal_edges));
  factors.emplace_back(base.labels(), std::move(column_edges));
  return finalize(std::move(base), std::move(factors), {std::move(cover)},
                  middle + k, "apex-grid", n, k);
}

CliqueSumResult clique_sum_mapped(std::span<const Graph> parts,
                                  std::span<const Junction> junctions) {
  if (parts.empty()) throw Error(Errc::kEmptyParts, "no parts to sum");
  if (junctions.size() + 1 != parts.size()) {
    throw Error(Errc::kInvalidArgument, "need one junction per glued part");
  }
  auto relabel = [](VertexLabel l, int part) {
    l.part = part;
    return l;
  };

  CliqueSumResult result;
  std::vector<VertexLabel> labels;
  for (const VertexLabel& l : parts.front().labels()) labels.push_back(relabel(l, 0));
  std::vector<Edge> edges = parts.front().edges();
  Graph running(labels, edges);
  result.vertex_map.emplace_back(parts.front().size());
  for (int v = 0; v < parts.front().size(); ++v) result.vertex_map[0][v] = v;

  for (std::size_t i = 0; i < junctions.size(); ++i) {
    const Graph& part = parts[i + 1];
    const Junction& junction = junctions[i];
    std::vector<int> left, right;
    for (auto [a, b] : junction.identify) {
      if (!running.contains(a) || !part.contains(b)) {
        throw Error(Errc::kVertexOutOfRange, "junction names a missing vertex");
      }
      left.push_back(a);
      right.push_back(b);
    }
    if (normalize(left).size() != left.size() || normalize(right).size() != right.size()) {
      throw Error(Errc::kJunctionNotClique, "junction identifies a vertex twice");
    }
    if (!is_clique(running, left) || !is_clique(part, right)) {
      throw Error(Errc::kJunctionNotClique,
                  "identified set is not a clique in both summands");
    }
    const VertexSet shared = normalize(left);
    for (const Edge& e : junction.removed) {
      if (e.u == e.v || !std::binary_search(shared.begin(), shared.end(), e.u) ||
          !std::binary_search(shared.begin(), shared.end(), e.v)) {
        throw Error(Errc::kBadRemovedEdge,
                    "removed edge is not an edge of the identified clique");
      }
    }

    std::vector<int> map(part.size(), -1);
    for (auto [a, b] : junction.identify) map[b] = a;
    for (int v = 0; v < part.size(); ++v) {
      if (map[v] >= 0) continue;
      map[v] = static_cast<int>(labels.size());
      labels.push_back(relabel(part.label(v), static_cast<int>(i + 1)));
    }
    for (const Edge& e : part.edges()) edges.push_back({map[e.u], map[e.v]});
    running = without_edges(Graph(labels, edges), junction.removed);
    edges = running.edges();
    result.vertex_map.push_back(std::move(map));
  }
  result.graph = std::move(running);
  return result;
}

Graph clique_sum(std::span<const Graph> parts,
                 std::span<const Junction> junctions) {
  return clique_sum_mapped(parts, junctions).graph;
}

Graph clique_sum_base(const CliqueSumSpec& spec) {
  validate_spec(spec);
  std::vector<Graph> parts;
  for (const CliqueSumPart& p : spec.parts) parts.push_back(apex_grid(p.k, p.n, p.apex_edges));
  std::vector<Junction> junctions = apex_junctions(spec);
  return without_edges(clique_sum(parts, junctions), removed_in_sum(spec));
}

Factorization factorize_clique_sum(const CliqueSumSpec& spec) {
  const int k = validate_spec(spec).k;
  std::vector<Factorization> pieces;
  std::vector<Graph> bases, chordal_parts, cover_parts;
  for (const CliqueSumPart& p : spec.parts) {
    pieces.push_back(factorize_apex_grid(p.k, p.n, p.apex_edges));
    bases.push_back(pieces.back().base);
    chordal_parts.push_back(pieces.back().factors[0]);
    cover_parts.push_back(pieces.back().factors[1]);
  }
  const std::vector<Junction> junctions = apex_junctions(spec);
  const std::vector<Edge> removed = removed_in_sum(spec);

  Graph base = without_edges(clique_sum(bases, junctions), removed);
  Graph chordal_factor = clique_sum(chordal_parts, junctions);
  CliqueSumResult summed = clique_sum_mapped(cover_parts, junctions);
  Graph cover_factor = without_edges(summed.graph, removed);

  // Each part cover is [left columns][apexes][right columns]. Align all parts
  // at the shared apex blocks and deal their column blocks out round-robin,
  // so block j of part i sits immediately left of block j of part i + 1.
  auto mapped = [&](std::size_t part, const VertexSet& block) {
    VertexSet out;
    for (int v : block) out.push_back(summed.vertex_map[part][v]);
    return normalize(std::move(out));
  };
  int max_left = 0, max_right = 0;
  for (const CliqueSumPart& p : spec.parts) {
    max_left = std::max(max_left, ceil_half(p.n));
    max_right = std::max(max_right, p.n - ceil_half(p.n));
  }
  OrderedCliqueCover merged;
  for (int offset = -max_left; offset < 0; ++offset) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const int left = ceil_half(spec.parts[i].n);
      if (left + offset >= 0) {
        merged.blocks.push_back(mapped(i, pieces[i].covers[0].blocks[left + offset]));
      }
    }
  }
  const int left0 = ceil_half(spec.parts.front().n);
  for (int a = 0; a < k; ++a) {
    merged.blocks.push_back(mapped(0, pieces.front().covers[0].blocks[left0 + a]));
  }
  for (int offset = 1; offset <= max_right; ++offset) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const int left = ceil_half(spec.parts[i].n);
      const int right = spec.parts[i].n - left;
      if (offset <= right) {
        merged.blocks.push_back(
            mapped(i, pieces[i].covers[0].blocks[left + k + offset - 1]));
      }
    }
  }

  int bound = 0, total_n = 0;
  for (const CliqueSumPart& p : spec.parts) {
    bound += p.n + p.k;
    total_n += p.n;
  }
  std::vector<Graph> factors{std::move(chordal_factor), std::move(cover_factor)};
  return finalize(std::move(base), std::move(factors), {std::move(merged)},
                  bound, "clique-sum", total_n, k);
}

Factorization example3_i(int n, int k) {
  require_size(n >= 1 && k >= 1, "example3_i needs n, k >= 1");
  const int half = ceil_half(n);
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n * k; ++v) labels.push_back(VertexLabel::plain(0, v));
  auto at = [n](int block, int j) { return block * n + j; };

  std::vector<Edge> base_edges, interval_edges;
  OrderedCliqueCover cover;
  for (int b = 0; b < k; ++b) {
    VertexSet block;
    for (int i = 0; i < n; ++i) {
      block.push_back(at(b, i));
      for (int j = i + 1; j < n; ++j) base_edges.push_back({at(b, i), at(b, j)});
    }
    cover.blocks.push_back(std::move(block));
    if (b + 1 == k) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Edge e{at(b, i), at(b + 1, j)};
        interval_edges.push_back(e);
        if (i < half && j < half) base_edges.push_back(e);
      }
    }
  }
  interval_edges.insert(interval_edges.end(), base_edges.begin(), base_edges.end());
  Graph base(labels, base_edges);
  std::vector<Graph> factors;
  factors.emplace_back(labels, std::move(interval_edges));
  factors.push_back(base);
  return finalize(std::move(base), std::move(factors), {std::move(cover)}, 1,
                  "example3i", n, k);
}

Factorization example3_ii(int n, int k) {
  require_size(n >= 1 && k >= 1, "example3_ii needs n, k >= 1");
  const int count = n * n * k;
  std::vector<VertexLabel> labels;
  for (int v = 0; v < count; ++v) labels.push_back(VertexLabel::plain(0, v));
  // Vertex v is copy v % k of grid cell v / k.
  auto row = [&](int v) { return (v / k) / n; };
  auto col = [&](int v) { return (v / k) % n; };

  std::vector<Edge> base_edges, row_edges, column_edges;
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      const int dr = std::abs(row(u) - row(v));
      const int dc = std::abs(col(u) - col(v));
      const bool same_or_adjacent = dr + dc <= 1;
      if (same_or_adjacent) base_edges.push_back({u, v});
      if (dr <= 1) row_edges.push_back({u, v});
      if (dc == 0 || same_or_adjacent) column_edges.push_back({u, v});
    }
  }
  OrderedCliqueCover cover;
  for (int c = 0; c < n; ++c) {
    VertexSet block;
    for (int v = 0; v < count; ++v) {
      if (col(v) == c) block.push_back(v);
    }
    cover.blocks.push_back(std::move(block));
  }
  Graph base(labels, std::move(base_edges));
  std::vector<Graph> factors;
  factors.emplace_back(labels, std::move(row_edges));
  factors.emplace_back(labels, std::move(column_edges));
  return finalize(std::move(base), std::move(factors), {std::move(cover)}, 1,
                  "example3ii", n, k);
}

}  // namespace apexsep
