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

#include "apexsep/separator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "apexsep/chordal.h"
#include "apexsep/error.h"

namespace apexsep {
namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

bool within_two_thirds(double part, double total) {
  return part <= kTwoThirds * total + 1e-9 * std::max(total, 1.0);
}

std::vector<std::vector<int>> block_indices(const Factorization& f) {
  std::vector<std::vector<int>> index;
  for (const OrderedCliqueCover& cover : f.covers) {
    std::vector<int> block(f.base.size(), -1);
    for (std::size_t b = 0; b < cover.blocks.size(); ++b) {
      for (int v : cover.blocks[b]) block[v] = static_cast<int>(b);
    }
    index.push_back(std::move(block));
  }
  return index;
}

}  // namespace

std::vector<VertexSet> product_cell_cover(const Factorization& f,
                                          std::span<const int> s) {
  if (f.factors.empty()) {
    throw Error(Errc::kInvalidFactorization, "factorization has no factors");
  }
  if (!is_clique(f.factors.front(), s)) {
    throw Error(Errc::kNotCliqueInFactorOne,
                "vertex set is not a clique of factor 1");
  }
  const auto index = block_indices(f);
  std::map<std::vector<int>, VertexSet> cells;
  for (int v : normalize(VertexSet(s.begin(), s.end()))) {
    std::vector<int> key;
    for (const auto& block : index) key.push_back(block[v]);
    cells[key].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& [key, members] : cells) {
    if (!is_clique(f.base, members)) {
      throw std::logic_error("product cell is not a clique of the base graph");
    }
    out.push_back(std::move(members));
  }
  return out;
}

VerificationReport verify_separator(const Graph& base, const Measure& mu,
                                    const SeparatorResult& r) {
  VerificationReport report;
  const int n = base.size();

  CheckResult partition{"partition", true, ""};
  std::vector<int> where(n, -1);
  auto place = [&](const VertexSet& set, int tag) {
    for (int v : set) {
      if (!base.contains(v) || where[v] >= 0) return false;
      where[v] = tag;
    }
    return true;
  };
  if (!place(r.separator, 0) || !place(r.side_a, 1) || !place(r.side_b, 2) ||
      std::count(where.begin(), where.end(), -1) != 0) {
    partition.passed = false;
    partition.detail = "separator and sides do not partition the vertices";
  }
  report.checks.push_back(partition);
  if (!partition.passed) return report;

  CheckResult crossing{"separation", true, ""};
  for (const Edge& e : base.edges()) {
    if (where[e.u] + where[e.v] == 3 && where[e.u] != 0 && where[e.v] != 0) {
      crossing.passed = false;
      crossing.detail = "edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") joins the two sides";
      break;
    }
  }
  report.checks.push_back(crossing);

  CheckResult measures{"measures", true, ""};
  const double a = mu.of(r.side_a), b = mu.of(r.side_b), s = mu.of(r.separator);
  auto close = [](double x, double y) {
    return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  if (!close(a, r.mu_a) || !close(b, r.mu_b) || !close(s, r.mu_separator) ||
      !close(mu.total(), r.mu_total) || !close(a + b + s, mu.total())) {
    measures.passed = false;
    measures.detail = "stored measures disagree with recomputed ones";
  }
  report.checks.push_back(measures);

  CheckResult balance{"balance", true, ""};
  if (!within_two_thirds(a, mu.total()) || !within_two_thirds(b, mu.total())) {
    balance.passed = false;
    balance.detail = "a side exceeds 2/3 of the total measure";
  }
  report.checks.push_back(balance);

  CheckResult cliques{"separator cliques", true, ""};
  std::vector<int> hits(n, 0);
  for (const VertexSet& c : r.separator_cliques) {
    if (c.empty() || !is_clique(base, c)) {
      cliques.passed = false;
      cliques.detail = "separator clique is empty or not a clique of the base";
      break;
    }
    for (int v : c) ++hits[v];
  }
  if (cliques.passed) {
    for (int v = 0; v < n; ++v) {
      if (hits[v] != (where[v] == 0 ? 1 : 0)) {
        cliques.passed = false;
        cliques.detail = "separator cliques do not partition the separator";
        break;
      }
    }
  }
  report.checks.push_back(cliques);
  return report;
}

SeparatorResult separate(const Factorization& f, const Measure& mu) {
  VerificationReport check = verify_factorization(f);
  if (const CheckResult* failure = check.first_failure()) {
    throw Error(Errc::kInvalidFactorization, failure->detail);
  }
  if (mu.size() != f.base.size()) {
    throw Error(Errc::kInvalidMeasure, "measure size does not match graph");
  }

  SeparatorResult r;
  r.separator = balanced_clique_separator(f.factors.front(), mu, kTwoThirds);
  r.mu_total = mu.total();
  r.mu_separator = mu.of(r.separator);

  // Components of base - S refine those of factor1 - S, so each is light.
  std::vector<VertexSet> components =
      connected_components_without(f.base, r.separator);
  std::vector<std::pair<double, std::size_t>> by_weight;
  for (std::size_t i = 0; i < components.size(); ++i) {
    by_weight.emplace_back(mu.of(components[i]), i);
  }
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  for (auto [weight, i] : by_weight) {
    const bool to_a = r.mu_a <= r.mu_b;
    VertexSet& side = to_a ? r.side_a : r.side_b;
    (to_a ? r.mu_a : r.mu_b) += weight;
    side.insert(side.end(), components[i].begin(), components[i].end());
  }
  r.side_a = normalize(std::move(r.side_a));
  r.side_b = normalize(std::move(r.side_b));
  r.mu_a = mu.of(r.side_a);
  r.mu_b = mu.of(r.side_b);

  r.separator_cliques = product_cell_cover(f, r.separator);
  r.lstar = f.lstar;
  r.d = f.d();
  const double exponent = static_cast<double>(r.d - 1) / r.d;
  r.bound_value = std::pow(2.0, r.d) * std::pow(r.lstar, exponent) *
                  std::pow(r.mu_total, exponent);
  double product = 1.0;
  for (int w : f.widths) product *= w;
  const double alt_lstar = std::pow(product, 1.0 / std::max(1, r.d - 1));
  r.alt_bound_value = std::pow(2.0, r.d) * std::pow(alt_lstar, exponent) *
                      std::pow(r.mu_total, exponent);

  VerificationReport result_check = verify_separator(f.base, mu, r);
  if (const CheckResult* failure = result_check.first_failure()) {
    throw std::logic_error("separator result failed its own check: " +
                           failure->detail);
  }
  return r;
}

AuditReport audit_lower_bound(const Factorization& f, int apex_index) {
  AuditReport report;
  VertexSet grid_vertices;
  for (int v = 0; v < f.base.size(); ++v) {
    const VertexLabel& l = f.base.label(v);
    if (l.is_apex() && l.apex_index == apex_index && report.apex_vertex < 0) {
      report.apex_vertex = v;
    }
    if (l.is_grid_cell()) grid_vertices.push_back(v);
  }
  if (report.apex_vertex < 0) {
    throw Error(Errc::kNoApex, "no apex with index " + std::to_string(apex_index));
  }
  if (f.factors.empty()) {
    throw Error(Errc::kInvalidFactorization, "factorization has no factors");
  }

  // Maximum clique of the chordal restriction: the largest {v} ∪ later(v).
  InducedSubgraph restricted = induced_subgraph(f.factors.front(), grid_vertices);
  ChordalityResult chordal = is_chordal(restricted.graph);
  if (!chordal.chordal) {
    throw Error(Errc::kNotChordal, "factor 1 restricted to the grid has a hole");
  }
  const auto& peo = std::get<PerfectEliminationOrder>(chordal.certificate).order;
  std::vector<int> pos(peo.size());
  for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = static_cast<int>(i);
  VertexSet best;
  for (int v : peo) {
    VertexSet clique{v};
    for (int w : restricted.graph.neighbors(v)) {
      if (pos[w] > pos[v]) clique.push_back(w);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  for (int& v : best) v = restricted.original[v];
  report.grid_clique = normalize(std::move(best));
  report.grid_clique_size = static_cast<int>(report.grid_clique.size());

  // Grid bipartition by (row + col) parity, per part.
  VertexSet even, odd;
  for (int v : report.grid_clique) {
    const VertexLabel& l = f.base.label(v);
    ((l.row + l.col) % 2 == 0 ? even : odd).push_back(v);
  }
  report.independent_set = even.size() >= odd.size() ? even : odd;
  report.indep_size = static_cast<int>(report.independent_set.size());

  bool independent = true;
  for (std::size_t i = 0; i < report.independent_set.size() && independent; ++i) {
    for (std::size_t j = i + 1; j < report.independent_set.size(); ++j) {
      const int u = report.independent_set[i], v = report.independent_set[j];
      bool everywhere = true;
      for (std::size_t t = 1; t < f.factors.size(); ++t) {
        everywhere = everywhere && f.factors[t].has_edge(u, v);
      }
      if (everywhere) {
        independent = false;
        break;
      }
    }
  }
  report.independent_in_cofactors = independent;

  const auto index = block_indices(f);
  VertexSet with_apex = report.grid_clique;
  with_apex.push_back(report.apex_vertex);
  report.product_bound = 1;
  for (const auto& block : index) {
    VertexSet met;
    for (int v : with_apex) met.push_back(block[v]);
    const int size = static_cast<int>(normalize(std::move(met)).size());
    report.restricted_cover_sizes.push_back(size);
    report.product_bound *= size;
  }
  std::map<std::vector<int>, int> cells;
  for (int v : report.independent_set) {
    std::vector<int> key;
    for (const auto& block : index) key.push_back(block[v]);
    ++cells[key];
  }
  report.product_cells = static_cast<int>(cells.size());
  return report;
}

}  // namespace apexsep
