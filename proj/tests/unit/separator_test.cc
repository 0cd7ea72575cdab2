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
#include <random>

#include "apexsep/error.h"
#include "gtest/gtest.h"
#include "oracles/brute_force.h"
#include "test_graphs.h"

namespace apexsep {
namespace {

Factorization trivial_clique(int n) {
  Factorization f;
  f.base = testing::complete(n);
  f.factors = {f.base, f.base};
  f.chordal_cert = is_chordal(f.base).certificate;
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  f.covers = {OrderedCliqueCover{{all}}};
  f.widths = {0};
  f.lstar = 0;
  f.family = "clique";
  f.n = n;
  return f;
}

// Components of G - S checked by union-find, independent of the library.
void expect_separates(const Factorization& f, const SeparatorResult& r,
                      double total) {
  const auto comps = oracle::components(f.base, r.separator);
  std::vector<int> side(f.base.size(), 0);
  for (int v : r.side_a) side[v] = 1;
  for (int v : r.side_b) side[v] = 2;
  for (int v : r.separator) side[v] = 3;
  for (int v = 0; v < f.base.size(); ++v) EXPECT_NE(side[v], 0) << v;
  for (const auto& comp : comps) {
    for (int v : comp) EXPECT_EQ(side[v], side[comp.front()]);
  }
  EXPECT_LE(r.mu_a, 2.0 * total / 3.0 + 1e-9);
  EXPECT_LE(r.mu_b, 2.0 * total / 3.0 + 1e-9);
  EXPECT_LE(static_cast<double>(r.separator_cliques.size()), r.bound_value + 1e-9);
  for (const auto& c : r.separator_cliques) EXPECT_TRUE(is_clique(f.base, c));
}

TEST(SeparateTest, CompleteGraphNeedsNoSplit) {
  Factorization f = trivial_clique(9);
  SeparatorResult r = separate(f, Measure::uniform(9));
  EXPECT_EQ(r.separator_cliques.size(), 1u);
  EXPECT_LE(r.mu_a, 6.0);
  EXPECT_LE(r.mu_b, 6.0);
  EXPECT_TRUE(verify_separator(f.base, Measure::uniform(9), r).ok());
}

TEST(SeparateTest, ApexGridUniform) {
  Factorization f = factorize_apex_grid(1, 8);
  ASSERT_EQ(f.base.size(), 65);
  SeparatorResult r = separate(f, Measure::uniform(65));
  EXPECT_LE(r.mu_a, 43.0);
  EXPECT_LE(r.mu_b, 43.0);
  expect_separates(f, r, 65.0);
}

TEST(SeparateTest, PlainGridCliqueCount) {
  Factorization f = factorize_apex_grid(0, 6);
  SeparatorResult r = separate(f, Measure::uniform(36));
  const double bound = 4.0 * std::sqrt(f.lstar * 36.0);
  EXPECT_LE(r.separator_cliques.size(), static_cast<std::size_t>(bound));
  EXPECT_LE(r.separator_cliques.size(), 6u);  // measured
  std::vector<int> rows;
  for (int v : r.separator) rows.push_back(f.base.label(v).row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  EXPECT_LE(rows.size(), 2u);
  if (rows.size() == 2) EXPECT_EQ(rows[1], rows[0] + 1);
  expect_separates(f, r, 36.0);
}

TEST(SeparateTest, RandomMeasures) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> weight(0.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 5, k = trial % 3;
    Factorization f = factorize_apex_grid(k, n, complete_apex_edges(k));
    std::vector<double> w(f.base.size());
    for (double& x : w) x = weight(rng);
    Measure mu(w);
    SeparatorResult r = separate(f, mu);
    EXPECT_TRUE(verify_separator(f.base, mu, r).ok());
    expect_separates(f, r, mu.total());
  }
}

TEST(SeparateTest, PointMassAndZeroMeasure) {
  Factorization f = factorize_apex_grid(1, 5);
  std::vector<double> point(f.base.size(), 0.0);
  point[12] = 1.0;
  SeparatorResult r = separate(f, Measure(point));
  EXPECT_TRUE(verify_separator(f.base, Measure(point), r).ok());
  const std::vector<double> zero(f.base.size(), 0.0);
  SeparatorResult z = separate(f, Measure(zero));
  EXPECT_TRUE(verify_separator(f.base, Measure(zero), z).ok());
}

TEST(SeparateTest, CliqueSums) {
  CliqueSumSpec spec{{{2, 4, {{1, 2}}}, {2, 5, {{1, 2}}}, {2, 3, {{1, 2}}}}, {{1, 2}}};
  Factorization f = factorize_clique_sum(spec);
  SeparatorResult r = separate(f, Measure::uniform(f.base.size()));
  expect_separates(f, r, f.base.size());
}

TEST(SeparateTest, RejectsBrokenFactorization) {
  Factorization f = factorize_apex_grid(1, 4);
  f.lstar = 99;
  try {
    separate(f, Measure::uniform(f.base.size()));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidFactorization);
  }
}

TEST(VerifySeparatorTest, FlagsEdgeAcrossSides) {
  Factorization f = factorize_apex_grid(0, 4);
  const Measure mu = Measure::uniform(16);
  SeparatorResult r = separate(f, mu);
  SeparatorResult broken = r;
  broken.side_a.insert(broken.side_a.end(), broken.separator.begin(),
                       broken.separator.end());
  broken.side_a = normalize(broken.side_a);
  broken.separator.clear();
  broken.separator_cliques.clear();
  EXPECT_FALSE(verify_separator(f.base, mu, broken).ok());
}

TEST(ProductCellCoverTest, Examples) {
  Factorization f = factorize_apex_grid(1, 4);
  // Two adjacent grid cells in one row share a column-pair clique of factor 1.
  const VertexSet pair{0, 1};
  const auto cells = product_cell_cover(f, pair);
  EXPECT_EQ(cells.size(), 2u);  // different columns
  const VertexSet with_apex{0, 16};
  EXPECT_EQ(product_cell_cover(f, with_apex).size(), 2u);
  const VertexSet single{5};
  EXPECT_EQ(product_cell_cover(f, single).size(), 1u);
  const VertexSet far{0, 15};
  try {
    product_cell_cover(f, far);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotCliqueInFactorOne);
  }
}

TEST(ProductCellCoverTest, TwoRowsAndApex) {
  Factorization f = factorize_apex_grid(1, 6);
  VertexSet s;
  for (int v = 12; v < 24; ++v) s.push_back(v);  // rows 3 and 4
  s.push_back(36);
  const auto cells = product_cell_cover(f, s);
  EXPECT_LE(cells.size(), 7u);
  EXPECT_EQ(cells.size(), 7u);  // measured: one per column plus the apex
}

TEST(ProductCellCoverTest, NeverExceedsBlocksMet) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) {
    Factorization f = factorize_apex_grid(1 + n % 3, n, complete_apex_edges(1 + n % 3));
    const auto& peo = std::get<PerfectEliminationOrder>(f.chordal_cert).order;
    for (const VertexSet& bag : maximal_cliques_chordal(f.factors[0], peo)) {
      VertexSet s;
      for (int v : bag)
        if (rng() & 1u) s.push_back(v);
      if (s.empty()) continue;
      std::vector<int> met;
      for (std::size_t b = 0; b < f.covers[0].blocks.size(); ++b)
        for (int v : f.covers[0].blocks[b])
          if (std::find(s.begin(), s.end(), v) != s.end()) met.push_back(b);
      met.erase(std::unique(met.begin(), met.end()), met.end());
      EXPECT_LE(product_cell_cover(f, s).size(), met.size());
    }
  }
}

TEST(ProductCellCoverTest, CellsAreBaseCliques) {
  for (int n = 2; n <= 7; ++n) {
    Factorization f = factorize_apex_grid(2, n, {{1, 2}});
    const auto& peo = std::get<PerfectEliminationOrder>(f.chordal_cert).order;
    const auto cliques = maximal_cliques_chordal(f.factors[0], peo);
    for (const auto& c : cliques) {
      for (const auto& cell : product_cell_cover(f, c)) {
        EXPECT_TRUE(is_clique(f.base, cell));
      }
    }
  }
}

TEST(AuditTest, ApexGrid) {
  Factorization f = factorize_apex_grid(1, 6);
  AuditReport a = audit_lower_bound(f, 1);
  EXPECT_EQ(a.apex_vertex, 36);
  EXPECT_TRUE(is_clique(f.factors[0], a.grid_clique));
  EXPECT_GE(a.indep_size * 2, a.grid_clique_size);
  EXPECT_TRUE(a.independent_in_cofactors);
  EXPECT_LE(a.product_cells, a.product_bound);
  for (std::size_t i = 0; i < a.independent_set.size(); ++i)
    for (std::size_t j = i + 1; j < a.independent_set.size(); ++j)
      EXPECT_FALSE(f.base.has_edge(a.independent_set[i], a.independent_set[j]));
  try {
    audit_lower_bound(f, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoApex);
  }
}

}  // namespace
}  // namespace apexsep
