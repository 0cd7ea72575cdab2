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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Checks recompute everything from raw graphs where practical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apexsep/cli.h"
#include "apexsep/constructions.h"
#include "apexsep/io.h"
#include "apexsep/separator.h"
#include "oracles/brute_force.h"

namespace apexsep {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Later neighbours of every vertex pairwise adjacent.
bool is_peo(const Graph& g, const ChordalCertificate& cert) {
  const auto* peo = std::get_if<PerfectEliminationOrder>(&cert);
  if (peo == nullptr || static_cast<int>(peo->order.size()) != g.size()) return false;
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < peo->order.size(); ++i) {
    const int v = peo->order[i];
    if (v < 0 || v >= g.size() || pos[v] != -1) return false;
    pos[v] = static_cast<int>(i);
  }
  for (int v = 0; v < g.size(); ++v) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

// Width of `cover` on g, or -1 if it is not a partition into cliques.
int recomputed_width(const Graph& g, const OrderedCliqueCover& cover) {
  std::vector<int> block(g.size(), -1);
  for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
    const VertexSet& b = cover.blocks[i];
    for (int v : b) {
      if (v < 0 || v >= g.size() || block[v] != -1) return -1;
      block[v] = static_cast<int>(i);
    }
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y)
        if (!g.has_edge(b[x], b[y])) return -1;
  }
  for (int b : block)
    if (b == -1) return -1;
  int width = 0;
  for (const Edge& e : g.edges()) width = std::max(width, std::abs(block[e.u] - block[e.v]));
  return width;
}

bool intersection_equals(const Factorization& f, const Graph& expected) {
  const int n = expected.size();
  for (const Graph& h : f.factors)
    if (h.size() != n) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool all = true;
      for (const Graph& h : f.factors) all = all && h.has_edge(u, v);
      if (all != expected.has_edge(u, v)) return false;
    }
  return true;
}

std::string tag(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

Outcome criterion_apex_grid_sweep() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20261015);
  int instances = 0, tight = 0;
  for (int n = 2; n <= 20; ++n) {
    for (int k = 0; k <= 5; ++k) {
      for (int rep = 0; rep < 5; ++rep) {
        ApexEdges among;
        for (auto e : complete_apex_edges(k))
          if (rng() & 1u) among.push_back(e);
        const Factorization f = factorize_apex_grid(k, n, among);
        ++instances;
        if (!is_peo(f.factors[0], f.chordal_cert)) o.fail(tag(n, k) + ": factor 1 not certified");
        if (!intersection_equals(f, apex_grid(k, n, among))) {
          o.fail(tag(n, k) + ": intersection differs from the apex grid");
        }
        const int width = recomputed_width(f.factors[1], f.covers[0]);
        const int bound = (n + 1) / 2 + k;
        if (width < 0 || width > bound) {
          o.fail(tag(n, k) + ": width " + std::to_string(width) + " > " + std::to_string(bound));
        }
        tight += (width == bound);
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) o.fail("runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << instances << " instances, " << tight << " at the bound, " << elapsed << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome criterion_clique_sum_sweep() {
  Outcome o;
  int instances = 0;
  for (int t = 2; t <= 3; ++t) {
    for (int k = 1; k <= 2; ++k) {
      std::vector<int> sizes(t, 3);
      while (true) {
        CliqueSumSpec spec;
        int bound = 0;
        for (int n : sizes) {
          spec.parts.push_back({k, n, complete_apex_edges(k)});
          bound += n + k;
        }
        const Factorization f = factorize_clique_sum(spec);
        ++instances;
        std::string name = "t=" + std::to_string(t) + " k=" + std::to_string(k);
        for (int n : sizes) name += " " + std::to_string(n);
        if (!is_peo(f.factors[0], f.chordal_cert)) o.fail(name + ": factor 1 not certified");
        if (!intersection_equals(f, clique_sum_base(spec))) o.fail(name + ": intersection");
        const int width = recomputed_width(f.factors[1], f.covers[0]);
        if (width < 0 || width > bound) o.fail(name + ": width " + std::to_string(width));
        int i = 0;
        while (i < t && sizes[i] == 8) sizes[i++] = 3;
        if (i == t) break;
        ++sizes[i];
      }
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " clique sums";
  return o;
}

Outcome criterion_oracles() {
  Outcome o;
  int graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1u) edges.push_back({slots[i].first, slots[i].second});
      const Graph g = Graph::plain(n, edges);
      if (oracle::components(g).size() != 1) continue;
      ++graphs;
      const CcwResult c = ccw_exact(g);
      const BandwidthResult b = bandwidth_exact(g);
      if (!c.exact || !b.exact) o.fail("search budget hit");
      if (c.width > b.width) o.fail("ccw > bw on mask " + std::to_string(mask));
      if (n <= 5 && c.width != oracle::ccw(g)) o.fail("ccw differs from enumerator");
    }
  }
  for (int m = 1; m <= 6; ++m) {
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
    if (ccw_exact(Graph::plain(m, edges)).width != 0) o.fail("ccw(K" + std::to_string(m) + ") != 0");
  }
  const std::vector<std::pair<std::string, Graph>> named = {
      {"P3", Graph::plain(3, {{0, 1}, {1, 2}})},
      {"C4", Graph::plain(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
      {"K1,3", Graph::plain(4, {{0, 1}, {0, 2}, {0, 3}})}};
  for (const auto& [name, g] : named) {
    if (ccw_exact(g).width != 1 || oracle::ccw(g) != 1) o.fail(name + " is not 1");
  }
  if (o.pass) o.detail = std::to_string(graphs) + " connected labelled graphs";
  return o;
}

Outcome criterion_separator() {
  Outcome o;
  const auto start = Clock::now();
  std::string counts;
  for (int n : {8, 12, 16, 20, 24}) {
    const Factorization f = factorize_apex_grid(1, n);
    const int total = n * n + 1;
    const SeparatorResult r = separate(f, Measure::uniform(total));
    const int cap = (2 * total + 2) / 3;
    const std::string name = "n=" + std::to_string(n);
    if (r.side_a.size() > static_cast<std::size_t>(cap) ||
        r.side_b.size() > static_cast<std::size_t>(cap)) {
      o.fail(name + ": side over " + std::to_string(cap));
    }
    // No edge between the two sides, independent of the library's check.
    std::vector<int> side(total, 0);
    for (int v : r.side_a) side[v] = 1;
    for (int v : r.side_b) side[v] = 2;
    for (const Edge& e : f.base.edges())
      if (side[e.u] + side[e.v] == 3) o.fail(name + ": edge across the separator");
    VertexSet covered;
    for (const VertexSet& c : r.separator_cliques) {
      if (!is_clique(f.base, c)) o.fail(name + ": separator piece is not a clique");
      covered.insert(covered.end(), c.begin(), c.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != r.separator) o.fail(name + ": cliques do not partition the separator");
    if (r.side_a.size() + r.side_b.size() + r.separator.size() != static_cast<std::size_t>(total)) {
      o.fail(name + ": sides and separator do not partition V");
    }
    const int lstar = (n + 1) / 2 + 1;
    if (r.separator_cliques.size() > 4.0 * std::sqrt(static_cast<double>(lstar) * total)) {
      o.fail(name + ": too many separator cliques");
    }
    counts += (counts.empty() ? "" : ",") + std::to_string(r.separator_cliques.size());
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) o.fail("runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "clique counts " + counts + ", " + std::to_string(elapsed) + " s";
  return o;
}

Outcome criterion_audit() {
  Outcome o;
  for (int n = 4; n <= 12; ++n) {
    const Factorization f = factorize_apex_grid(1, n);
    const AuditReport a = audit_lower_bound(f, 1);
    const std::string name = "n=" + std::to_string(n);
    if (a.grid_clique_size != 2 * n) o.fail(name + ": grid clique " + std::to_string(a.grid_clique_size));
    if (a.indep_size < n) o.fail(name + ": independent set too small");
    if (a.restricted_cover_sizes.size() != 1 || a.restricted_cover_sizes[0] != n + 1) {
      o.fail(name + ": |B_2| is not n + 1");
    }
    if (!a.independent_in_cofactors) o.fail(name + ": S' not independent");
    if (n <= 5) {
      VertexSet cells(n * n);
      for (int v = 0; v < n * n; ++v) cells[v] = v;
      const Graph restricted = induced_subgraph(f.factors[0], cells).graph;
      if (oracle::max_clique_branching(restricted) != a.grid_clique_size) {
        o.fail(name + ": brute-force maximum clique disagrees");
      }
    }
  }
  if (o.pass) o.detail = "n = 4..12";
  return o;
}

Outcome criterion_example3() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const Factorization f = example3_i(n, k);
      const std::string name = "3i " + tag(n, k);
      if (!is_peo(f.factors[0], f.chordal_cert)) o.fail(name + ": not chordal");
      if (!intersection_equals(f, f.base)) o.fail(name + ": intersection");
      const int width = recomputed_width(f.factors[1], f.covers[0]);
      // A single block has width 0; with two or more blocks it must be 1.
      if (width != (k >= 2 ? 1 : 0)) o.fail(name + ": width " + std::to_string(width));
      const int diam = diameter(f.base);
      if (diam < k - 1 || diam > k + 2) o.fail(name + ": diameter " + std::to_string(diam));
      ++checked;
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const Factorization f = example3_ii(n, k);
      const std::string name = "3ii " + tag(n, k);
      if (f.base.size() != n * n * k) o.fail(name + ": vertex count");
      if (!is_peo(f.factors[0], f.chordal_cert)) o.fail(name + ": not chordal");
      if (!intersection_equals(f, f.base)) o.fail(name + ": intersection");
      const int width = recomputed_width(f.factors[1], f.covers[0]);
      if (width != (n >= 2 ? 1 : 0)) o.fail(name + ": width " + std::to_string(width));
      if (n >= 2 && !edge_equal(example3_ii(n, 1).base, grid(n))) o.fail(name + ": k=1 is not the grid");
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " instances";
  return o;
}

Outcome criterion_fault_injection() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "apexsep_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto cli = [](std::vector<std::string> args, std::string* err) {
    std::ostringstream out, errs;
    const int code = cli::run(args, out, errs);
    if (err != nullptr) *err = errs.str();
    return code;
  };
  const std::string clean = (dir / "clean.json").string();
  if (cli({"factorize", "apex-grid", "--k", "2", "--n", "6", "--out", clean}, nullptr) != 0 ||
      cli({"verify", clean}, nullptr) != 0) {
    o.fail("clean factorization does not verify");
    return o;
  }
  std::ifstream in(clean);
  std::stringstream text;
  text << in.rdbuf();
  const Json base = parse_json(text.str());
  const Factorization f = factorization_from_json(base);

  struct Fault {
    std::string name;
    std::string expected;
    std::function<void(Json&)> apply;
  };
  std::vector<Fault> faults;
  // A non-edge of the base that is an edge of neither factor.
  faults.push_back({"base edge added", "intersection mismatch", [&](Json& j) {
                      for (int v = 1; v < f.base.size(); ++v)
                        if (!f.base.has_edge(0, v)) {
                          j["base"]["edges"].push_back({0, v});
                          return;
                        }
                    }});
  faults.push_back({"factor edge removed", "intersection mismatch", [&](Json& j) {
                      auto& edges = j["factors"][1]["edges"];
                      for (auto it = edges.begin(); it != edges.end(); ++it) {
                        const int u = (*it)[0], v = (*it)[1];
                        if (f.base.has_edge(u, v)) {
                          edges.erase(it);
                          return;
                        }
                      }
                    }});
  // First block split in two, the halves placed at both ends.
  faults.push_back({"cover block split", "cover width mismatch", [&](Json& j) {
                      Json blocks = j["covers"][0];
                      Json first = blocks[0];
                      Json head = Json::array(), tail = Json::array();
                      for (std::size_t i = 0; i < first.size(); ++i)
                        (i < first.size() / 2 ? head : tail).push_back(first[i]);
                      Json rebuilt = Json::array({head});
                      for (std::size_t i = 1; i < blocks.size(); ++i) rebuilt.push_back(blocks[i]);
                      rebuilt.push_back(tail);
                      j["covers"][0] = rebuilt;
                    }});
  faults.push_back({"peo perturbed", "chordal certificate invalid", [&](Json& j) {
                      auto& order = j["chordal_cert"]["peo"];
                      std::swap(order[0], order[order.size() - 1]);
                    }});

  for (const Fault& fault : faults) {
    Json broken = base;
    fault.apply(broken);
    if (broken == base) {
      o.fail(fault.name + ": injection had no effect");
      continue;
    }
    const std::string path = (dir / "broken.json").string();
    std::ofstream(path) << broken.dump();
    std::string err;
    const int code = cli({"verify", path}, &err);
    if (code != 1) o.fail(fault.name + ": exit " + std::to_string(code));
    if (err.find(fault.expected) == std::string::npos) {
      o.fail(fault.name + ": expected '" + fault.expected + "', got '" + err + "'");
    }
  }
  // The perturbed order must genuinely fail an independent PEO check.
  Json swapped = base;
  faults.back().apply(swapped);
  if (is_peo(f.factors[0], factorization_from_json(swapped).chordal_cert)) {
    o.fail("perturbed order is still a valid elimination order");
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "4 faults rejected with named failures";
  return o;
}

}  // namespace
}  // namespace apexsep

int main() {
  using apexsep::Outcome;
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"AC1 apex-grid factorization sweep", apexsep::criterion_apex_grid_sweep},
      {"AC2 clique-sum factorization sweep", apexsep::criterion_clique_sum_sweep},
      {"AC3 ccw and bandwidth oracles", apexsep::criterion_oracles},
      {"AC4 separator contract", apexsep::criterion_separator},
      {"AC5 lower-bound audit", apexsep::criterion_audit},
      {"AC6 example families", apexsep::criterion_example3},
      {"AC7 fault injection", apexsep::criterion_fault_injection},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
