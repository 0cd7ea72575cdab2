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

#include "apexsep/io.h"

#include <iomanip>
#include <sstream>

#include "apexsep/error.h"

namespace apexsep {
namespace {

Json set_to_json(const VertexSet& s) { return Json(s); }

Json label_to_json(const VertexLabel& l) {
  Json j;
  switch (l.kind) {
    case VertexLabel::Kind::kGridCell:
      j = {{"kind", "grid"}, {"part", l.part}, {"row", l.row}, {"col", l.col}};
      break;
    case VertexLabel::Kind::kApex:
      j = {{"kind", "apex"}, {"part", l.part}, {"id", l.apex_index}};
      break;
    case VertexLabel::Kind::kPlain:
      j = {{"kind", "plain"}, {"part", l.part}, {"id", l.id}};
      break;
  }
  return j;
}

VertexLabel label_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int part = j.value("part", 0);
  if (kind == "grid") {
    return VertexLabel::grid_cell(part, j.at("row").get<int>(), j.at("col").get<int>());
  }
  if (kind == "apex") return VertexLabel::apex(part, j.at("id").get<int>());
  if (kind == "plain") return VertexLabel::plain(part, j.at("id").get<int>());
  throw Error(Errc::kParse, "unknown label kind '" + kind + "'");
}

// Runs `body`, turning nlohmann exceptions into Error(kParse).
template <typename Body>
auto parsing(const char* what, Body&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, std::string(what) + ": " + e.what());
  }
}

std::string number(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << x;
  return out.str();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json labels = Json::array();
  for (const VertexLabel& l : g.labels()) labels.push_back(label_to_json(l));
  return {{"n", g.size()}, {"edges", std::move(edges)}, {"labels", std::move(labels)}};
}

Graph graph_from_json(const Json& j) {
  return parsing("graph", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0) throw Error(Errc::kParse, "graph: negative vertex count");
    std::vector<VertexLabel> labels;
    if (j.contains("labels")) {
      for (const Json& l : j.at("labels")) labels.push_back(label_from_json(l));
      if (static_cast<int>(labels.size()) != n) {
        throw Error(Errc::kParse, "graph: label count differs from n");
      }
    } else {
      for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::plain(0, v));
    }
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(Errc::kParse, "graph: edges must be [u, v] pairs");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(std::move(labels), std::move(edges));
  });
}

Json cover_to_json(const OrderedCliqueCover& cover) {
  Json blocks = Json::array();
  for (const VertexSet& b : cover.blocks) blocks.push_back(set_to_json(b));
  return blocks;
}

OrderedCliqueCover cover_from_json(const Json& j) {
  return parsing("cover", [&] {
    OrderedCliqueCover cover;
    for (const Json& b : j) cover.blocks.push_back(b.get<std::vector<int>>());
    return cover;
  });
}

Json certificate_to_json(const ChordalCertificate& cert) {
  if (const auto* peo = std::get_if<PerfectEliminationOrder>(&cert)) {
    return {{"peo", peo->order}};
  }
  return {{"hole", std::get<ChordlessCycle>(cert).cycle}};
}

ChordalCertificate certificate_from_json(const Json& j) {
  return parsing("certificate", [&]() -> ChordalCertificate {
    if (j.contains("peo")) {
      return PerfectEliminationOrder{j.at("peo").get<std::vector<int>>()};
    }
    if (j.contains("hole")) {
      return ChordlessCycle{j.at("hole").get<std::vector<int>>()};
    }
    throw Error(Errc::kParse, "certificate needs a 'peo' or 'hole' field");
  });
}

Json factorization_to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const Graph& g : f.factors) factors.push_back(graph_to_json(g));
  Json covers = Json::array();
  for (const OrderedCliqueCover& c : f.covers) covers.push_back(cover_to_json(c));
  Json j = {{"family", f.family},
            {"n", f.n},
            {"k", f.k},
            {"base", graph_to_json(f.base)},
            {"factors", std::move(factors)},
            {"covers", std::move(covers)},
            {"chordal_cert", certificate_to_json(f.chordal_cert)},
            {"widths", f.widths},
            {"lstar", f.lstar}};
  if (f.width_bound) j["width_bound"] = *f.width_bound;
  return j;
}

Factorization factorization_from_json(const Json& j) {
  return parsing("factorization", [&] {
    Factorization f;
    f.family = j.value("family", std::string("unknown"));
    f.n = j.value("n", 0);
    f.k = j.value("k", 0);
    f.base = graph_from_json(j.at("base"));
    for (const Json& g : j.at("factors")) f.factors.push_back(graph_from_json(g));
    for (const Json& c : j.at("covers")) f.covers.push_back(cover_from_json(c));
    f.chordal_cert = certificate_from_json(j.at("chordal_cert"));
    f.widths = j.at("widths").get<std::vector<int>>();
    f.lstar = j.at("lstar").get<int>();
    if (j.contains("width_bound")) f.width_bound = j.at("width_bound").get<int>();
    return f;
  });
}

Measure measure_from_json(const Json& j) {
  return parsing("measure", [&] {
    const Json& weights = j.is_object() ? j.at("weights") : j;
    return Measure(weights.get<std::vector<double>>());
  });
}

Json separator_to_json(const SeparatorResult& r) {
  Json cliques = Json::array();
  for (const VertexSet& c : r.separator_cliques) cliques.push_back(set_to_json(c));
  return {{"separator", r.separator},
          {"separator_cliques", std::move(cliques)},
          {"side_a", r.side_a},
          {"side_b", r.side_b},
          {"mu_total", r.mu_total},
          {"mu_a", r.mu_a},
          {"mu_b", r.mu_b},
          {"mu_separator", r.mu_separator},
          {"lstar", r.lstar},
          {"d", r.d},
          {"bound_value", r.bound_value},
          {"alt_bound_value", r.alt_bound_value}};
}

Json audit_to_json(const AuditReport& r) {
  return {{"apex_vertex", r.apex_vertex},
          {"grid_clique", r.grid_clique},
          {"independent_set", r.independent_set},
          {"grid_clique_size", r.grid_clique_size},
          {"indep_size", r.indep_size},
          {"restricted_cover_sizes", r.restricted_cover_sizes},
          {"product_cells", r.product_cells},
          {"product_bound", r.product_bound},
          {"independent_in_cofactors", r.independent_in_cofactors}};
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"ok", r.ok()}, {"checks", std::move(checks)}};
}

Json ccw_to_json(const CcwResult& r) {
  return {{"width", r.width},
          {"exact", r.exact},
          {"nodes", r.nodes},
          {"cover", cover_to_json(r.cover)}};
}

Json bandwidth_to_json(const BandwidthResult& r) {
  return {{"width", r.width},
          {"exact", r.exact},
          {"nodes", r.nodes},
          {"ordering", r.ordering}};
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.size(); ++v) out << "  \"" << g.label(v).name() << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.label(e.u).name() << "\" -- \"" << g.label(e.v).name()
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string separator_csv_header() {
  return "family,n,k,N,lstar,sep_size,sep_cliques,bound,mu_a,mu_b";
}

std::string separator_csv_row(const Factorization& f, const SeparatorResult& r) {
  std::ostringstream out;
  out << f.family << ',' << f.n << ',' << f.k << ',' << f.base.size() << ','
      << r.lstar << ',' << r.separator.size() << ','
      << r.separator_cliques.size() << ',' << std::fixed << std::setprecision(3)
      << r.bound_value << ',' << number(r.mu_a) << ',' << number(r.mu_b);
  return out.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, e.what());
  }
}

}  // namespace apexsep
