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

#include "apexsep/verify.h"

#include <algorithm>

namespace apexsep {
namespace {

std::string edge_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

CheckResult check_vertex_sets(const Factorization& f) {
  CheckResult r{"vertex sets", true, ""};
  if (f.factors.size() < 2) {
    r.passed = false;
    r.detail = "vertex set mismatch: need at least two factors";
    return r;
  }
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (f.factors[i].labels() != f.base.labels()) {
      r.passed = false;
      r.detail = "vertex set mismatch: factor " + std::to_string(i + 1) +
                 " has different vertices than the base graph";
      return r;
    }
  }
  return r;
}

// Edge-by-edge scan in both directions, independent of intersect_graphs().
CheckResult check_intersection(const Factorization& f) {
  CheckResult r{"intersection", true, ""};
  for (const Edge& e : f.base.edges()) {
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      if (!f.factors[i].has_edge(e.u, e.v)) {
        r.passed = false;
        r.detail = "intersection mismatch: base edge " + edge_text(e.u, e.v) +
                   " missing from factor " + std::to_string(i + 1);
        return r;
      }
    }
  }
  for (const Edge& e : f.factors.front().edges()) {
    if (f.base.has_edge(e.u, e.v)) continue;
    bool everywhere = true;
    for (const Graph& factor : f.factors) {
      everywhere = everywhere && factor.has_edge(e.u, e.v);
    }
    if (everywhere) {
      r.passed = false;
      r.detail = "intersection mismatch: edge " + edge_text(e.u, e.v) +
                 " lies in every factor but not in the base graph";
      return r;
    }
  }
  return r;
}

}  // namespace

bool VerificationReport::ok() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerificationReport verify_factorization(const Factorization& f) {
  VerificationReport report;
  report.checks.push_back(check_vertex_sets(f));
  if (!report.checks.back().passed) return report;

  report.checks.push_back(check_intersection(f));

  CheckResult chordal{"chordal certificate", true, ""};
  if (!certifies_chordal(f.factors.front(), f.chordal_cert)) {
    chordal.passed = false;
    chordal.detail =
        "chordal certificate invalid: factor 1 is not certified chordal by "
        "the stored perfect elimination order";
  }
  report.checks.push_back(chordal);

  CheckResult covers{"cover validity", true, ""};
  std::vector<int> recomputed;
  if (f.covers.size() + 1 != f.factors.size()) {
    covers.passed = false;
    covers.detail = "cover invalid: expected one cover per factor after the first";
  } else {
    for (std::size_t i = 0; i < f.covers.size(); ++i) {
      const Graph& factor = f.factors[i + 1];
      if (CoverCheck c = verify_cover(factor, f.covers[i]); !c) {
        covers.passed = false;
        covers.detail = "cover invalid: cover of factor " +
                        std::to_string(i + 2) + ": " + c.failure;
        break;
      }
      recomputed.push_back(cover_width(factor, f.covers[i]).width);
    }
  }
  report.checks.push_back(covers);
  if (!covers.passed) return report;

  CheckResult widths{"cover widths", true, ""};
  if (f.widths.size() != recomputed.size()) {
    widths.passed = false;
    widths.detail = "cover width mismatch: " + std::to_string(f.widths.size()) +
                    " claimed widths for " + std::to_string(recomputed.size()) +
                    " covers";
  } else {
    for (std::size_t i = 0; i < recomputed.size(); ++i) {
      if (f.widths[i] != recomputed[i]) {
        widths.passed = false;
        widths.detail = "cover width mismatch: cover of factor " +
                        std::to_string(i + 2) + " claims " +
                        std::to_string(f.widths[i]) + ", recomputed " +
                        std::to_string(recomputed[i]);
        break;
      }
    }
  }
  report.checks.push_back(widths);

  const int lstar = recomputed.empty()
                        ? 0
                        : *std::max_element(recomputed.begin(), recomputed.end());
  CheckResult lstar_check{"lstar", true, ""};
  if (f.lstar != lstar) {
    lstar_check.passed = false;
    lstar_check.detail = "lstar mismatch: claims " + std::to_string(f.lstar) +
                         ", recomputed " + std::to_string(lstar);
  }
  report.checks.push_back(lstar_check);

  if (f.width_bound) {
    CheckResult bound{"width bound", true, ""};
    if (lstar > *f.width_bound) {
      bound.passed = false;
      bound.detail = "width bound exceeded: " + std::to_string(lstar) + " > " +
                     std::to_string(*f.width_bound);
    }
    report.checks.push_back(bound);
  }
  return report;
}

}  // namespace apexsep
