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

#ifndef APEXSEP_IO_H_
#define APEXSEP_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "apexsep/chordal.h"
#include "apexsep/cliquecover.h"
#include "apexsep/constructions.h"
#include "apexsep/graph.h"
#include "apexsep/measure.h"
#include "apexsep/separator.h"
#include "apexsep/verify.h"

namespace apexsep {

using Json = nlohmann::json;

// Graph format: {"n": int, "edges": [[u, v], ...] with u < v,
// "labels": [{"kind": "grid"|"apex"|"plain", "part", ...}]}. Grid labels
// carry "row"/"col", apex and plain labels carry "id".
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Array of arrays of vertex indices, order-significant.
Json cover_to_json(const OrderedCliqueCover& cover);
OrderedCliqueCover cover_from_json(const Json& j);

// {"peo": [...]} or {"hole": [...]}.
Json certificate_to_json(const ChordalCertificate& cert);
ChordalCertificate certificate_from_json(const Json& j);

// Envelope {"base", "factors", "covers", "chordal_cert", "widths", "lstar",
// "width_bound"?, "family", "n", "k"}.
Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

// Either an array of weights or {"weights": [...]}.
Measure measure_from_json(const Json& j);

Json separator_to_json(const SeparatorResult& r);
Json audit_to_json(const AuditReport& r);
Json report_to_json(const VerificationReport& r);
Json ccw_to_json(const CcwResult& r);
Json bandwidth_to_json(const BandwidthResult& r);

// Undirected DOT with label names as node names.
std::string to_dot(const Graph& g);

// family,n,k,N,lstar,sep_size,sep_cliques,bound,mu_a,mu_b
std::string separator_csv_header();
std::string separator_csv_row(const Factorization& f, const SeparatorResult& r);

// Throws Error(kParse) on malformed text.
Json parse_json(const std::string& text);

}  // namespace apexsep

#endif  // APEXSEP_IO_H_
