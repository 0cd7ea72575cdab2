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

#include "apexsep/error.h"

namespace apexsep {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kMismatchedVertexSets: return "MismatchedVertexSets";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kInvalidEdge: return "InvalidEdge";
    case Errc::kDuplicateLabel: return "DuplicateLabel";
    case Errc::kInvalidPeo: return "InvalidPEO";
    case Errc::kNotChordal: return "NotChordal";
    case Errc::kInvalidCover: return "InvalidCover";
    case Errc::kInvalidMeasure: return "InvalidMeasure";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kInvalidSize: return "InvalidSize";
    case Errc::kInvalidApexEdge: return "InvalidApexEdge";
    case Errc::kJunctionNotClique: return "JunctionNotClique";
    case Errc::kBadRemovedEdge: return "BadRemovedEdge";
    case Errc::kUnequalApexSizes: return "UnequalApexSizes";
    case Errc::kEmptyParts: return "EmptyParts";
    case Errc::kInvalidFactorization: return "InvalidFactorization";
    case Errc::kNotCliqueInFactorOne: return "NotCliqueInFactorOne";
    case Errc::kNoApex: return "NoApex";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

}  // namespace apexsep
