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

#ifndef APEXSEP_ERROR_H_
#define APEXSEP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace apexsep {

// Every failure raised by the library carries one of these codes so callers
// (notably the CLI) can map them onto stable exit codes and messages.
enum class Errc {
  kMismatchedVertexSets,
  kVertexOutOfRange,
  kInvalidEdge,
  kDuplicateLabel,
  kInvalidPeo,
  kNotChordal,
  kInvalidCover,
  kInvalidMeasure,
  kInvalidArgument,
  kInvalidSize,
  kInvalidApexEdge,
  kJunctionNotClique,
  kBadRemovedEdge,
  kUnequalApexSizes,
  kEmptyParts,
  kInvalidFactorization,
  kNotCliqueInFactorOne,
  kNoApex,
  kParse,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace apexsep

#endif  // APEXSEP_ERROR_H_
