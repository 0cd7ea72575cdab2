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

#ifndef APEXSEP_VERIFY_H_
#define APEXSEP_VERIFY_H_

#include <string>
#include <vector>

#include "apexsep/constructions.h"

namespace apexsep {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  // nullptr when every check passed.
  const CheckResult* first_failure() const;
};

// Re-derives every claim of a factorization from the raw graphs: shared
// vertex set, edge intersection, chordal certificate, cover validity, cover
// widths, l* and the promised width bound. Nothing stored in `f` besides the
// graphs and certificates is trusted.
VerificationReport verify_factorization(const Factorization& f);

}  // namespace apexsep

#endif  // APEXSEP_VERIFY_H_
