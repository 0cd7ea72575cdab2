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

#ifndef APEXSEP_MEASURE_H_
#define APEXSEP_MEASURE_H_

#include <span>
#include <vector>

namespace apexsep {

// Vertex-weight measure: the measure of a subgraph is the sum of the weights
// of its vertices. Such sums are monotone, subadditive and additive over
// vertex-disjoint parts.
class Measure {
 public:
  // Throws Error(kInvalidMeasure) on negative or non-finite weights.
  explicit Measure(std::vector<double> weights);

  static Measure uniform(int n);

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int v) const { return weights_[v]; }
  double total() const { return total_; }
  const std::vector<double>& weights() const { return weights_; }

  // Sum of weights over `vertices`, each vertex counted once per occurrence.
  double of(std::span<const int> vertices) const;

 private:
  std::vector<double> weights_;
  double total_ = 0.0;
};

}  // namespace apexsep

#endif  // APEXSEP_MEASURE_H_
