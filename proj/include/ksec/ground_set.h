// Copyright 2026 The Authors.
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

#ifndef KSEC_GROUND_SET_H_
#define KSEC_GROUND_SET_H_

#include <span>
#include <vector>

namespace ksec {

using Element = int;
// Duplicate-free list of element labels. Order is significant only where an
// operation says so (e.g. acceptance order, decreasing weight).
using ElementSet = std::vector<Element>;

// Elements 0..n-1 with strictly positive weights.
//
// All weight comparisons go through the precomputed rank order: position 0 is
// the heaviest element, and equal weights are ordered by lower label first, so
// the total order the algorithms rely on exists even for tied user input.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<double> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(Element e) const { return weights_[e]; }
  const std::vector<double>& weights() const { return weights_; }

  int position(Element e) const { return position_[e]; }
  Element ByPosition(int p) const { return order_[p]; }
  // Elements sorted from heaviest to lightest.
  const std::vector<Element>& order() const { return order_; }
  bool Heavier(Element a, Element b) const {
    return position_[a] < position_[b];
  }

  double Weight(std::span<const Element> s) const;
  // Sorts heaviest first.
  void SortByWeight(ElementSet& s) const;
  bool HasDistinctWeights() const;

  // Throws std::out_of_range for labels outside 0..n-1.
  void CheckElement(Element e) const;
  void CheckElements(std::span<const Element> s) const;

 private:
  std::vector<double> weights_;
  std::vector<int> position_;
  std::vector<Element> order_;
};

}  // namespace ksec

#endif  // KSEC_GROUND_SET_H_
