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

#ifndef KSEC_MATROID_H_
#define KSEC_MATROID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ksec/ground_set.h"

namespace ksec {

// Matroids whose independence is "at most caps[b] elements from block b".
// Uniform and partition matroids expose this; unions of members that share
// the same blocks collapse to a single closed form.
struct BlockStructure {
  std::vector<int> block_of;  // per element
  std::vector<int> caps;      // per block
  std::vector<int> block_size;
};

// Independence oracle over the ground set 0..size()-1.
//
// Implementations are immutable after construction: every query allocates its
// own scratch state, so one instance may be shared by concurrent readers.
// Element spans passed to queries must be duplicate-free.
class Matroid {
 public:
  explicit Matroid(int n) : n_(n) {}
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int size() const { return n_; }
  virtual std::string_view kind() const = 0;

  bool IsIndependent(std::span<const Element> s) const;
  int Rank(std::span<const Element> s) const;
  // All i with Rank(s + i) == Rank(s), sorted by label.
  ElementSet Span(std::span<const Element> s) const;
  // For independent `base`: nullopt if base + x is independent, otherwise the
  // elements of base on the unique circuit of base + x (x itself excluded).
  std::optional<ElementSet> Circuit(std::span<const Element> base, Element x) const;
  int FullRank() const;

  virtual const BlockStructure* blocks() const { return nullptr; }
  virtual nlohmann::json ToJson() const = 0;

 protected:
  virtual bool IndependentImpl(std::span<const Element> s) const = 0;
  // Greedy: correct for any matroid by the exchange property.
  virtual int RankImpl(std::span<const Element> s) const;
  virtual ElementSet SpanImpl(std::span<const Element> s) const;
  virtual std::optional<ElementSet> CircuitImpl(std::span<const Element> base,
                                                Element x) const;

  void CheckElement(Element e) const;
  void CheckElements(std::span<const Element> s) const;
  // Throws LoopError if some singleton is dependent. Derived constructors call
  // this once their state is complete.
  void RejectLoops() const;

 private:
  int n_;
};

// Bitmask helpers for the exhaustive (n <= 16) routines.
using Mask = std::uint32_t;
Mask ToMask(std::span<const Element> s);
ElementSet FromMask(Mask m);
ElementSet AllElements(int n);

}  // namespace ksec

#endif  // KSEC_MATROID_H_
