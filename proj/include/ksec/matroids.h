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

#ifndef KSEC_MATROIDS_H_
#define KSEC_MATROIDS_H_

#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ksec/matroid.h"
#include "ksec/prime_field.h"

namespace ksec {

// Sets of size at most cap.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int cap);

  std::string_view kind() const override { return "uniform"; }
  int cap() const { return cap_; }
  const BlockStructure* blocks() const override { return &blocks_; }
  nlohmann::json ToJson() const override;

 protected:
  bool IndependentImpl(std::span<const Element> s) const override;
  int RankImpl(std::span<const Element> s) const override;
  ElementSet SpanImpl(std::span<const Element> s) const override;
  std::optional<ElementSet> CircuitImpl(std::span<const Element> base,
                                        Element x) const override;

 private:
  int cap_;
  BlockStructure blocks_;
};

// At most caps[b] elements from each block b.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> caps);
  // Consecutive blocks of the given sizes.
  static std::shared_ptr<PartitionMatroid> FromBlockSizes(
      const std::vector<int>& sizes, std::vector<int> caps);

  std::string_view kind() const override { return "partition"; }
  const BlockStructure* blocks() const override { return &blocks_; }
  nlohmann::json ToJson() const override;

 protected:
  bool IndependentImpl(std::span<const Element> s) const override;
  int RankImpl(std::span<const Element> s) const override;
  ElementSet SpanImpl(std::span<const Element> s) const override;
  std::optional<ElementSet> CircuitImpl(std::span<const Element> base,
                                        Element x) const override;

 private:
  BlockStructure blocks_;
};

// Cycle matroid of a multigraph; element e is edges[e]. Self-loops are
// rejected as matroid loops, parallel edges are allowed.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges);
  static std::shared_ptr<GraphicMatroid> Complete(int vertices);

  std::string_view kind() const override { return "graphic"; }
  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  nlohmann::json ToJson() const override;

 protected:
  bool IndependentImpl(std::span<const Element> s) const override;
  int RankImpl(std::span<const Element> s) const override;
  ElementSet SpanImpl(std::span<const Element> s) const override;
  std::optional<ElementSet> CircuitImpl(std::span<const Element> base,
                                        Element x) const override;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Column matroid of a matrix over GF(p); element e is column e.
class LinearMatroid : public Matroid {
 public:
  // `rows` is row-major with n = rows[0].size() columns. Entries are reduced
  // mod p. Zero columns are loops and rejected.
  LinearMatroid(int prime, const FieldMatrix& rows);

  std::string_view kind() const override { return "linear"; }
  int prime() const { return field_.prime(); }
  int dimension() const { return dimension_; }
  nlohmann::json ToJson() const override;

 protected:
  bool IndependentImpl(std::span<const Element> s) const override;
  int RankImpl(std::span<const Element> s) const override;
  ElementSet SpanImpl(std::span<const Element> s) const override;
  std::optional<ElementSet> CircuitImpl(std::span<const Element> base,
                                        Element x) const override;

 private:
  // Matrix whose columns are the given elements (rows = dimension_).
  FieldMatrix Columns(std::span<const Element> s) const;

  PrimeField field_;
  int dimension_;
  std::vector<std::vector<int>> columns_;
};

// Table of independent sets, for small ground sets (n <= 20). Intended for
// brute-force tests; the table is not required to satisfy the axioms unless
// loops are checked, see CheckAxioms.
class ExplicitMatroid : public Matroid {
 public:
  static constexpr int kMaxSize = 20;
  enum class Validation { kRejectLoops, kNone };

  ExplicitMatroid(int n, const std::vector<ElementSet>& independent,
                  Validation validation = Validation::kRejectLoops);
  // Tabulates every independent set of `m` (m.size() <= 16).
  static std::shared_ptr<ExplicitMatroid> Tabulate(const Matroid& m);

  std::string_view kind() const override { return "explicit"; }
  std::vector<ElementSet> IndependentSets() const;
  nlohmann::json ToJson() const override;

 protected:
  bool IndependentImpl(std::span<const Element> s) const override;

 private:
  std::unordered_set<Mask> table_;
};

}  // namespace ksec

#endif  // KSEC_MATROIDS_H_
