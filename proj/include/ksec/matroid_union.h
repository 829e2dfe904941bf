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

#ifndef KSEC_MATROID_UNION_H_
#define KSEC_MATROID_UNION_H_

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ksec/ground_set.h"
#include "ksec/matroid.h"

namespace ksec {

// Witness that the covered elements lie in a union of matroids: part j is
// independent in member j and parts are pairwise disjoint.
//
// A certificate is exclusively owned mutable state; it is grown through
// UnionMatroid::Insert, which may move elements between parts.
class PartitionCertificate {
 public:
  PartitionCertificate() = default;
  PartitionCertificate(int n, int parts);

  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<ElementSet>& parts() const { return parts_; }
  const ElementSet& part(int j) const { return parts_[j]; }
  // -1 if e is not covered.
  int part_of(Element e) const { return part_of_[e]; }
  bool covers(Element e) const { return part_of_[e] >= 0; }
  int covered_size() const { return covered_; }
  // Sorted by label.
  ElementSet Covered() const;

  // Appends an empty part; used when a union grows by one member.
  void AddPart();

  // {"parts": [[ids]...]}
  nlohmann::json ToJson() const;

 private:
  friend class UnionMatroid;
  void Place(Element e, int part);
  void Take(Element e);

  std::vector<ElementSet> parts_;
  std::vector<int> part_of_;
  std::vector<int> block_fill_;  // per-block counts for the closed-form path
  int covered_ = 0;
};

struct UnionOptions {
  // Use the closed form when all members share one BlockStructure.
  bool block_fast_path = true;
};

// Union M_1 v ... v M_k of matroids over one ground set.
//
// Membership is decided by augmenting-path matroid partitioning: to insert
// an element, breadth-first search runs over the exchange graph whose arcs
// x -> y (labelled j) mean "x can enter part j if y leaves it", and the
// shortest path to an element that fits some part directly is applied.
//
// When every member exposes the same BlockStructure (uniform and partition
// matroids over identical blocks), the union is itself block-structured with
// summed caps and insertion is a counter update.
class UnionMatroid {
 public:
  using Options = UnionOptions;

  explicit UnionMatroid(std::vector<std::shared_ptr<const Matroid>> members,
                        Options options = {});
  // k copies of m.
  static UnionMatroid Power(std::shared_ptr<const Matroid> m, int k,
                            Options options = {});

  int size() const { return n_; }
  int fold() const { return static_cast<int>(members_.size()); }
  const Matroid& member(int j) const { return *members_[j]; }
  const std::vector<std::shared_ptr<const Matroid>>& members() const { return members_; }
  // Non-null when the closed-form path is active.
  bool block_structured() const { return block_of_ != nullptr; }

  PartitionCertificate NewCertificate() const;

  // Tries to extend cert to cover i. On failure cover(cert) + i is dependent
  // in the union and cert is left unchanged. Throws PreconditionError if i is
  // already covered or cert has the wrong number of parts.
  bool Insert(PartitionCertificate& cert, Element i) const;
  // Whether Insert(cert, i) would succeed, without modifying cert.
  bool CanInsert(const PartitionCertificate& cert, Element i) const;

  struct Independence {
    bool independent = false;
    // Certificate for the maximal prefix of the input that was insertable.
    PartitionCertificate certificate;
    // First element whose insertion failed.
    std::optional<Element> witness;
  };
  Independence IsIndependent(std::span<const Element> s) const;

  // Greedy in the given order; the result covers a maximum independent subset.
  PartitionCertificate MaxIndependent(std::span<const Element> s) const;
  int Rank(std::span<const Element> s) const;
  // Rank(s + i) == Rank(s).
  bool SpanContains(std::span<const Element> s, Element i) const;

  // Max-weight independent subset, heaviest first.
  ElementSet MaxWeightBasis(const GroundSet& ground, std::span<const Element> s) const;
  bool Improves(const GroundSet& ground, std::span<const Element> s, Element i) const;

  // Parts disjoint, consistent with part_of, each independent in its member.
  bool Validate(const PartitionCertificate& cert) const;

  // Closed-form data, valid when block_structured().
  int block_of(Element e) const { return (*block_of_)[e]; }
  int block_cap(int b) const { return block_cap_[b]; }
  int num_blocks() const { return static_cast<int>(block_cap_.size()); }

 private:
  bool InsertBlock(PartitionCertificate& cert, Element i) const;
  bool InsertAugmenting(PartitionCertificate& cert, Element i) const;
  // Breadth-first search for an augmenting path from i. Returns the path's
  // last element and the part it enters, filling parent[] along the way.
  std::optional<std::pair<Element, int>> FindPath(const PartitionCertificate& cert, Element i,
                                                  std::vector<int>& parent) const;
  void CheckInsertable(const PartitionCertificate& cert, Element i) const;
  void CheckElement(Element e) const;

  int n_ = 0;
  std::vector<std::shared_ptr<const Matroid>> members_;
  std::vector<int> member_rank_;
  int rank_bound_ = 0;

  const std::vector<int>* block_of_ = nullptr;
  std::vector<int> block_cap_;
  // prefix_caps_[b][j] = sum of caps of block b in members 0..j-1.
  std::vector<std::vector<int>> prefix_caps_;
};

}  // namespace ksec

#endif  // KSEC_MATROID_UNION_H_
