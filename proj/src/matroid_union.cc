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

#include "ksec/matroid_union.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "ksec/errors.h"

namespace ksec {

PartitionCertificate::PartitionCertificate(int n, int parts)
    : parts_(parts), part_of_(n, -1) {}

ElementSet PartitionCertificate::Covered() const {
  ElementSet out;
  out.reserve(covered_);
  for (Element e = 0; e < static_cast<int>(part_of_.size()); ++e) {
    if (part_of_[e] >= 0) out.push_back(e);
  }
  return out;
}

void PartitionCertificate::AddPart() { parts_.emplace_back(); }

nlohmann::json PartitionCertificate::ToJson() const {
  nlohmann::json parts = nlohmann::json::array();
  for (const ElementSet& p : parts_) {
    ElementSet sorted = p;
    std::sort(sorted.begin(), sorted.end());
    parts.push_back(sorted);
  }
  return {{"parts", parts}};
}

void PartitionCertificate::Place(Element e, int part) {
  parts_[part].push_back(e);
  part_of_[e] = part;
  ++covered_;
}

void PartitionCertificate::Take(Element e) {
  ElementSet& p = parts_[part_of_[e]];
  auto it = std::find(p.begin(), p.end(), e);
  *it = p.back();
  p.pop_back();
  part_of_[e] = -1;
  --covered_;
}

UnionMatroid::UnionMatroid(std::vector<std::shared_ptr<const Matroid>> members,
                           Options options)
    : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("a union needs at least one member");
  n_ = members_[0]->size();
  for (const auto& m : members_) {
    if (m->size() != n_) throw PreconditionError("union members must share the ground set");
  }
  member_rank_.resize(members_.size());
  for (size_t j = 0; j < members_.size(); ++j) {
    member_rank_[j] = (j > 0 && members_[j] == members_[j - 1]) ? member_rank_[j - 1]
                                                                 : members_[j]->FullRank();
    rank_bound_ += member_rank_[j];
  }
  rank_bound_ = std::min(rank_bound_, n_);

  if (!options.block_fast_path) return;
  const BlockStructure* first = members_[0]->blocks();
  if (first == nullptr) return;
  const size_t blocks = first->caps.size();
  for (const auto& m : members_) {
    const BlockStructure* bs = m->blocks();
    if (bs == nullptr || bs->caps.size() != blocks) return;
    if (bs != first && bs->block_of != first->block_of) return;
  }
  block_of_ = &first->block_of;
  block_cap_.assign(blocks, 0);
  prefix_caps_.assign(blocks, std::vector<int>(members_.size() + 1, 0));
  for (size_t b = 0; b < blocks; ++b) {
    for (size_t j = 0; j < members_.size(); ++j) {
      prefix_caps_[b][j + 1] = prefix_caps_[b][j] + members_[j]->blocks()->caps[b];
    }
    block_cap_[b] = std::min(prefix_caps_[b].back(), first->block_size[b]);
  }
}

UnionMatroid UnionMatroid::Power(std::shared_ptr<const Matroid> m, int k, Options options) {
  if (k < 1) throw PreconditionError("union fold must be >= 1");
  return UnionMatroid(std::vector<std::shared_ptr<const Matroid>>(k, std::move(m)), options);
}

PartitionCertificate UnionMatroid::NewCertificate() const {
  PartitionCertificate cert(n_, fold());
  if (block_structured()) cert.block_fill_.assign(num_blocks(), 0);
  return cert;
}

void UnionMatroid::CheckElement(Element e) const {
  if (e < 0 || e >= n_) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside ground set of size " + std::to_string(n_));
  }
}

void UnionMatroid::CheckInsertable(const PartitionCertificate& cert, Element i) const {
  CheckElement(i);
  if (cert.num_parts() != fold() || static_cast<int>(cert.part_of_.size()) != n_) {
    throw PreconditionError("certificate does not match this union");
  }
  if (cert.covers(i)) {
    throw PreconditionError("element " + std::to_string(i) + " is already covered");
  }
}

bool UnionMatroid::Insert(PartitionCertificate& cert, Element i) const {
  CheckInsertable(cert, i);
  return block_structured() ? InsertBlock(cert, i) : InsertAugmenting(cert, i);
}

bool UnionMatroid::CanInsert(const PartitionCertificate& cert, Element i) const {
  CheckInsertable(cert, i);
  if (block_structured()) {
    int filled = 0;
    if (static_cast<int>(cert.block_fill_.size()) == num_blocks()) {
      filled = cert.block_fill_[block_of(i)];
    } else {
      for (Element e = 0; e < n_; ++e) {
        if (cert.covers(e) && block_of(e) == block_of(i)) ++filled;
      }
    }
    return filled < block_cap_[block_of(i)];
  }
  if (cert.covered_size() + 1 > rank_bound_) return false;
  std::vector<int> parent;
  return FindPath(cert, i, parent).has_value();
}

bool UnionMatroid::InsertBlock(PartitionCertificate& cert, Element i) const {
  if (static_cast<int>(cert.block_fill_.size()) != num_blocks()) {
    cert.block_fill_.assign(num_blocks(), 0);
    for (Element e = 0; e < n_; ++e) {
      if (cert.covers(e)) ++cert.block_fill_[block_of(e)];
    }
  }
  const int b = block_of(i);
  const int filled = cert.block_fill_[b];
  if (filled >= block_cap_[b]) return false;
  // Parts take the block's elements in member order, each up to its cap.
  const auto& prefix = prefix_caps_[b];
  const int part = static_cast<int>(std::upper_bound(prefix.begin(), prefix.end(), filled) -
                                    prefix.begin()) - 1;
  cert.Place(i, part);
  ++cert.block_fill_[b];
  return true;
}

namespace {
constexpr int kUnseen = -2;
}  // namespace

std::optional<std::pair<Element, int>> UnionMatroid::FindPath(const PartitionCertificate& cert,
                                                              Element source,
                                                              std::vector<int>& parent) const {
  const int k = fold();
  parent.assign(n_, kUnseen);
  std::deque<Element> queue = {source};
  parent[source] = -1;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (int j = 0; j < k; ++j) {
      if (cert.part_of(x) == j) continue;
      std::optional<ElementSet> circuit = members_[j]->Circuit(cert.parts_[j], x);
      if (!circuit) return std::pair{x, j};
      for (Element y : *circuit) {
        if (parent[y] != kUnseen) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

bool UnionMatroid::InsertAugmenting(PartitionCertificate& cert, Element source) const {
  if (cert.covered_size() + 1 > rank_bound_) return false;
  std::vector<int> parent;
  const auto end = FindPath(cert, source, parent);
  if (!end) return false;
  // Shift along the path: each element enters the part its successor
  // vacates; the last one fills its part directly.
  auto [cur, target] = *end;
  while (true) {
    const int vacated = cert.part_of(cur);
    if (vacated >= 0) cert.Take(cur);
    cert.Place(cur, target);
    if (cur == source) break;
    target = vacated;
    cur = parent[cur];
  }
  return true;
}

UnionMatroid::Independence UnionMatroid::IsIndependent(std::span<const Element> s) const {
  Independence out;
  out.certificate = NewCertificate();
  for (Element e : s) {
    if (!Insert(out.certificate, e)) {
      out.witness = e;
      return out;
    }
  }
  out.independent = true;
  return out;
}

PartitionCertificate UnionMatroid::MaxIndependent(std::span<const Element> s) const {
  PartitionCertificate cert = NewCertificate();
  for (Element e : s) Insert(cert, e);
  return cert;
}

int UnionMatroid::Rank(std::span<const Element> s) const {
  return MaxIndependent(s).covered_size();
}

bool UnionMatroid::SpanContains(std::span<const Element> s, Element i) const {
  CheckElement(i);
  if (std::find(s.begin(), s.end(), i) != s.end()) return true;
  return !CanInsert(MaxIndependent(s), i);
}

ElementSet UnionMatroid::MaxWeightBasis(const GroundSet& ground,
                                        std::span<const Element> s) const {
  ElementSet sorted(s.begin(), s.end());
  ground.SortByWeight(sorted);
  PartitionCertificate cert = NewCertificate();
  ElementSet basis;
  for (Element e : sorted) {
    if (Insert(cert, e)) basis.push_back(e);
  }
  return basis;
}

bool UnionMatroid::Improves(const GroundSet& ground, std::span<const Element> s,
                            Element i) const {
  CheckElement(i);
  ElementSet heavier;
  for (Element j : s) {
    if (j == i) throw PreconditionError("improves: element already in the set");
    if (ground.Heavier(j, i)) heavier.push_back(j);
  }
  return !SpanContains(heavier, i);
}

bool UnionMatroid::Validate(const PartitionCertificate& cert) const {
  if (cert.num_parts() != fold() || static_cast<int>(cert.part_of_.size()) != n_) {
    return false;
  }
  std::vector<char> seen(n_, 0);
  int total = 0;
  for (int j = 0; j < fold(); ++j) {
    for (Element e : cert.parts_[j]) {
      if (e < 0 || e >= n_ || seen[e] || cert.part_of_[e] != j) return false;
      seen[e] = 1;
      ++total;
    }
    if (!members_[j]->IsIndependent(cert.parts_[j])) return false;
  }
  for (Element e = 0; e < n_; ++e) {
    if ((cert.part_of_[e] >= 0) != static_cast<bool>(seen[e])) return false;
  }
  return total == cert.covered_size();
}

}  // namespace ksec
