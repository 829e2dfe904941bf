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

#include "ksec/matroids.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "ksec/errors.h"

namespace ksec {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // False if a and b were already connected.
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

nlohmann::json SetsToJson(const std::vector<ElementSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

// --- uniform ---------------------------------------------------------------

UniformMatroid::UniformMatroid(int n, int cap) : Matroid(n), cap_(cap) {
  if (n < 0) throw PreconditionError("uniform matroid needs n >= 0");
  if (cap < 1 && n > 0) {
    throw LoopError("uniform matroid with cap < 1 has only loops");
  }
  blocks_.block_of.assign(n, 0);
  blocks_.caps = {cap};
  blocks_.block_size = {n};
}

bool UniformMatroid::IndependentImpl(std::span<const Element> s) const {
  return static_cast<int>(s.size()) <= cap_;
}

int UniformMatroid::RankImpl(std::span<const Element> s) const {
  return std::min(static_cast<int>(s.size()), cap_);
}

ElementSet UniformMatroid::SpanImpl(std::span<const Element> s) const {
  if (static_cast<int>(s.size()) >= cap_) return AllElements(size());
  ElementSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ElementSet> UniformMatroid::CircuitImpl(std::span<const Element> base,
                                                      Element) const {
  if (static_cast<int>(base.size()) < cap_) return std::nullopt;
  return ElementSet(base.begin(), base.end());
}

nlohmann::json UniformMatroid::ToJson() const {
  return {{"kind", "uniform"}, {"n", size()}, {"cap", cap_}};
}

// --- partition -------------------------------------------------------------

PartitionMatroid::PartitionMatroid(std::vector<int> block_of, std::vector<int> caps)
    : Matroid(static_cast<int>(block_of.size())) {
  const int blocks = static_cast<int>(caps.size());
  blocks_.block_size.assign(blocks, 0);
  for (size_t e = 0; e < block_of.size(); ++e) {
    if (block_of[e] < 0 || block_of[e] >= blocks) {
      throw PreconditionError("element " + std::to_string(e) +
                              " assigned to unknown block");
    }
    ++blocks_.block_size[block_of[e]];
  }
  for (int b = 0; b < blocks; ++b) {
    if (caps[b] < 1 && blocks_.block_size[b] > 0) {
      throw LoopError("partition block " + std::to_string(b) +
                      " has cap < 1, so its elements are loops");
    }
  }
  blocks_.block_of = std::move(block_of);
  blocks_.caps = std::move(caps);
}

std::shared_ptr<PartitionMatroid> PartitionMatroid::FromBlockSizes(
    const std::vector<int>& sizes, std::vector<int> caps) {
  if (sizes.size() != caps.size()) {
    throw PreconditionError("partition matroid needs one cap per block");
  }
  std::vector<int> block_of;
  for (size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] < 0) throw PreconditionError("negative block size");
    block_of.insert(block_of.end(), sizes[b], static_cast<int>(b));
  }
  return std::make_shared<PartitionMatroid>(std::move(block_of), std::move(caps));
}

bool PartitionMatroid::IndependentImpl(std::span<const Element> s) const {
  std::vector<int> count(blocks_.caps.size(), 0);
  for (Element e : s) {
    const int b = blocks_.block_of[e];
    if (++count[b] > blocks_.caps[b]) return false;
  }
  return true;
}

int PartitionMatroid::RankImpl(std::span<const Element> s) const {
  std::vector<int> count(blocks_.caps.size(), 0);
  int rank = 0;
  for (Element e : s) {
    const int b = blocks_.block_of[e];
    if (count[b] < blocks_.caps[b]) {
      ++count[b];
      ++rank;
    }
  }
  return rank;
}

ElementSet PartitionMatroid::SpanImpl(std::span<const Element> s) const {
  std::vector<int> count(blocks_.caps.size(), 0);
  std::vector<char> in_s(size(), 0);
  for (Element e : s) {
    ++count[blocks_.block_of[e]];
    in_s[e] = 1;
  }
  ElementSet out;
  for (Element e = 0; e < size(); ++e) {
    const int b = blocks_.block_of[e];
    if (in_s[e] || count[b] >= blocks_.caps[b]) out.push_back(e);
  }
  return out;
}

std::optional<ElementSet> PartitionMatroid::CircuitImpl(std::span<const Element> base,
                                                        Element x) const {
  const int b = blocks_.block_of[x];
  ElementSet same;
  for (Element e : base) {
    if (blocks_.block_of[e] == b) same.push_back(e);
  }
  if (static_cast<int>(same.size()) < blocks_.caps[b]) return std::nullopt;
  return same;
}

nlohmann::json PartitionMatroid::ToJson() const {
  std::vector<ElementSet> blocks(blocks_.caps.size());
  for (Element e = 0; e < size(); ++e) blocks[blocks_.block_of[e]].push_back(e);
  return {{"kind", "partition"}, {"blocks", SetsToJson(blocks)}, {"caps", blocks_.caps}};
}

// --- graphic ---------------------------------------------------------------

GraphicMatroid::GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())), vertices_(vertices), edges_(std::move(edges)) {
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
      throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                              std::to_string(vertices_ - 1));
    }
  }
  RejectLoops();
}

std::shared_ptr<GraphicMatroid> GraphicMatroid::Complete(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  }
  return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
}

bool GraphicMatroid::IndependentImpl(std::span<const Element> s) const {
  UnionFind uf(vertices_);
  for (Element e : s) {
    if (!uf.Unite(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

int GraphicMatroid::RankImpl(std::span<const Element> s) const {
  UnionFind uf(vertices_);
  int rank = 0;
  for (Element e : s) rank += uf.Unite(edges_[e].first, edges_[e].second) ? 1 : 0;
  return rank;
}

ElementSet GraphicMatroid::SpanImpl(std::span<const Element> s) const {
  UnionFind uf(vertices_);
  for (Element e : s) uf.Unite(edges_[e].first, edges_[e].second);
  ElementSet out;
  for (Element e = 0; e < size(); ++e) {
    if (uf.Find(edges_[e].first) == uf.Find(edges_[e].second)) out.push_back(e);
  }
  return out;
}

std::optional<ElementSet> GraphicMatroid::CircuitImpl(std::span<const Element> base,
                                                      Element x) const {
  const auto [from, to] = edges_[x];
  // Walk the forest formed by base from one endpoint of x to the other.
  std::vector<std::vector<std::pair<int, Element>>> adj(vertices_);
  for (Element e : base) {
    adj[edges_[e].first].emplace_back(edges_[e].second, e);
    adj[edges_[e].second].emplace_back(edges_[e].first, e);
  }
  std::vector<Element> via(vertices_, -1);
  std::vector<int> prev(vertices_, -1);
  std::vector<char> seen(vertices_, 0);
  std::deque<int> queue = {from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [v, e] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      prev[v] = u;
      via[v] = e;
      queue.push_back(v);
    }
  }
  if (!seen[to]) return std::nullopt;
  ElementSet path;
  for (int v = to; v != from; v = prev[v]) path.push_back(via[v]);
  return path;
}

nlohmann::json GraphicMatroid::ToJson() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : edges_) edges.push_back({u, v});
  return {{"kind", "graphic"}, {"vertices", vertices_}, {"edges", edges}};
}

// --- linear ----------------------------------------------------------------

LinearMatroid::LinearMatroid(int prime, const FieldMatrix& rows)
    : Matroid(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
      field_(prime),
      dimension_(static_cast<int>(rows.size())) {
  columns_.assign(size(), std::vector<int>(dimension_, 0));
  for (int r = 0; r < dimension_; ++r) {
    if (static_cast<int>(rows[r].size()) != size()) {
      throw PreconditionError("matrix rows have unequal length");
    }
    for (int c = 0; c < size(); ++c) columns_[c][r] = field_.Reduce(rows[r][c]);
  }
  RejectLoops();
}

FieldMatrix LinearMatroid::Columns(std::span<const Element> s) const {
  FieldMatrix a(dimension_, std::vector<int>(s.size()));
  for (size_t j = 0; j < s.size(); ++j) {
    for (int r = 0; r < dimension_; ++r) a[r][j] = columns_[s[j]][r];
  }
  return a;
}

bool LinearMatroid::IndependentImpl(std::span<const Element> s) const {
  if (static_cast<int>(s.size()) > dimension_) return false;
  return RowReduce(Columns(s), field_).rank() == static_cast<int>(s.size());
}

int LinearMatroid::RankImpl(std::span<const Element> s) const {
  return RowReduce(Columns(s), field_).rank();
}

ElementSet LinearMatroid::SpanImpl(std::span<const Element> s) const {
  // Column e is spanned iff appending it leaves the rank unchanged.
  const Echelon ech = RowReduce(Columns(s), field_);
  ElementSet out;
  const FieldMatrix cols = Columns(s);
  for (Element e = 0; e < size(); ++e) {
    FieldMatrix aug = cols;
    for (int r = 0; r < dimension_; ++r) aug[r].push_back(columns_[e][r]);
    if (RowReduce(std::move(aug), field_).rank() == ech.rank()) out.push_back(e);
  }
  return out;
}

std::optional<ElementSet> LinearMatroid::CircuitImpl(std::span<const Element> base,
                                                     Element x) const {
  FieldMatrix a = Columns(base);
  for (int r = 0; r < dimension_; ++r) a[r].push_back(columns_[x][r]);
  const int k = static_cast<int>(base.size());
  Echelon ech = RowReduce(std::move(a), field_);
  // base is independent, so its columns are the first k pivots.
  if (ech.rank() > k) return std::nullopt;
  ElementSet circuit;
  for (int r = 0; r < k; ++r) {
    if (ech.reduced[r][k] != 0) circuit.push_back(base[ech.pivot_columns[r]]);
  }
  return circuit;
}

nlohmann::json LinearMatroid::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < dimension_; ++r) {
    std::vector<int> row(size());
    for (int c = 0; c < size(); ++c) row[c] = columns_[c][r];
    rows.push_back(row);
  }
  return {{"kind", "linear"}, {"prime", prime()}, {"matrix", rows}};
}

// --- explicit --------------------------------------------------------------

ExplicitMatroid::ExplicitMatroid(int n, const std::vector<ElementSet>& independent,
                                 Validation validation)
    : Matroid(n) {
  if (n > kMaxSize) {
    throw EnumerationLimitError("explicit matroids support n <= " +
                                std::to_string(kMaxSize));
  }
  for (const ElementSet& s : independent) {
    CheckElements(s);
    table_.insert(ToMask(s));
  }
  if (validation == Validation::kRejectLoops) {
    if (!table_.count(0)) throw PreconditionError("explicit matroid must contain the empty set");
    RejectLoops();
  }
}

std::shared_ptr<ExplicitMatroid> ExplicitMatroid::Tabulate(const Matroid& m) {
  if (m.size() > 16) {
    throw EnumerationLimitError("tabulating needs n <= 16");
  }
  std::vector<ElementSet> sets;
  const Mask limit = Mask{1} << m.size();
  for (Mask s = 0; s < limit; ++s) {
    ElementSet set = FromMask(s);
    if (m.IsIndependent(set)) sets.push_back(std::move(set));
  }
  return std::make_shared<ExplicitMatroid>(m.size(), sets);
}

bool ExplicitMatroid::IndependentImpl(std::span<const Element> s) const {
  return table_.count(ToMask(s)) > 0;
}

std::vector<ElementSet> ExplicitMatroid::IndependentSets() const {
  std::vector<Mask> masks(table_.begin(), table_.end());
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<ElementSet> out;
  for (Mask m : masks) out.push_back(FromMask(m));
  return out;
}

nlohmann::json ExplicitMatroid::ToJson() const {
  return {{"kind", "explicit"}, {"n", size()}, {"independent", SetsToJson(IndependentSets())}};
}

}  // namespace ksec
