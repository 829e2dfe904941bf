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

#include "ksec/instance.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "ksec/errors.h"
#include "ksec/matroid_ops.h"
#include "ksec/matroids.h"
#include "ksec/rng.h"

namespace ksec {
namespace {

constexpr int kMaxTieRedraws = 1000;

template <typename T>
T Require(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ConfigError(std::string("missing field \"") + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T Optional(const nlohmann::json& obj, const char* key, T fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return Require<T>(obj, key);
}

void RequirePositive(int value, const char* what) {
  if (value < 1) throw ConfigError(std::string(what) + " must be positive");
}

std::vector<std::pair<int, int>> RandomGraphEdges(int vertices, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p_edge must be in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (rng.Bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

FieldMatrix RandomColumns(int prime, int rank, int n, std::uint64_t seed) {
  Rng rng(seed);
  FieldMatrix a(rank, std::vector<int>(n, 0));
  for (int c = 0; c < n; ++c) {
    bool nonzero = false;
    while (!nonzero) {
      for (int r = 0; r < rank; ++r) {
        a[r][c] = static_cast<int>(rng.UniformInt(prime));
        nonzero |= a[r][c] != 0;
      }
    }
  }
  return a;
}

std::shared_ptr<const Matroid> BuildMatroid(const nlohmann::json& spec, std::uint64_t seed,
                                            bool check_axioms) {
  const auto kind = Require<std::string>(spec, "kind");
  if (kind == "uniform") {
    return std::make_shared<UniformMatroid>(Require<int>(spec, "n"), Require<int>(spec, "cap"));
  }
  if (kind == "partition") {
    const auto caps = Require<std::vector<int>>(spec, "caps");
    if (spec.contains("block_sizes")) {
      return PartitionMatroid::FromBlockSizes(Require<std::vector<int>>(spec, "block_sizes"),
                                              caps);
    }
    return std::make_shared<PartitionMatroid>(Require<std::vector<int>>(spec, "blocks"), caps);
  }
  if (kind == "graphic") {
    return std::make_shared<GraphicMatroid>(
        Require<int>(spec, "vertices"), Require<std::vector<std::pair<int, int>>>(spec, "edges"));
  }
  if (kind == "complete_graph") return GraphicMatroid::Complete(Require<int>(spec, "vertices"));
  if (kind == "random_graph") {
    const int v = Require<int>(spec, "vertices");
    return std::make_shared<GraphicMatroid>(
        v, RandomGraphEdges(v, Require<double>(spec, "p_edge"),
                            Optional<std::uint64_t>(spec, "seed", seed)));
  }
  if (kind == "linear") {
    return std::make_shared<LinearMatroid>(Require<int>(spec, "prime"),
                                           Require<FieldMatrix>(spec, "matrix"));
  }
  if (kind == "random_linear" || kind == "random_explicit") {
    const int prime = Require<int>(spec, "prime");
    const int rank = Require<int>(spec, "rank");
    const int n = Require<int>(spec, "n");
    RequirePositive(rank, "rank");
    if (n < 0) throw ConfigError("n must be non-negative");
    if (!IsPrime(prime) || prime > PrimeField::kMaxPrime) {
      throw ConfigError("prime must be a prime <= " + std::to_string(PrimeField::kMaxPrime));
    }
    auto lin = std::make_shared<LinearMatroid>(
        prime, RandomColumns(prime, rank, n, Optional<std::uint64_t>(spec, "seed", seed)));
    if (kind == "random_linear") return lin;
    if (n > kMaxFlatEnumeration) {
      throw ConfigError("random_explicit needs n <= " +
                        std::to_string(kMaxFlatEnumeration));
    }
    return ExplicitMatroid::Tabulate(*lin);
  }
  if (kind == "explicit") {
    auto m = std::make_shared<ExplicitMatroid>(
        Require<int>(spec, "n"), Require<std::vector<ElementSet>>(spec, "independent"));
    if (check_axioms && m->size() <= kMaxAxiomCheck) {
      const AxiomReport report = CheckAxioms(*m);
      if (!report.ok) throw ConfigError("explicit matroid: " + report.violation);
    }
    return m;
  }
  throw ConfigError("unknown matroid kind \"" + kind + "\"");
}

}  // namespace

std::shared_ptr<const Matroid> MatroidFromJson(const nlohmann::json& spec,
                                               std::uint64_t default_seed, bool check_axioms) {
  try {
    return BuildMatroid(spec, default_seed, check_axioms);
  } catch (const LoopError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> UniformWeights(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w(n);
  std::set<double> used;
  for (int i = 0; i < n; ++i) {
    int redraws = 0;
    do {
      if (redraws++ > kMaxTieRedraws) throw ConfigError("tie rejection exhausted");
      w[i] = rng.UniformOpenClosed();
    } while (!used.insert(w[i]).second);
  }
  return w;
}

std::vector<double> ExponentialWeights(int n, double base, std::uint64_t seed) {
  if (!(base > 1.0)) throw ConfigError("exponential weights need base > 1");
  if (n > 0 && (n - 1) * std::log2(base) > 1000.0) {
    throw ConfigError("exponential weights overflow: (n - 1) * log2(base) > 1000");
  }
  Rng rng(seed);
  const std::vector<int> perm = rng.Permutation(n);
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = std::pow(base, perm[i]);
  return w;
}

std::vector<double> WeightsFromJson(const nlohmann::json& spec, int n,
                                    std::uint64_t default_seed) {
  if (spec.is_array()) {
    std::vector<double> w;
    try {
      w = spec.get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("weights: ") + e.what());
    }
    if (static_cast<int>(w.size()) != n) {
      throw ConfigError("weights list has " + std::to_string(w.size()) + " entries for " +
                        std::to_string(n) + " elements");
    }
    return w;
  }
  const auto generator = Optional<std::string>(spec, "generator", "uniform");
  const auto seed = Optional<std::uint64_t>(spec, "seed", default_seed);
  if (generator == "uniform") return UniformWeights(n, seed);
  if (generator == "exponential") {
    return ExponentialWeights(n, Optional<double>(spec, "base", 2.0), seed);
  }
  throw ConfigError("unknown weight generator \"" + generator + "\"");
}

HardUnion GenerateHardUnion(int k, double eps, int m, std::uint64_t seed, double base) {
  if (k < 1 || m < 1) throw ConfigError("hard_union needs k >= 1 and m >= 1");
  if (!(eps > 0.0)) throw ConfigError("hard_union needs eps > 0");
  const double raw = 2.0 * k / eps;
  const double rounded = std::round(raw);
  if (rounded < 1.0 || std::abs(raw - rounded) > 1e-9 * raw || rounded * m > 1e7) {
    throw ConfigError("hard_union needs 2k/eps to be a positive integer of sane size");
  }
  if ((m - 1) * std::log2(base) > 1000.0) {
    throw ConfigError("hard_union weights overflow: (m - 1) * log2(base) > 1000");
  }
  HardUnion out;
  out.blocks = static_cast<int>(rounded);
  const int n = out.blocks * m;
  out.partition = PartitionMatroid::FromBlockSizes(std::vector<int>(out.blocks, m),
                                                   std::vector<int>(out.blocks, 1));
  std::vector<std::shared_ptr<const Matroid>> members = {out.partition};
  auto single = std::make_shared<UniformMatroid>(n, 1);
  members.insert(members.end(), k, single);
  out.feasibility = std::make_shared<UnionMatroid>(std::move(members));

  Rng rng(seed);
  std::vector<double> w(n);
  std::set<double> used;
  for (int b = 0; b < out.blocks; ++b) {
    const std::vector<int> perm = rng.Permutation(m);
    for (int t = 0; t < m; ++t) {
      double value;
      int redraws = 0;
      do {
        if (redraws++ > kMaxTieRedraws) throw ConfigError("tie rejection exhausted");
        value = std::pow(base, perm[t]) * (1.0 + rng.Uniform01());
      } while (!used.insert(value).second);
      w[b * m + t] = value;
    }
  }
  out.ground = GroundSet(std::move(w));
  return out;
}

Instance BuildInstance(const nlohmann::json& spec, std::optional<int> k_override) {
  if (!spec.is_object()) throw ConfigError("instance spec must be a JSON object");
  Instance inst;
  inst.spec = spec;
  const auto seed = Optional<std::uint64_t>(spec, "seed", 1);
  inst.spec["seed"] = seed;
  const nlohmann::json mspec = Require<nlohmann::json>(spec, "matroid");
  inst.kind = Require<std::string>(mspec, "kind");

  if (inst.kind == "hard_union") {
    const int k = Require<int>(mspec, "k");
    if (k_override && *k_override != k) {
      throw ConfigError("hard_union fixes k in its matroid spec");
    }
    HardUnion hu = GenerateHardUnion(k, Require<double>(mspec, "eps"), Require<int>(mspec, "m"),
                                     seed, Optional<double>(mspec, "base", 8.0));
    inst.ground = std::move(hu.ground);
    inst.k = k;
    inst.feasibility = std::move(hu.feasibility);
    inst.spec["k"] = k;
    return inst;
  }

  inst.base = MatroidFromJson(mspec, seed);
  const int n = inst.base->size();
  if (n < 1) throw ConfigError("instance has an empty ground set");
  try {
    inst.ground = GroundSet(
        WeightsFromJson(spec.contains("weights") ? spec["weights"] : nlohmann::json::object(), n,
                        seed));
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  inst.k = k_override.value_or(Optional<int>(spec, "k", 1));
  RequirePositive(inst.k, "k");
  inst.spec["k"] = inst.k;
  inst.feasibility = std::make_shared<UnionMatroid>(UnionMatroid::Power(inst.base, inst.k));
  return inst;
}

Instance LoadInstance(const std::string& path, std::optional<int> k_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open instance file " + path);
  nlohmann::json spec;
  try {
    in >> spec;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return BuildInstance(spec, k_override);
}

}  // namespace ksec
