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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ksec/cli.h"
#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/instance.h"
#include "ksec/lemmas.h"
#include "ksec/matroid_union.h"
#include "ksec/phase_plan.h"
#include "ksec/trials.h"
#include "ksec/verify.h"

namespace py = pybind11;
using nlohmann::json;

namespace ksec {
namespace {

// Structured values cross the boundary as JSON text; the Python package
// decodes them.
struct PyMatroid {
  std::shared_ptr<const Matroid> m;
};

struct PyUnion {
  std::shared_ptr<const UnionMatroid> u;
};

std::vector<std::vector<int>> Parts(const PartitionCertificate& cert) {
  std::vector<std::vector<int>> parts;
  for (int j = 0; j < cert.num_parts(); ++j) {
    ElementSet part = cert.part(j);
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

ElementSet AllOf(const Matroid& m) {
  ElementSet s(m.size());
  for (int i = 0; i < m.size(); ++i) s[i] = i;
  return s;
}

std::string PlanPhasesJson(int n, int k, std::optional<double> c, std::optional<int> nsim) {
  PlanOptions options;
  options.c_override = c;
  options.nsim = nsim;
  const auto plan = PlanPhases(n, k, options);
  if (const auto* fb = std::get_if<PlanFallback>(&plan)) {
    return json{{"fallback", fb->reason}}.dump();
  }
  return std::get<PhasePlan>(plan).ToJson().dump();
}

std::string RunTrialsJson(const std::string& spec, std::optional<int> k,
                          const std::vector<std::string>& algos, int trials, std::uint64_t seed,
                          std::optional<double> c, int jobs) {
  const Instance inst = BuildInstance(json::parse(spec), k);
  TrialConfig config;
  config.algorithms.clear();
  for (const std::string& a : algos) config.algorithms.push_back(ParseAlgorithm(a));
  config.trials = trials;
  config.seed = seed;
  config.c_override = c;
  config.jobs = jobs;
  const TrialsResult result = RunTrials(inst, config);
  json aggs = json::array();
  for (const Aggregate& a : result.aggregates) aggs.push_back(a.ToJson());
  return json{{"n", inst.n()}, {"k", inst.k}, {"opt_weight", result.opt_weight},
              {"aggregates", aggs}}
      .dump();
}

std::string EstimateLemmasJson(const std::string& spec, int k, double p, int r, int trials,
                               std::uint64_t seed, double c, bool exact, int jobs) {
  const Instance inst = BuildInstance(json::parse(spec), k);
  if (!inst.base) throw ConfigError("lemmas need a single base matroid, not " + inst.kind);
  LemmaParams params;
  params.k = inst.k;
  params.p = p;
  params.r = r;
  params.trials = trials;
  params.seed = seed;
  params.c = c;
  params.exact = exact;
  params.jobs = jobs;
  return EstimateLemmas(inst.ground, inst.base, params).ToJson().dump();
}

std::string VerifyJson(std::uint64_t seed, int sampled_pairs) {
  VerifyOptions options;
  options.seed = seed;
  options.sampled_pairs = sampled_pairs;
  return RunVerify(DefaultVerifyCases(seed), options).ToJson().dump();
}

std::tuple<int, std::string, std::string> RunCliCaptured(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = RunCli(args, out, err);
  }
  return {code, out.str(), err.str()};
}

}  // namespace
}  // namespace ksec

PYBIND11_MODULE(_ksec, m) {
  using namespace ksec;
  m.doc() = "Matroid secretary simulator core";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<LoopError>(m, "LoopError", precondition.ptr());
  py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError", precondition.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyMatroid>(m, "Matroid")
      .def(py::init([](const std::string& spec, std::uint64_t seed) {
             return PyMatroid{MatroidFromJson(json::parse(spec), seed)};
           }),
           py::arg("spec"), py::arg("seed") = 1)
      .def_property_readonly("size", [](const PyMatroid& self) { return self.m->size(); })
      .def_property_readonly("kind",
                             [](const PyMatroid& self) { return std::string(self.m->kind()); })
      .def("rank", [](const PyMatroid& self, const ElementSet& s) { return self.m->Rank(s); })
      .def("full_rank", [](const PyMatroid& self) { return self.m->FullRank(); })
      .def("is_independent",
           [](const PyMatroid& self, const ElementSet& s) { return self.m->IsIndependent(s); })
      .def("to_json", [](const PyMatroid& self) { return self.m->ToJson().dump(); })
      .def(
          "covering_number",
          [](const PyMatroid& self, std::optional<ElementSet> s) {
            const ElementSet set = s ? *s : AllOf(*self.m);
            const CoveringResult cover = [&] {
              py::gil_scoped_release release;
              return CoveringNumber(self.m, set);
            }();
            return std::make_pair(cover.value, Parts(cover.certificate));
          },
          py::arg("subset") = py::none())
      .def(
          "nash_williams",
          [](const PyMatroid& self, std::optional<ElementSet> s) {
            const WitnessedValue v = NashWilliamsValue(*self.m, s ? *s : AllOf(*self.m));
            return std::make_pair(v.value, v.witness);
          },
          py::arg("subset") = py::none())
      .def("power", [](const PyMatroid& self, int k) {
        return PyUnion{std::make_shared<const UnionMatroid>(UnionMatroid::Power(self.m, k))};
      });

  py::class_<PyUnion>(m, "UnionMatroid")
      .def_property_readonly("size", [](const PyUnion& self) { return self.u->size(); })
      .def_property_readonly("fold", [](const PyUnion& self) { return self.u->fold(); })
      .def("rank", [](const PyUnion& self, const ElementSet& s) { return self.u->Rank(s); })
      .def("is_independent",
           [](const PyUnion& self, const ElementSet& s) {
             return self.u->IsIndependent(s).independent;
           })
      .def("max_independent",
           [](const PyUnion& self, const ElementSet& s) {
             return Parts(self.u->MaxIndependent(s));
           })
      .def("max_weight_basis",
           [](const PyUnion& self, const std::vector<double>& weights, const ElementSet& s) {
             return self.u->MaxWeightBasis(GroundSet(weights), s);
           });

  m.def("plan_phases", &PlanPhasesJson, py::arg("n"), py::arg("k"), py::arg("c") = py::none(),
        py::arg("nsim") = py::none());
  m.def("phase_bin_probabilities", &PhaseBinProbabilities, py::arg("num_phases"));
  m.def("run_trials", &RunTrialsJson, py::arg("spec"), py::arg("k"), py::arg("algos"),
        py::arg("trials"), py::arg("seed"), py::arg("c"), py::arg("jobs"),
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_lemmas", &EstimateLemmasJson, py::arg("spec"), py::arg("k"), py::arg("p"),
        py::arg("r"), py::arg("trials"), py::arg("seed"), py::arg("c"), py::arg("exact"),
        py::arg("jobs"), py::call_guard<py::gil_scoped_release>());
  m.def("verify", &VerifyJson, py::arg("seed"), py::arg("sampled_pairs"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_cli", &RunCliCaptured, py::arg("args"));
}
