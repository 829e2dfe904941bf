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

#include "ksec/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/instance.h"
#include "ksec/lemmas.h"
#include "ksec/matroid_ops.h"
#include "ksec/trials.h"
#include "ksec/verify.h"

namespace ksec {
namespace {

using nlohmann::json;

constexpr char kSeedEnv[] = "KSEC_SEED";

// Flags shared by the subcommands; unset optionals fall back to the spec
// file, then to defaults.
struct Flags {
  std::string spec;
  std::string algos;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::vector<int> k;
  std::string constants;
  bool nsim_mode = false;
  bool trace = false;
  std::string out;
  int jobs = 1;
  std::optional<double> naive_eps;
  // lemmas
  std::vector<double> p;
  std::vector<std::string> r;
  bool exact = false;
  // cover
  std::vector<int> set;
  // verify
  int sampled_pairs = 100;
  int max_counterexamples = 10;
};

json ReadSpec(const std::string& spec) {
  if (spec.empty()) throw ConfigError("--spec is required");
  std::string text = spec;
  if (spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw ConfigError("cannot open spec file " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("spec: " + std::string(e.what()));
  }
}

template <typename T>
std::optional<T> FromSpec(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key)) return std::nullopt;
  try {
    return spec.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("spec field \"") + key + "\": " + e.what());
  }
}

std::uint64_t ParseSeed(const std::string& text, const std::string& where) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": \"" + text + "\" is not a seed");
  }
}

// --seed, then $KSEC_SEED, then the spec's "seed", then 1.
std::uint64_t ResolveSeed(const Flags& f, const json& spec) {
  if (f.seed) return *f.seed;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    return ParseSeed(env, kSeedEnv);
  }
  return FromSpec<std::uint64_t>(spec, "seed").value_or(1);
}

// "proof" -> none; "experimental:C" -> C.
std::optional<double> ParseConstants(const std::string& text) {
  if (text.empty() || text == "proof") return std::nullopt;
  const std::string prefix = "experimental:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      size_t used = 0;
      const std::string value = text.substr(prefix.size());
      const double c = std::stod(value, &used);
      if (used == value.size() && c > 0.0 && std::isfinite(c)) return c;
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("--constants must be \"proof\" or \"experimental:C\" with C > 0, got \"" +
                    text + "\"");
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string Constants(const Flags& f, const json& spec) {
  if (!f.constants.empty()) return f.constants;
  return FromSpec<std::string>(spec, "constants").value_or("proof");
}

int Jobs(const Flags& f) {
  if (f.jobs < 1) throw ConfigError("--jobs must be >= 1");
  return f.jobs;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

std::filesystem::path WithExtension(const std::string& out, const std::string& ext) {
  std::filesystem::path p(out);
  p.replace_extension(ext);
  return p;
}

// ---- verify ---------------------------------------------------------------

int CmdVerify(const Flags& f, std::ostream& out, std::ostream& err) {
  json spec = json::object();
  std::uint64_t seed = 1;
  std::vector<VerifyCase> cases;
  if (!f.spec.empty()) {
    spec = ReadSpec(f.spec);
    seed = ResolveSeed(f, spec);
    const json mspec = spec.contains("matroid") ? spec["matroid"] : spec;
    auto m = MatroidFromJson(mspec, seed, /*check_axioms=*/false);
    cases.push_back({mspec.value("kind", std::string("spec")), std::move(m)});
  } else {
    seed = ResolveSeed(f, spec);
    cases = DefaultVerifyCases(seed);
  }
  VerifyOptions options;
  options.seed = seed;
  options.sampled_pairs = f.sampled_pairs;
  options.max_counterexamples = std::max(1, f.max_counterexamples);
  const json config = {{"command", "verify"},
                       {"seed", seed},
                       {"cases", cases.size()},
                       {"sampled_pairs", options.sampled_pairs}};
  err << "# config: " << config.dump() << "\n";
  const VerifyReport report = RunVerify(cases, options);
  json result = report.ToJson();
  result["config"] = config;
  if (!f.out.empty()) {
    OpenOut(f.out) << result.dump(2) << "\n";
  }
  if (report.ok()) {
    out << "verify: ok (" << report.checks << " checks)\n";
    return kExitOk;
  }
  out << "verify: " << report.counterexamples.size() << " counterexample(s) in " << report.checks
      << " checks\n";
  for (const json& cx : report.counterexamples) out << cx.dump() << "\n";
  return kExitCounterexample;
}

// ---- simulate / bench -----------------------------------------------------

struct SimConfig {
  json spec;
  TrialConfig trial;
  std::vector<std::optional<int>> ks;
  std::string constants;
};

SimConfig ResolveSim(const Flags& f) {
  SimConfig sc;
  sc.spec = ReadSpec(f.spec);
  const std::string algos = !f.algos.empty()
                                ? f.algos
                                : FromSpec<std::string>(sc.spec, "algos").value_or("alg1");
  sc.trial.algorithms.clear();
  for (const std::string& name : SplitList(algos)) {
    sc.trial.algorithms.push_back(ParseAlgorithm(name));
  }
  if (sc.trial.algorithms.empty()) throw ConfigError("--algos is empty");
  sc.trial.trials = f.trials.value_or(FromSpec<int>(sc.spec, "trials").value_or(100));
  sc.trial.seed = ResolveSeed(f, sc.spec);
  sc.constants = Constants(f, sc.spec);
  sc.trial.c_override = ParseConstants(sc.constants);
  sc.trial.nsim_mode = f.nsim_mode || FromSpec<bool>(sc.spec, "nsim_mode").value_or(false);
  sc.trial.naive_eps = f.naive_eps ? f.naive_eps : FromSpec<double>(sc.spec, "naive_eps");
  sc.trial.jobs = Jobs(f);
  sc.trial.trace = f.trace;
  if (!f.k.empty()) {
    sc.ks.assign(f.k.begin(), f.k.end());
  } else if (sc.spec.contains("k") && sc.spec["k"].is_array()) {
    const std::vector<int> ks = FromSpec<std::vector<int>>(sc.spec, "k").value();
    sc.ks.assign(ks.begin(), ks.end());
  } else {
    sc.ks.push_back(std::nullopt);
  }
  return sc;
}

// Replay record for the output files. Excludes --jobs and --out, which do
// not affect results.
json SimConfigJson(const SimConfig& sc, const char* command) {
  json algos = json::array();
  for (Algorithm a : sc.trial.algorithms) algos.push_back(AlgorithmName(a));
  json ks = json::array();
  for (const auto& k : sc.ks) ks.push_back(k ? json(*k) : json(nullptr));
  json spec = sc.spec;
  if (spec.contains("k") && spec["k"].is_array()) spec.erase("k");
  return {{"command", command},
          {"spec", spec},
          {"algos", algos},
          {"trials", sc.trial.trials},
          {"seed", sc.trial.seed},
          {"k", ks},
          {"constants", sc.constants},
          {"nsim_mode", sc.trial.nsim_mode},
          {"naive_eps", sc.trial.naive_eps ? json(*sc.trial.naive_eps) : json(nullptr)},
          {"trace", sc.trial.trace}};
}

Instance BuildCell(const SimConfig& sc, const std::optional<int>& k) {
  json spec = sc.spec;
  if (spec.contains("k") && spec["k"].is_array()) spec.erase("k");
  return BuildInstance(spec, k);
}

void PrintTable(std::ostream& out, const std::vector<Aggregate>& rows) {
  out << std::left << std::setw(18) << "algorithm" << std::right << std::setw(8) << "n"
      << std::setw(8) << "k" << std::setw(8) << "trials" << std::setw(12) << "mean_ratio"
      << std::setw(11) << "se" << std::setw(9) << "min" << std::setw(9) << "max"
      << std::setw(8) << "phi_max" << std::setw(10) << "seconds" << "\n";
  for (const Aggregate& a : rows) {
    out << std::left << std::setw(18) << a.algorithm << std::right << std::setw(8) << a.n
        << std::setw(8) << a.k << std::setw(8) << a.trials << std::fixed << std::setprecision(6)
        << std::setw(12) << a.mean_ratio << std::setw(11) << a.se << std::setprecision(4)
        << std::setw(9) << a.min_ratio << std::setw(9) << a.max_ratio << std::setw(8)
        << a.phi_max << std::setprecision(3) << std::setw(10) << a.wall_seconds << "\n";
    out.unsetf(std::ios::fixed);
  }
}

int CmdSimulate(const Flags& f, std::ostream& out, std::ostream& err) {
  const SimConfig sc = ResolveSim(f);
  const json config = SimConfigJson(sc, "simulate");
  err << "# config: " << config.dump() << " jobs=" << sc.trial.jobs << "\n";

  std::vector<Aggregate> rows;
  json cells = json::array();
  std::optional<std::ofstream> trace_out;
  if (sc.trial.trace) {
    if (f.out.empty()) {
      err << "note: --trace without --out; traces are not written\n";
    } else {
      trace_out = OpenOut(WithExtension(f.out, ".trace.jsonl"));
    }
  }
  for (const auto& k : sc.ks) {
    const Instance inst = BuildCell(sc, k);
    const TrialsResult result = RunTrials(inst, sc.trial);
    json cell = {{"k", inst.k}, {"n", inst.n()}, {"opt_weight", result.opt_weight}};
    json aggs = json::array();
    for (const Aggregate& a : result.aggregates) {
      aggs.push_back(a.ToJson());
      rows.push_back(a);
      if (a.detail.contains("fallback")) {
        err << "k=" << inst.k << " " << a.algorithm << ": "
            << a.detail["fallback"].get<std::string>() << "\n";
      }
    }
    cell["aggregates"] = aggs;
    cells.push_back(cell);
    if (trace_out) {
      for (const auto& per_algo : result.records) {
        for (size_t t = 0; t < per_algo.size(); ++t) {
          json rec = per_algo[t].ToJson();
          rec["k"] = inst.k;
          rec["trial"] = t;
          *trace_out << rec.dump() << "\n";
        }
      }
    }
  }

  if (f.out.empty()) {
    WriteAggregatesCsv(out, rows, config);
    return kExitOk;
  }
  {
    std::ofstream csv = OpenOut(f.out);
    WriteAggregatesCsv(csv, rows, config);
  }
  OpenOut(WithExtension(f.out, ".json")) << json{{"config", config}, {"cells", cells}}.dump(2)
                                         << "\n";
  PrintTable(out, rows);
  return kExitOk;
}

// Timings per algorithm; wall-clock output is not reproducible by design.
int CmdBench(const Flags& f, std::ostream& out, std::ostream& err) {
  SimConfig sc = ResolveSim(f);
  if (!f.trials && !sc.spec.contains("trials")) sc.trial.trials = 20;
  const json config = SimConfigJson(sc, "bench");
  err << "# config: " << config.dump() << " jobs=" << sc.trial.jobs << "\n";
  std::vector<Aggregate> rows;
  for (const auto& k : sc.ks) {
    const Instance inst = BuildCell(sc, k);
    for (Aggregate& a : RunTrials(inst, sc.trial).aggregates) rows.push_back(std::move(a));
  }
  out << "algorithm,n,k,trials,seconds_per_trial\n";
  for (const Aggregate& a : rows) {
    out << a.algorithm << ',' << a.n << ',' << a.k << ',' << a.trials << ','
        << FormatDouble(a.wall_seconds / a.trials) << '\n';
  }
  return kExitOk;
}

// ---- lemmas ---------------------------------------------------------------

int CmdLemmas(const Flags& f, std::ostream& out, std::ostream& err) {
  const json spec = ReadSpec(f.spec);
  const json lspec = spec.value("lemmas", json::object());
  std::optional<int> k;
  if (!f.k.empty()) {
    if (f.k.size() != 1) throw ConfigError("lemmas takes a single --k");
    k = f.k[0];
  }
  json ispec = spec;
  ispec.erase("lemmas");
  const Instance inst = BuildInstance(ispec, k);
  if (!inst.base) throw ConfigError("lemmas need a single base matroid, not " + inst.kind);

  LemmaParams base;
  base.k = inst.k;
  base.seed = ResolveSeed(f, spec);
  base.trials = f.trials.value_or(FromSpec<int>(lspec, "trials").value_or(1000));
  const std::string constants = Constants(f, spec);
  base.c = ParseConstants(constants).value_or(10.0);
  base.exact = f.exact || FromSpec<bool>(lspec, "exact").value_or(false);
  base.jobs = Jobs(f);

  std::vector<double> ps = f.p;
  if (ps.empty()) ps = FromSpec<std::vector<double>>(lspec, "p").value_or(std::vector<double>{0.5});
  std::vector<std::string> rs = f.r;
  if (rs.empty() && lspec.contains("r")) {
    for (const json& r : lspec["r"]) rs.push_back(r.is_string() ? r.get<std::string>() : r.dump());
  }
  if (rs.empty()) rs = {"auto"};

  const json config = {{"command", "lemmas"},   {"spec", ispec},         {"k", base.k},
                       {"seed", base.seed},     {"trials", base.trials}, {"constants", constants},
                       {"exact", base.exact},   {"p", ps},               {"r", rs}};
  err << "# config: " << config.dump() << " jobs=" << base.jobs << "\n";

  const double log_n = std::log2(static_cast<double>(inst.n()));
  std::vector<LemmaEstimate> rows;
  for (double p : ps) {
    for (const std::string& r_text : rs) {
      LemmaParams params = base;
      params.p = p;
      LemmaEstimate row;
      row.p = p;
      try {
        if (r_text == "auto") {
          // Smallest integer r >= (1 + eps(pk)) pk.
          const double pk = p * base.k;
          params.r = static_cast<int>(std::ceil((1.0 + base.c * std::sqrt(log_n / pk)) * pk));
        } else {
          params.r = static_cast<int>(ParseSeed(r_text, "--r"));
        }
        row.r = params.r;
        row = EstimateLemmas(inst.ground, inst.base, params);
      } catch (const PreconditionError& e) {
        row.mode = "error";
        row.status = std::string("error: ") + e.what();
        err << "p=" << FormatDouble(p) << " r=" << r_text << ": " << e.what() << "\n";
      } catch (const ConfigError& e) {
        row.mode = "error";
        row.status = std::string("error: ") + e.what();
        err << "p=" << FormatDouble(p) << " r=" << r_text << ": " << e.what() << "\n";
      }
      rows.push_back(row);
    }
  }
  if (f.out.empty()) {
    WriteLemmaCsv(out, rows, config);
    return kExitOk;
  }
  {
    std::ofstream csv = OpenOut(f.out);
    WriteLemmaCsv(csv, rows, config);
  }
  json mirror = {{"config", config}, {"rows", json::array()}};
  for (const LemmaEstimate& e : rows) mirror["rows"].push_back(e.ToJson());
  OpenOut(WithExtension(f.out, ".json")) << mirror.dump(2) << "\n";
  for (const LemmaEstimate& e : rows) {
    out << "p=" << FormatDouble(e.p) << " r=" << e.r << " " << e.mode << " tail="
        << FormatDouble(e.tail_freq) << " wT=" << FormatDouble(e.mean_wT)
        << " wS=" << FormatDouble(e.mean_wS) << " " << e.status << "\n";
  }
  return kExitOk;
}

// ---- cover ----------------------------------------------------------------

int CmdCover(const Flags& f, std::ostream& out, std::ostream& err) {
  const json spec = ReadSpec(f.spec);
  const std::uint64_t seed = FromSpec<std::uint64_t>(spec, "seed").value_or(1);
  const json mspec = spec.contains("matroid") ? spec["matroid"] : spec;
  const auto m = MatroidFromJson(mspec, seed);
  ElementSet s(f.set.begin(), f.set.end());
  if (s.empty()) {
    s.resize(m->size());
    for (int i = 0; i < m->size(); ++i) s[i] = i;
  }
  for (Element e : s) {
    if (e < 0 || e >= m->size()) {
      throw ConfigError("--set element " + std::to_string(e) + " outside [0, " +
                        std::to_string(m->size()) + ")");
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ConfigError("--set has repeated elements");
  }
  err << "# config: " << json{{"command", "cover"}, {"matroid", mspec}, {"set", s}}.dump()
      << "\n";

  const CoveringResult cover = CoveringNumber(m, s);
  json report = {{"phi", cover.value}, {"set", s}, {"certificate", cover.certificate.ToJson()}};
  out << "phi = " << cover.value << "\n";
  for (int j = 0; j < cover.certificate.num_parts(); ++j) {
    ElementSet part = cover.certificate.part(j);
    std::sort(part.begin(), part.end());
    out << "  part " << j << ": " << json(part).dump() << "\n";
  }
  if (!s.empty() && static_cast<int>(s.size()) <= kMaxFlatEnumeration) {
    const WitnessedValue nw = NashWilliamsValue(*m, s);
    report["nash_williams"] = {{"value", nw.value}, {"witness", nw.witness}};
    out << "Nash-Williams value " << nw.value << " on " << json(nw.witness).dump() << "\n";
  } else if (!s.empty()) {
    out << "Nash-Williams witness skipped: |S| > " << kMaxFlatEnumeration << "\n";
  }
  if (!s.empty() && m->size() <= kMaxFlatEnumeration) {
    const WitnessedValue flats = FlatsCoverBound(*m, s);
    report["flats_bound"] = {{"value", flats.value}, {"flat", flats.witness}};
    out << "flats bound " << flats.value << " on flat " << json(flats.witness).dump() << "\n";
  }
  if (!f.out.empty()) OpenOut(f.out) << report.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid secretary simulator under k-fold matroid-union constraints", "ksec"};
  app.require_subcommand(1);
  Flags f;
  std::optional<std::string> seed_text;

  auto add_spec = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--spec", f.spec, "Instance spec: JSON file or inline JSON");
    if (required) opt->required();
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_text, "Master seed (default: $KSEC_SEED, spec, 1)");
    sub->add_option("--trials", f.trials, "Trials per cell")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", f.jobs, "Worker threads; results do not depend on it");
    sub->add_option("--out", f.out, "Output file (CSV, with a .json mirror)");
    sub->add_option("--constants", f.constants, "proof | experimental:C");
  };

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive oracle cross-checks");
  add_spec(verify, false);
  verify->add_option("--seed", seed_text, "Seed for generated cases");
  verify->add_option("--sampled-pairs", f.sampled_pairs, "Random (M, S) pairs at 9 <= n <= 12");
  verify->add_option("--max-counterexamples", f.max_counterexamples, "Stop after this many");
  verify->add_option("--out", f.out, "JSON report");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo trials over a k grid");
  CLI::App* bench = app.add_subcommand("bench", "Per-trial timings");
  for (CLI::App* sub : {simulate, bench}) {
    add_spec(sub, true);
    add_run(sub);
    sub->add_option("--algos", f.algos, "Comma list: alg1,dynkin,naive,greedy,acceptall");
    sub->add_option("--k", f.k, "Union fold; repeat or comma-separate for a grid")
        ->delimiter(',');
    sub->add_flag("--nsim-mode", f.nsim_mode, "Use the parallel class count inside eps");
    sub->add_option("--naive-eps", f.naive_eps, "Observation fraction of the naive threshold");
  }
  simulate->add_flag("--trace", f.trace, "Write per-trial records to <out>.trace.jsonl");

  CLI::App* lemmas = app.add_subcommand("lemmas", "Tail and symmetry estimates over a (p, r) grid");
  add_spec(lemmas, true);
  add_run(lemmas);
  lemmas->add_option("--k", f.k, "Union fold");
  lemmas->add_option("--p", f.p, "Subsample rates")->delimiter(',');
  lemmas->add_option("--r", f.r, "Folds, or \"auto\" for ceil((1 + eps(pk)) pk)")->delimiter(',');
  lemmas->add_flag("--exact", f.exact, "Enumerate all 3^n outcomes (n <= 14)");

  CLI::App* cover = app.add_subcommand("cover", "Covering number with witnesses");
  add_spec(cover, true);
  cover->add_option("--set", f.set, "Elements of S (default: all)")->delimiter(',');
  cover->add_option("--out", f.out, "JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (seed_text) f.seed = ParseSeed(*seed_text, "--seed");
    if (verify->parsed()) return CmdVerify(f, out, err);
    if (simulate->parsed()) return CmdSimulate(f, out, err);
    if (bench->parsed()) return CmdBench(f, out, err);
    if (lemmas->parsed()) return CmdLemmas(f, out, err);
    if (cover->parsed()) return CmdCover(f, out, err);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace ksec
