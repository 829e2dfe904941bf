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

#include "ksec/lemmas.h"

#include <cmath>
#include <string>
#include <tuple>

#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/matroid_union.h"
#include "ksec/parallel.h"
#include "ksec/rng.h"
#include "ksec/secretary.h"
#include "ksec/stats.h"
#include "ksec/trials.h"

namespace ksec {
namespace {

enum Side : char { kOut = 0, kS = 1, kT = 2 };

struct Outcome {
  ElementSet t_star, s_star, s_plus;
};

// One sweep in decreasing weight order: S* is the greedy basis of S in M^r
// and i in T improves S iff it fits beside the heavier part of S*.
void Classify(const GroundSet& ground, const UnionMatroid& ur, const std::vector<char>& in_opt,
              const std::vector<char>& side, Outcome& out) {
  out.t_star.clear();
  out.s_star.clear();
  out.s_plus.clear();
  PartitionCertificate cert = ur.NewCertificate();
  for (Element i : ground.order()) {
    if (side[i] == kS) {
      if (ur.Insert(cert, i)) out.s_star.push_back(i);
      if (in_opt[i]) out.s_plus.push_back(i);
    } else if (side[i] == kT) {
      if (ur.CanInsert(cert, i)) out.t_star.push_back(i);
    }
  }
}

}  // namespace

nlohmann::json LemmaEstimate::ToJson() const {
  return {{"p", p},
          {"r", r},
          {"trials", trials},
          {"mode", mode},
          {"tail_freq", tail_freq},
          {"ci_lo", ci_lo},
          {"ci_hi", ci_hi},
          {"tail_freq_splus", tail_freq_splus},
          {"ci_lo_splus", ci_lo_splus},
          {"ci_hi_splus", ci_hi_splus},
          {"mean_wT", mean_wT},
          {"mean_wS", mean_wS},
          {"mean_wSplus", mean_wSplus},
          {"se_wT", se_wT},
          {"se_wS", se_wS},
          {"se_wSplus", se_wSplus},
          {"threshold_t", threshold_t},
          {"threshold_splus", threshold_splus},
          {"exact_equal", exact_equal},
          {"status", status}};
}

LemmaEstimate EstimateLemmas(const GroundSet& ground, const std::shared_ptr<const Matroid>& m,
                             const LemmaParams& params) {
  const int n = ground.size();
  if (m->size() != n) throw PreconditionError("matroid and ground set sizes differ");
  if (n < 2) throw PreconditionError("lemma estimates need n >= 2");
  if (params.k < 1 || params.r < 1) throw PreconditionError("k and r must be positive");
  if (!params.exact && params.trials < 1) throw PreconditionError("trials must be >= 1");
  const double log_n = std::log2(static_cast<double>(n));
  auto eps = [&](double x) { return params.c * std::sqrt(log_n / x); };
  const double p = params.p;
  const double pk = p * params.k;
  if (!(p >= eps(params.k) && p <= 0.5)) {
    throw PreconditionError("p = " + FormatDouble(p) + " outside [eps(k), 1/2] = [" +
                            FormatDouble(eps(params.k)) + ", 0.5]");
  }
  const double r_min = (1.0 + eps(pk)) * pk;
  if (params.r < r_min) {
    throw PreconditionError("r = " + std::to_string(params.r) + " below (1 + eps(pk)) pk = " +
                            FormatDouble(r_min));
  }
  if (params.exact && n > kMaxExactLemmaSize) {
    throw PreconditionError("exact lemma mode needs n <= " + std::to_string(kMaxExactLemmaSize));
  }

  LemmaEstimate est;
  est.p = p;
  est.r = params.r;
  est.threshold_t = (1.0 + eps(params.r)) * params.r;
  est.threshold_splus = r_min;

  const UnionMatroid ur = UnionMatroid::Power(m, params.r);
  const OptResult opt = OfflineOpt(ground, UnionMatroid::Power(m, params.k));
  std::vector<char> in_opt(n, 0);
  for (Element e : opt.basis) in_opt[e] = 1;

  if (params.exact) {
    est.mode = "exact";
    // Outcomes with |X| = j all have probability (1 - 2p)^(n - j) p^j, so
    // integer counts per j determine every expectation.
    std::vector<std::vector<std::int64_t>> cnt_t(n + 1, std::vector<std::int64_t>(n, 0));
    auto cnt_s = cnt_t, cnt_plus = cnt_t;
    std::vector<std::int64_t> tail_t(n + 1, 0), tail_plus(n + 1, 0);
    std::vector<char> side(n, kOut);
    Outcome out;
    std::int64_t total = 0;
    while (true) {
      int size = 0;
      for (char c : side) size += c != kOut;
      Classify(ground, ur, in_opt, side, out);
      for (Element e : out.t_star) ++cnt_t[size][e];
      for (Element e : out.s_star) ++cnt_s[size][e];
      for (Element e : out.s_plus) ++cnt_plus[size][e];
      if (CoveringNumber(m, out.t_star).value >= est.threshold_t) ++tail_t[size];
      if (CoveringNumber(m, out.s_plus).value >= est.threshold_splus) ++tail_plus[size];
      ++total;
      // Base-3 increment over the sides.
      int pos = 0;
      while (pos < n && side[pos] == kT) side[pos++] = kOut;
      if (pos == n) break;
      ++side[pos];
    }
    est.trials = total;
    est.exact_equal = cnt_t == cnt_s;
    double wt = 0, ws = 0, wp = 0, pt = 0, pp = 0;
    for (int j = 0; j <= n; ++j) {
      const double prob = std::pow(1.0 - 2.0 * p, n - j) * std::pow(p, j);
      for (Element e = 0; e < n; ++e) {
        wt += prob * cnt_t[j][e] * ground.weight(e);
        ws += prob * cnt_s[j][e] * ground.weight(e);
        wp += prob * cnt_plus[j][e] * ground.weight(e);
      }
      pt += prob * tail_t[j];
      pp += prob * tail_plus[j];
    }
    est.mean_wT = wt;
    est.mean_wS = ws;
    est.mean_wSplus = wp;
    est.tail_freq = est.ci_lo = est.ci_hi = pt;
    est.tail_freq_splus = est.ci_lo_splus = est.ci_hi_splus = pp;
    est.status = est.exact_equal ? "exact-equal" : "exact-mismatch";
    return est;
  }

  est.mode = "montecarlo";
  est.trials = params.trials;
  std::vector<double> wt(params.trials), ws(params.trials), wp(params.trials);
  std::vector<char> hit_t(params.trials), hit_plus(params.trials);
  ParallelFor(params.trials, params.jobs, [&](int t) {
    Rng rng = Rng::ForStream(params.seed, t, 0);
    std::vector<char> side(n, kOut);
    for (Element i = 0; i < n; ++i) {
      const bool x = rng.Bernoulli(2.0 * p);
      const bool y = rng.Bernoulli(0.5);
      if (x) side[i] = y ? kS : kT;
    }
    Outcome out;
    Classify(ground, ur, in_opt, side, out);
    wt[t] = ground.Weight(out.t_star);
    ws[t] = ground.Weight(out.s_star);
    wp[t] = ground.Weight(out.s_plus);
    hit_t[t] = CoveringNumber(m, out.t_star).value >= est.threshold_t;
    hit_plus[t] = CoveringNumber(m, out.s_plus).value >= est.threshold_splus;
  });
  const MeanSe mt = MeanAndSe(wt), ms = MeanAndSe(ws), mp = MeanAndSe(wp);
  est.mean_wT = mt.mean;
  est.se_wT = mt.se;
  est.mean_wS = ms.mean;
  est.se_wS = ms.se;
  est.mean_wSplus = mp.mean;
  est.se_wSplus = mp.se;
  std::int64_t tails = 0, tails_plus = 0;
  for (int t = 0; t < params.trials; ++t) {
    tails += hit_t[t];
    tails_plus += hit_plus[t];
  }
  est.tail_freq = static_cast<double>(tails) / params.trials;
  est.tail_freq_splus = static_cast<double>(tails_plus) / params.trials;
  std::tie(est.ci_lo, est.ci_hi) = ClopperPearson(tails, params.trials);
  std::tie(est.ci_lo_splus, est.ci_hi_splus) = ClopperPearson(tails_plus, params.trials);
  return est;
}

void WriteLemmaCsv(std::ostream& out, const std::vector<LemmaEstimate>& rows,
                   const nlohmann::json& config) {
  out << "# config: " << config.dump() << "\n";
  out << "p,r,trials,mode,tail_freq,ci_lo,ci_hi,tail_freq_splus,ci_lo_splus,ci_hi_splus,"
         "mean_wT,mean_wS,mean_wSplus,se_wT,se_wS,se_wSplus,status\n";
  for (const LemmaEstimate& e : rows) {
    if (e.mode == "error") {
      std::string quoted = "\"";
      for (char c : e.status) {
        if (c == '"') quoted += '"';
        quoted += c == '\n' ? ' ' : c;
      }
      out << FormatDouble(e.p) << ',' << e.r << ",0,error" << std::string(12, ',') << ','
          << quoted << "\"\n";
      continue;
    }
    out << FormatDouble(e.p) << ',' << e.r << ',' << e.trials << ',' << e.mode << ','
        << FormatDouble(e.tail_freq) << ',' << FormatDouble(e.ci_lo) << ','
        << FormatDouble(e.ci_hi) << ',' << FormatDouble(e.tail_freq_splus) << ','
        << FormatDouble(e.ci_lo_splus) << ',' << FormatDouble(e.ci_hi_splus) << ','
        << FormatDouble(e.mean_wT) << ',' << FormatDouble(e.mean_wS) << ','
        << FormatDouble(e.mean_wSplus) << ',' << FormatDouble(e.se_wT) << ','
        << FormatDouble(e.se_wS) << ',' << FormatDouble(e.se_wSplus) << ',' << e.status << '\n';
  }
}

}  // namespace ksec
