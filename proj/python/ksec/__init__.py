# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the ksec matroid secretary simulator."""

import json as _json

from . import _ksec
from ._ksec import (
    ConfigError,
    EnumerationLimitError,
    Error,
    InvariantViolation,
    LoopError,
    PreconditionError,
    UnionMatroid,
    phase_bin_probabilities,
)

__all__ = [
    "ConfigError",
    "EnumerationLimitError",
    "Error",
    "InvariantViolation",
    "LoopError",
    "Matroid",
    "PreconditionError",
    "UnionMatroid",
    "covering_number",
    "estimate_lemmas",
    "phase_bin_probabilities",
    "plan_phases",
    "run_cli",
    "run_trials",
    "union_rank",
    "verify",
]


def _text(spec):
    return spec if isinstance(spec, str) else _json.dumps(spec)


def Matroid(spec, seed=1):
    """Builds a matroid from a spec dict such as {"kind": "uniform", "n": 5, "cap": 2}."""
    return _ksec.Matroid(_text(spec), seed)


def covering_number(spec, subset=None, seed=1):
    """Returns (phi, parts): the covering number of subset and a partition into phi independent sets."""
    return Matroid(spec, seed).covering_number(subset)


def union_rank(spec, k, subset=None, seed=1):
    """Rank of subset (default: everything) in the union of k copies."""
    m = Matroid(spec, seed)
    return m.power(k).rank(list(range(m.size)) if subset is None else subset)


def plan_phases(n, k, c=None, nsim=None):
    """Phase plan as a dict, or {"fallback": reason}. c selects experimental constants."""
    return _json.loads(_ksec.plan_phases(n, k, c, nsim))


def run_trials(spec, k=None, algos=("alg1",), trials=100, seed=1, c=None, jobs=1):
    """Runs paired trials over one instance spec; returns per-algorithm aggregates."""
    return _json.loads(_ksec.run_trials(_text(spec), k, list(algos), trials, seed, c, jobs))


def estimate_lemmas(spec, k, p, r, trials=1000, seed=1, c=10.0, exact=False, jobs=1):
    """Tail and symmetry estimates for one (p, r) cell."""
    return _json.loads(
        _ksec.estimate_lemmas(_text(spec), k, p, r, trials, seed, c, exact, jobs))


def verify(seed=1, sampled_pairs=100):
    """Runs the built-in oracle cross-check suite; returns the report dict."""
    return _json.loads(_ksec.verify(seed, sampled_pairs))


def run_cli(*args):
    """Runs the ksec command line in-process; returns (exit_code, stdout, stderr)."""
    return _ksec.run_cli([str(a) for a in args])
