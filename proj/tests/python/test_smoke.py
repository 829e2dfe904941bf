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

import itertools

import pytest

import ksec

K4 = {"kind": "complete_graph", "vertices": 4}
K5 = {"kind": "complete_graph", "vertices": 5}


def test_matroid_queries():
    m = ksec.Matroid({"kind": "uniform", "n": 5, "cap": 2})
    assert m.size == 5
    assert m.kind == "uniform"
    assert m.rank([0, 1, 2]) == 2
    assert m.is_independent([3, 4])
    assert not m.is_independent([0, 3, 4])
    assert m.full_rank() == 2


@pytest.mark.parametrize("spec,phi", [(K4, 2), (K5, 3), ({"kind": "complete_graph", "vertices": 6}, 3)])
def test_covering_number_of_complete_graphs(spec, phi):
    value, parts = ksec.covering_number(spec)
    assert value == phi
    m = ksec.Matroid(spec)
    assert sorted(itertools.chain(*parts)) == list(range(m.size))
    assert all(m.is_independent(p) for p in parts)
    assert m.nash_williams()[0] == phi


def test_union_rank_against_brute_force():
    spec = {"kind": "uniform", "n": 6, "cap": 2}
    m = ksec.Matroid(spec)
    u = m.power(2)
    assert u.fold == 2
    assert ksec.union_rank(spec, 2) == 4
    # K4 in two copies: a spanning tree has 3 edges, two trees cover all 6.
    assert ksec.union_rank(K4, 2) == 6
    assert ksec.union_rank(K5, 2) == 8
    for size in range(0, 7):
        for s in itertools.combinations(range(6), size):
            assert u.is_independent(list(s)) == (len(s) <= 4)


def test_max_weight_basis():
    u = ksec.Matroid({"kind": "uniform", "n": 4, "cap": 1}).power(2)
    assert sorted(u.max_weight_basis([1.0, 5.0, 3.0, 2.0], [0, 1, 2, 3])) == [1, 2]


def test_plan_phases():
    plan = ksec.plan_phases(64, 32, c=0.1)
    assert plan["L"] == 3
    assert plan["capacities"] == [4, 8, 16]
    assert "fallback" in ksec.plan_phases(100, 4)
    probs = ksec.phase_bin_probabilities(5)
    assert len(probs) == 6
    assert sum(probs) == 1.0


def test_run_trials_is_deterministic():
    spec = {"matroid": {"kind": "uniform", "n": 2000, "cap": 1}}
    a = ksec.run_trials(spec, k=64, algos=["alg1", "dynkin"], trials=8, seed=7, c=0.25, jobs=1)
    b = ksec.run_trials(spec, k=64, algos=["alg1", "dynkin"], trials=8, seed=7, c=0.25, jobs=3)
    assert a == b
    assert [row["algorithm"] for row in a["aggregates"]] == ["alg1", "dynkin"]
    for row in a["aggregates"]:
        assert 0.0 <= row["mean_ratio"] <= 1.0


def test_estimate_lemmas_exact():
    row = ksec.estimate_lemmas({"matroid": K4}, k=4, p=0.25, r=2, c=0.1, exact=True)
    assert row["mode"] == "exact"
    assert row["exact_equal"]
    assert row["trials"] == 3 ** 6


def test_verify_and_cli():
    report = ksec.verify(seed=3, sampled_pairs=5)
    assert report["ok"]
    assert report["checks"] > 0
    code, out, _ = ksec.run_cli("cover", "--spec", '{"kind": "complete_graph", "vertices": 5}')
    assert code == 0
    assert out.startswith("phi = 3")
    code, _, err = ksec.run_cli("simulate", "--spec", "/nonexistent.json")
    assert code == 2
    assert "config error" in err


def test_errors_map_to_exceptions():
    with pytest.raises(ksec.ConfigError):
        ksec.Matroid({"kind": "nope"})
    with pytest.raises(ksec.LoopError):
        ksec.Matroid({"kind": "uniform", "n": 3, "cap": 0})
    with pytest.raises(ksec.PreconditionError):
        ksec.estimate_lemmas({"matroid": K4}, k=4, p=0.9, r=4)
    with pytest.raises(ValueError):
        ksec.Matroid("{not json")
