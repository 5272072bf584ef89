# Copyright 2026 The qifl Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math
from fractions import Fraction as F
from pathlib import Path

import pytest

import qifl

DATA = Path(__file__).resolve().parents[2] / "data"


def eye():
    return qifl.Channel(
        ["b", "g", "bg"],
        ["b", "g"],
        [[F(3, 4), F(1, 4)], [F(1, 4), F(3, 4)], [F(19, 20), F(1, 20)]],
    )


def eye_prior():
    return qifl.Prior(["b", "g", "bg"], [F(1, 4), F(1, 2), F(1, 4)])


def survey(diag, off):
    labels = ["y", "m", "n"]
    rows = [[diag if i == j else off for j in range(3)] for i in range(3)]
    return qifl.Channel(labels, labels, rows)


def test_lift_and_witness():
    value, witness = qifl.lift(eye_prior(), eye())
    assert value == F(19, 11)
    assert witness == {"obs": "b", "secret": "bg"}
    for formula in ("posterior-over-prior", "joint-over-product"):
        assert qifl.lift(eye_prior(), eye(), formula)[0] == F(19, 11)


def test_capacities():
    assert qifl.lift_capacity(eye()) == 15
    assert qifl.bayes_capacity(eye()) == F(17, 10)
    assert qifl.lift_capacity(qifl.identity_channel(["a", "b"])) == math.inf


def test_hyper_of_running_example():
    cols = qifl.hyper(eye_prior(), eye())
    assert [(o, m) for o, m, _ in cols] == [("b", F(11, 20)), ("g", F(9, 20))]
    assert cols[0][2].masses == [F(15, 44), F(5, 22), F(19, 44)]


def test_survey_anomaly():
    r = survey(F(3, 5), F(1, 5))
    u = qifl.Prior.uniform(r.secrets)
    assert qifl.mult_leakage(qifl.gid(r.secrets), u, r) == F(9, 5)
    assert qifl.lift_capacity(r) == 3


def test_verify():
    g = qifl.parse_channel_csv((DATA / "G.csv").read_text())
    assert qifl.verify_ldp(g, 4)
    assert not qifl.verify_ldp(g, F(39, 10))
    assert qifl.verify_ldp(g, math.inf)
    assert qifl.verify_lip(eye_prior(), eye(), 9)
    assert not qifl.verify_lip(eye_prior(), eye(), 8)


def test_reciprocal_gain_realizes_lift():
    pi = eye_prior()
    assert qifl.max_case_leakage(qifl.reciprocal_gain(pi), pi, eye()) == F(19, 11)


def test_errors_carry_kind():
    with pytest.raises(qifl.QiflError) as info:
        qifl.Channel(["a"], ["u", "v"], [[F(1, 2), F(1, 3)]])
    assert info.value.kind == "NonStochasticRow"
    with pytest.raises(qifl.QiflError) as info:
        qifl.parse_channel_csv("channel,u\na,x\n")
    assert info.value.kind == "ParseError"
    with pytest.raises(qifl.QiflError) as info:
        qifl.verify_ldp(eye(), F(1, 2))
    assert info.value.kind == "InvalidEpsilon"


def test_csv_round_trip_and_decimals():
    r = qifl.parse_channel_csv((DATA / "R_decimal.csv").read_text())
    assert r == survey(F(3, 5), F(1, 5))
    assert qifl.parse_channel_csv(qifl.to_csv(r)) == r


def test_dalenius():
    j = qifl.Joint(["z1", "z2"], ["a", "b"], [[F(1, 4), F(1, 4)], [F(1, 8), F(3, 8)]])
    c = qifl.Channel(["a", "b"], ["u", "v"], [[1, 0], [F(1, 4), F(3, 4)]])
    r = qifl.dalenius_lift(j, c)
    assert r["lift_rho_dc"] == F(6, 5)
    assert r["bound"] == F(4, 3)
    assert r["holds"]


def test_cli_and_registry():
    code, out, _ = qifl.run_cli(
        ["analyze", "--channel", str(DATA / "eye_channel.csv"),
         "--prior", str(DATA / "eye_prior.csv"), "--format", "json"])
    assert code == 0
    assert json.loads(out)["value"] == {"num": 19, "den": 11, "infinite": False}
    results = qifl.run_registry(trials=20)
    assert results and all(r["passed"] for r in results)
