# Copyright 2026 The Fennec Authors
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

import pytest

fennec = pytest.importorskip("_fennec")

NETWORK = json.dumps(
    {
        "firms": [
            {"id": "v1", "external": "1"},
            {"id": "v2", "external": "0"},
            {"id": "v3", "external": "0"},
            {"id": "v4", "external": "1"},
            {"id": "v5", "external": "0"},
        ],
        "debts": [
            {"from": "v1", "to": "v2", "amount": "2"},
            {"from": "v1", "to": "v3", "amount": "1"},
            {"from": "v2", "to": "v1", "amount": "1"},
            {"from": "v3", "to": "v5", "amount": "1"},
        ],
        "cds": [{"from": "v4", "to": "v5", "reference": "v3", "notional": "1"}],
        "default_costs": {"alpha": "1", "beta": "1"},
    }
)


def test_clear_priority_profile():
    net = fennec.parse_network(NETWORK)
    profile = fennec.parse_profile(net, json.dumps({"v1": [["v2"], ["v3"]]}))
    result = fennec.clear(net, profile)
    assert result.converged
    assert result.totals == ["2", "1", "0", "1", "0"]
    assert result.recovery[net.index_of("v3")] == "0"


def test_proportional_clear_exact_rationals():
    net = fennec.parse_network(NETWORK)
    result = fennec.proportional_clear(net)
    v4, v5 = net.index_of("v4"), net.index_of("v5")
    assert result.payments[v4][v5] == "1/3"


def test_social_welfare_modes():
    net = fennec.parse_network(NETWORK)
    profile = fennec.parse_profile(net, json.dumps({"v1": [["v2"], ["v3"]]}))
    assert fennec.social_welfare(net, profile, "assets") == "6"
    assert fennec.social_welfare(net, profile, "equity") == "2"


def test_analyze_reports_equilibria():
    net = fennec.make_fixture("thm9-poa", {"M": "100"})
    report = json.loads(fennec.analyze(net, "assets"))
    assert report["profiles_examined"] == 3
    assert report["poa"] == "101"


def test_fixture_round_trip():
    assert "example1" in fennec.fixture_names()
    assert fennec.verify_fixture("thm7-beta", {"beta": "1/2", "M": "100"}) == []


def test_errors_surface_as_exceptions():
    with pytest.raises(Exception):
        fennec.parse_network("{}")
