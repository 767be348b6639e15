# Copyright 2026 The pmpspec Authors.
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
import math

import pytest

import pmpspec


def test_cycle_spectrum_closed_form():
    values = pmpspec.adjacency_spectrum(pmpspec.cycle(7))
    expected = sorted(2 * math.cos(2 * math.pi * i / 7) for i in range(7))
    assert values == pytest.approx(expected, abs=1e-9)


def test_graph_roundtrip_and_repr():
    g = pmpspec.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4 and g.num_edges == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert pmpspec.Graph.parse(g.to_edge_list()) == g
    assert repr(g) == "Graph(n=4, m=3)"
    assert g == pmpspec.path(4)


def test_invalid_graph_raises():
    with pytest.raises(pmpspec.PmpError):
        pmpspec.Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        pmpspec.Graph(2, [(0, 5)])


def test_petersen_report():
    r = pmpspec.spectral_report(pmpspec.petersen())
    assert r["M"] == 3 and r["m"] == -2
    assert r["wilf"] == 4 and r["hoffman"] == 3
    assert r["gap"] == 2


def test_colorings_are_proper():
    g = pmpspec.petersen()
    colors = pmpspec.wilf_color(g)
    assert all(colors[u] != colors[v] for u, v in g.edges())
    assert pmpspec.chromatic_number(g) == 3
    assert pmpspec.independence_number(g) == 4
    paley = [[(x + s) % 7 for x in range(7)] for s in (1, 2, 4)]
    assert len(set(pmpspec.function_graph_color(paley))) == 7


def test_bipartite_and_matching():
    assert pmpspec.bipartite_test(pmpspec.cycle(6))["symmetric_spectrum"]
    assert not pmpspec.bipartite_test(pmpspec.cycle(5))["symmetric_spectrum"]
    star = pmpspec.complete_bipartite(1, 3)
    assert pmpspec.perfect_matching(star) is None
    assert not pmpspec.tutte_scan(star)["classical_holds"]
    matching = pmpspec.perfect_matching(pmpspec.petersen())
    assert len(matching) == 5


def test_cli_in_process():
    code, gen, _ = pmpspec.run_cli(["gen", "--cycle", "5"])
    assert code == 0
    code, report = pmpspec.cli("spectrum", input=gen)
    assert code == 0
    assert report["command"] == "spectrum"
    code, report = pmpspec.cli("spectrum", input="garbage")
    assert code == 2 and "error" in report


def test_verification_suite_passes():
    results = pmpspec.run_verification()
    assert results and all(passed for _, passed, _ in results)
