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
"""Spectral bounds, colorings and matchings of finite graphs."""

import json as _json

from . import _pmpspec
from ._pmpspec import (
    Graph,
    PmpError,
    __version__,
    adjacency_spectrum,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    function_graph_color,
    independence_number,
    laplacian_spectrum,
    path,
    perfect_matching,
    petersen,
    random_gnp,
    random_regular,
    run_cli,
    run_verification,
    spectral_gap,
    subdivide,
    wilf_color,
)


def spectral_report(g):
    """Spectra, extremes, Wilf and Hoffman bounds and the gap, as a dict."""
    return _json.loads(_pmpspec._spectral_report(g))


def wilf_color_report(g):
    return _json.loads(_pmpspec._wilf_color_report(g))


def bipartite_test(g, tol=1e-9):
    return _json.loads(_pmpspec._bipartite_report(g, tol))


def tutte_scan(g, randomized=False, seed=0, samples=4096):
    """Worst odd-component ratio over vertex subsets, plus a matching if any.

    Exhaustive mode covers every nonempty subset and accepts up to 22
    vertices; randomized mode samples `samples` subsets from `seed`.
    """
    return _json.loads(_pmpspec._tutte_report(g, randomized, seed, samples))


def cli(*args, input=""):
    """Runs the command-line tool in process; returns (exit_code, parsed JSON)."""
    code, out, _ = run_cli(list(args), input)
    try:
        return code, _json.loads(out)
    except ValueError:
        return code, out


__all__ = [
    "Graph", "PmpError", "__version__", "adjacency_spectrum", "bipartite_test",
    "chromatic_number", "cli", "complete", "complete_bipartite", "cycle",
    "function_graph_color", "independence_number", "laplacian_spectrum", "path",
    "perfect_matching", "petersen", "random_gnp", "random_regular", "run_cli",
    "run_verification", "spectral_gap", "spectral_report", "subdivide",
    "tutte_scan", "wilf_color", "wilf_color_report",
]
