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

"""Exact forest, mesh and torsion computations on cell complexes."""

import json
from fractions import Fraction

from ._cellforest import (
    Complex,
    ParseError,
    ValidationError,
    boundary_matrix as _boundary_matrix,
    count_forests,
    homology as _homology,
    kalai_json,
    laplacian_charpoly as _laplacian_charpoly,
    mesh_matrix as _mesh_matrix,
    rf_json,
    run_cli,
    verify_json,
)

__all__ = [
    "Complex",
    "ParseError",
    "ValidationError",
    "boundary_matrix",
    "count_forests",
    "homology",
    "kalai",
    "laplacian_charpoly",
    "mesh_matrix",
    "rf",
    "run_cli",
    "verify",
]


def _matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def homology(complex_, d):
    """Returns (betti, [invariant factors > 1]) for H_d."""
    betti, factors = _homology(complex_, d)
    return betti, [int(f) for f in factors]


def boundary_matrix(complex_, d):
    return [[int(x) for x in row] for row in _boundary_matrix(complex_, d)]


def mesh_matrix(complex_, d, which="cycles"):
    return _matrix(_mesh_matrix(complex_, d, which))


def laplacian_charpoly(complex_, d):
    """Coefficients of det(t - L), constant term first."""
    return [Fraction(c) for c in _laplacian_charpoly(complex_, d)]


def verify(complex_, theorem, d=0):
    """Runs a forest-sum verifier and returns the report as a dict."""
    return json.loads(verify_json(complex_, theorem, d))


def rf(complex_):
    return json.loads(rf_json(complex_))


def kalai(n, k, kind, weights=None):
    if weights is not None:
        weights = [str(Fraction(w)) for w in weights]
    return json.loads(kalai_json(n, k, kind, weights))
