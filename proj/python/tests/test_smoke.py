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


import os
from fractions import Fraction
from pathlib import Path

import pytest

import cellforest

CORPUS = Path(
    os.environ.get("CELLFOREST_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus")
)


def load(name):
    return cellforest.Complex.load(str(CORPUS / f"{name}.json"))


def test_load_and_counts():
    x = load("rp2")
    assert x.dimension == 2
    assert x.counts() == [6, 15, 10]
    assert "RP2" in repr(x)
    again = cellforest.Complex.parse(x.to_json())
    assert again.counts() == x.counts()


def test_bad_input_raises():
    with pytest.raises(ValueError):
        cellforest.Complex.parse("{ not json")
    with pytest.raises(RuntimeError):
        cellforest.Complex.load(str(CORPUS / "missing.json"))


def test_homology():
    assert cellforest.homology(load("rp2"), 1) == (0, [2])
    assert cellforest.homology(load("sphere2"), 2) == (1, [])


def test_trent_on_k4():
    report = cellforest.verify(load("k4"), "trent", 1)
    assert report["pass"]
    assert report["rows"][0]["lhs"] == "16"
    assert "elapsed_ms" not in report


def test_matrices_are_exact():
    k4 = load("k4")
    m = cellforest.mesh_matrix(k4, 1)
    # Determinant of the 3x3 cycle mesh matrix by cofactors.
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    assert det == 16
    # t (t - 4)^3
    assert cellforest.laplacian_charpoly(k4, 1) == [0, -64, 48, -12, 1]
    b = cellforest.boundary_matrix(k4, 1)
    assert all(sum(col) == 0 for col in zip(*b))
    assert cellforest.count_forests(k4, 1) == 16


def test_moore_and_rf():
    assert cellforest.verify(load("moore2"), "boundary", 1)["rows"][0]["lhs"] == "4"
    rf = cellforest.rf(load("rp2"))
    assert rf["pass"]
    assert Fraction(rf["cases"][-1]["lhs"]) == Fraction(1, 4)


def test_kalai():
    report = cellforest.kalai(6, 3, "mesh")
    assert report["pass"]
    assert report["rows"][2]["lhs"] == "46656"
    weighted = cellforest.kalai(4, 1, "incidence", weights=[1, 2, 3, 4])
    assert weighted["pass"]


def test_cli_round_trip():
    code, out, err = cellforest.run_cli(["validate", str(CORPUS / "k4.json"), "--format", "table"])
    assert code == 0
    assert out.startswith("K4: valid")
    code, out, err = cellforest.run_cli(["mesh", "nonexistent.json", "--dim", "1", "--which", "cycles"])
    assert code == 2
    assert err
