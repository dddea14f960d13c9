#!/usr/bin/env python3
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
"""Writes the bundled complexes into corpus/."""

import itertools
import json
import pathlib
import sys


def simplicial(name, facets, prefix="x", max_dim=None):
    """Closure of `facets` (vertex tuples), oriented by increasing vertex."""
    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            faces.update(itertools.combinations(f, k))
    top = max(len(f) for f in faces) - 1
    if max_dim is not None:
        top = min(top, max_dim)

    def ident(s):
        return "".join(f"{prefix}{v}" for v in s)

    cells = {}
    for d in range(top + 1):
        layer = []
        for s in sorted(f for f in faces if len(f) == d + 1):
            cell = {"id": ident(s)}
            if d > 0:
                bd = []
                for i in reversed(range(len(s))):
                    face = s[:i] + s[i + 1:]
                    bd.append([ident(face), 1 if i % 2 == 0 else -1])
                cell["boundary"] = bd
            layer.append(cell)
        cells[str(d)] = layer
    return {"name": name, "dimension": top, "cells": cells}


def graph(name, vertices, edges):
    cells = {"0": [{"id": v} for v in vertices], "1": []}
    for eid, tail, head in edges:
        cells["1"].append({"id": eid, "boundary": [[tail, -1], [head, 1]]})
    return {"name": name, "dimension": 1, "cells": cells}


def complete_graph(n):
    vs = [f"v{i}" for i in range(1, n + 1)]
    es = [(f"e{i}{j}", f"v{i}", f"v{j}")
          for i, j in itertools.combinations(range(1, n + 1), 2)]
    return graph(f"K{n}", vs, es)


def rp2():
    tris = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    facets = [tuple(int(c) for c in t) for t in tris]
    edge_use = {}
    for t in facets:
        for e in itertools.combinations(sorted(t), 2):
            edge_use[e] = edge_use.get(e, 0) + 1
    assert len(edge_use) == 15 and all(c == 2 for c in edge_use.values())
    return simplicial("RP2", facets, prefix="v")


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    complexes = {
        # Triangle graph with edges listed as e12, e23, e13.
        "k3": graph("K3", ["v1", "v2", "v3"],
                    [("e12", "v1", "v2"), ("e23", "v2", "v3"), ("e13", "v1", "v3")]),
        "k4": complete_graph(4),
        "theta": graph("theta", ["a", "b"],
                       [("p", "a", "b"), ("q", "a", "b"), ("r", "a", "b")]),
        "p2": graph("P2", ["v1", "v2"], [("e", "v1", "v2")]),
        "simplex3": simplicial("solid tetrahedron", [(1, 2, 3, 4)]),
        "sphere2": simplicial("tetrahedron boundary", [(1, 2, 3, 4)], max_dim=2),
        "delta5_2skel": simplicial("2-skeleton of the 5-simplex",
                                   [tuple(range(1, 7))], max_dim=2),
        "rp2": rp2(),
        "moore2": {
            "name": "Moore space M(Z/2,1)",
            "dimension": 2,
            "cells": {
                "0": [{"id": "v"}],
                "1": [{"id": "e", "boundary": []}],
                "2": [{"id": "f", "boundary": [["e", 2]]}],
            },
        },
        "dunce": {
            "name": "dunce hat",
            "dimension": 2,
            "cells": {
                "0": [{"id": "v"}],
                "1": [{"id": "a", "boundary": []}],
                "2": [{"id": "D", "boundary": [["a", 1]]}],
            },
        },
    }
    for key, doc in complexes.items():
        (out / f"{key}.json").write_text(dump(doc))


def dump(doc):
    """One cell per line; stable across runs."""
    lines = ["{", f' "name": {json.dumps(doc["name"])},',
             f' "dimension": {doc["dimension"]},', ' "cells": {']
    dims = list(doc["cells"])
    for i, d in enumerate(dims):
        lines.append(f'  "{d}": [')
        layer = doc["cells"][d]
        for j, cell in enumerate(layer):
            sep = "," if j + 1 < len(layer) else ""
            lines.append("   " + json.dumps(cell, separators=(", ", ": ")) + sep)
        lines.append("  ]" + ("," if i + 1 < len(dims) else ""))
    lines.append(" }")
    lines.append("}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "corpus")
