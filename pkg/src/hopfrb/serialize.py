"""Exact text and JSON interchange formats.

Cayley tables travel as plain text: a first line ``order n`` followed by n
rows of n whitespace-separated 0-based indices. Hopf algebra data travels as
JSON with every rational serialized as a ``"p/q"`` string so nothing is ever
rounded.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .groups import GroupTable, from_cayley_table
from .hopf import HopfData, make_hopf
from .linalg import Matrix


def frac_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def frac_from_str(s: str) -> Fraction:
    return Fraction(s)


def load_cayley_table(path: str, name: str = "") -> GroupTable:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("order"):
        raise ValueError("first line must be 'order n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("first line must be 'order n'")
    rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(rows) != n:
        raise ValueError(f"expected {n} table rows, found {len(rows)}")
    return from_cayley_table(rows, name=name or f"file-order{n}")


def save_cayley_table(g: GroupTable, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"order {g.order}\n")
        for row in g.mult:
            fh.write(" ".join(str(x) for x in row) + "\n")


def hopf_to_json(h: HopfData) -> dict:
    mult = []
    for i in range(h.dim):
        for j in range(h.dim):
            for k, v in sorted(h.mult[i][j].items()):
                mult.append([i, j, k, frac_to_str(v)])
    comult = []
    for i in range(h.dim):
        for (j, k), v in sorted(h.comult[i].items()):
            comult.append([i, j, k, frac_to_str(v)])
    antipode = []
    for i in range(h.dim):
        for j in range(h.dim):
            v = h.antipode.entries[i][j]
            if v != 0:
                antipode.append([i, j, frac_to_str(v)])
    return {
        "dim": h.dim,
        "name": h.name,
        "basis": list(h.basis_labels),
        "mult": mult,
        "unit": [frac_to_str(v) for v in h.unit],
        "comult": comult,
        "counit": [frac_to_str(v) for v in h.counit],
        "antipode": antipode,
    }


def hopf_from_json(doc: dict, check: bool = True) -> HopfData:
    n = doc["dim"]
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i, j, k, s in doc["mult"]:
        mult[i][j][k] = frac_from_str(s)
    comult = [{} for _ in range(n)]
    for i, j, k, s in doc["comult"]:
        comult[i][(j, k)] = frac_from_str(s)
    antipode = Matrix.zero(n, n)
    for i, j, s in doc["antipode"]:
        antipode.entries[i][j] = frac_from_str(s)
    return make_hopf(n, list(doc["basis"]), mult,
                     [frac_from_str(s) for s in doc["unit"]], comult,
                     [frac_from_str(s) for s in doc["counit"]], antipode,
                     name=doc.get("name", ""), check=check)


def dump_hopf(h: HopfData, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(hopf_to_json(h), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_hopf(path: str, check: bool = True) -> HopfData:
    with open(path) as fh:
        return hopf_from_json(json.load(fh), check=check)
