#!/usr/bin/env python3
"""Regenerate fixtures/*.json (surface lattice models)."""

import json
import math
import sys
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def write(name, doc):
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


def surface(name, gram, canonical, curves, basis=None, ample=None):
    doc = {"schema": 1, "name": name, "rank": len(gram), "gram": gram, "canonical": canonical}
    if basis:
        doc["basis"] = basis
    doc["curves"] = [{"name": n, "coords": c, "effective": e} for n, c, e in curves]
    if ample is not None:
        doc["ample_reference"] = [str(x) for x in ample]
    return doc


def cartan(kind, n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    edges = []
    if kind == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif kind == "E":
        # chain 0-1-2-...-(n-2) with the extra node n-1 attached to node 2
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    return c


def solve(m, b):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def ade(kind, n):
    c = cartan(kind, n)
    gram = [[1] + [0] * n] + [[0] + [-x for x in row] for row in c]
    x = solve(c, [1] * n)  # H.c_j = 1 for H = m h - sum x_i c_i
    xcx = sum(x[i] * c[i][j] * x[j] for i in range(n) for j in range(n))
    m = math.isqrt(math.ceil(xcx)) + 1
    basis = ["h"] + [f"c{i + 1}" for i in range(n)]
    curves = [("h", [1] + [0] * n, True)]
    for i in range(n):
        curves.append((f"c{i + 1}", [0] * (i + 1) + [1] + [0] * (n - i - 1), True))
    ample = [Fraction(m)] + [-v for v in x]
    return surface(f"{kind}{n}_resolution", gram, [-3] + [0] * n, curves, basis, ample)


def main():
    OUT.mkdir(exist_ok=True)
    for d in range(3, 9):
        write(f"double_cover_d{d}",
              surface(f"double_cover_d{d}", [[2]], [d - 3], [("H", [1], True)], ["H"], [1]))
    write("hirzebruch_f2",
          surface("hirzebruch_f2", [[0, 1], [1, -2]], [-4, -2],
                  [("f", [1, 0], True), ("s", [0, 1], True)], ["f", "s"], [3, 1]))
    write("blowup_p2",
          surface("blowup_p2", [[1, 0], [0, -1]], [-3, 1],
                  [("E", [0, 1], True), ("L", [1, -1], True), ("line", [1, 0], False)], ["H", "E"], [2, -1]))
    write("a2_resolution",
          surface("a2_resolution", [[1, 0, 0], [0, -2, 1], [0, 1, -2]], [-3, 0, 0],
                  [("h", [1, 0, 0], True), ("c1", [0, 1, 0], True), ("c2", [0, 0, 1], True)],
                  ["h", "c1", "c2"], [3, -1, -1]))
    write("minimally_elliptic",
          surface("minimally_elliptic", [[1, 0], [0, -1]], [-3, -1],
                  [("h", [1, 0], True), ("c", [0, 1], True)], ["h", "c"], [2, -1]))
    for kind, ns in (("A", range(1, 9)), ("D", range(4, 9)), ("E", range(6, 9))):
        for n in ns:
            write(f"ade_{kind.lower()}{n}", ade(kind, n))
    return 0


if __name__ == "__main__":
    sys.exit(main())
