#!/usr/bin/env python3
"""Writes the shipped exceptional group definitions into data/groups/."""
import json
import sys
from fractions import Fraction
from pathlib import Path

RANK2 = {
    # name: (p1, p2, h, d1, edge label, order)
    "G5": (3, 3, 12, 6, 4, 72),
    "G6": (2, 3, 12, 4, 6, 48),
    "G9": (2, 4, 24, 8, 6, 192),
    "G10": (3, 4, 24, 12, 4, 288),
    "G14": (3, 2, 24, 6, 8, 144),
    "G17": (2, 5, 60, 20, 6, 1200),
    "G18": (3, 5, 60, 30, 4, 1800),
    "G21": (2, 3, 60, 12, 10, 720),
}


def z(k, m):
    k %= m
    return "1" if k == 0 else ("z" if k == 1 else f"z^{k}")


def rank2(name, p1, p2, h, d1, label, order):
    m = h
    a, b = z(m // p1, m), z(m // p2, m)
    # lower-left entry: zeta_h^(1-d1) + zeta_h^(1-h) - zeta_p1 - zeta_p2
    lower = f"{z(1 - d1, m)} + {z(1 - h, m)} - {a} - {b}"
    return {
        "name": name,
        "rank": 2,
        "conductor": m,
        "expected_order": order,
        "real_form": False,
        "diagram": {"nodes": [p1, p2], "edges": [[0, 1, label]]},
        "generators": [[[a, "1"], ["0", "1"]], [["1", "0"], [lower, b]]],
    }


def g26():
    d, o = "2/3 + 1/3*z^6", "-1/3 + 1/3*z^6"
    return {
        "name": "G26",
        "rank": 3,
        "conductor": 18,
        "expected_order": 1296,
        "real_form": False,
        "diagram": {"nodes": [3, 3, 2], "edges": [[0, 1, 3], [1, 2, 4]]},
        "generators": [
            [[d, o, o], [o, d, o], [o, o, d]],
            [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "z^6"]],
            [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]],
        ],
    }


def real_reflection(alpha):
    norm = sum(x * x for x in alpha)
    n = len(alpha)
    return [[str((1 if i == j else 0) - 2 * alpha[i] * alpha[j] / norm) for j in range(n)] for i in range(n)]


def g28():
    h = Fraction(1, 2)
    roots = [[0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1], [h, -h, -h, -h]]
    roots = [[Fraction(x) for x in r] for r in roots]
    return {
        "name": "G28",
        "rank": 4,
        "conductor": 12,
        "expected_order": 1152,
        "real_form": True,
        "diagram": {"nodes": [2, 2, 2, 2], "edges": [[0, 1, 3], [1, 2, 4], [2, 3, 3]]},
        "generators": [real_reflection(r) for r in roots],
    }


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "groups")
    out.mkdir(parents=True, exist_ok=True)
    defs = [rank2(name, *params) for name, params in RANK2.items()] + [g26(), g28()]
    for d in defs:
        (out / f"{d['name']}.json").write_text(json.dumps(d, indent=2) + "\n")


if __name__ == "__main__":
    main()
