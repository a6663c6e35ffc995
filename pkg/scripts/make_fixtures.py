"""Rebuild the fixture files from their coordinate ANF strings.

The two bundled maps are quadratic embeddings whose balanced-component
counts sit exactly on the parity-dependent floor: 11 of 15 for the 3->4
map, 15 of 31 for the 4->5 map.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from vbflab import from_coordinates, parse_anf, truth_table_from_anf

FIXTURES = {
    "example1.json": {
        "n": 3,
        "m": 4,
        "anf": [
            "x1*x2 + x1 + x2 + x3",
            "x1*x3 + x1 + x2 + x3",
            "x2*x3 + x1 + x2",
            "x1 + x3",
        ],
    },
    "example2.json": {
        "n": 4,
        "m": 5,
        "anf": [
            "x1*x2 + x4",
            "x1*x3 + x3 + x4",
            "x1*x4 + x3*x4 + x2",
            "x2*x3 + x3*x4 + x1 + x4",
            "x1*x3 + x2*x4",
        ],
    },
}


def main() -> int:
    outdir = os.path.join(os.path.dirname(__file__), "..", "fixtures")
    os.makedirs(outdir, exist_ok=True)
    for name, data in FIXTURES.items():
        coords = [
            truth_table_from_anf(parse_anf(text, data["n"])) for text in data["anf"]
        ]
        F = from_coordinates(coords)
        path = os.path.join(outdir, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")
        print(f"{path}: n={F.n} m={F.m} table={list(F.table)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
