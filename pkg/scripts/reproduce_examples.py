"""Analyze the two bundled quadratic embeddings and print full reports.

Expected headline numbers: the 3->4 map has 11 balanced components with
the 4 unbalanced nontrivial ones all semi-bent; the 4->5 map has 15
balanced components with the 16 unbalanced nontrivial ones all bent.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from vbflab.cli import main as cli_main


def main() -> int:
    fixtures = os.path.join(os.path.dirname(__file__), "..", "fixtures")
    status = 0
    for name in ("example1.json", "example2.json"):
        print(f"==== {name} ====")
        status |= cli_main(["analyze", "--input", os.path.join(fixtures, name)])
        print()
    return status


if __name__ == "__main__":
    sys.exit(main())
