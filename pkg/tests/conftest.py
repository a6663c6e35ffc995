import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import pytest

from vbflab import from_coordinates, parse_anf, truth_table_from_anf

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")

EXAMPLE1_ANF = (
    "x1*x2 + x1 + x2 + x3",
    "x1*x3 + x1 + x2 + x3",
    "x2*x3 + x1 + x2",
    "x1 + x3",
)

EXAMPLE2_ANF = (
    "x1*x2 + x4",
    "x1*x3 + x3 + x4",
    "x1*x4 + x3*x4 + x2",
    "x2*x3 + x3*x4 + x1 + x4",
    "x1*x3 + x2*x4",
)


def build_vbf(n, anf_strings):
    return from_coordinates(
        truth_table_from_anf(parse_anf(s, n)) for s in anf_strings
    )


@pytest.fixture(scope="session")
def example1():
    return build_vbf(3, EXAMPLE1_ANF)


@pytest.fixture(scope="session")
def example2():
    return build_vbf(4, EXAMPLE2_ANF)
