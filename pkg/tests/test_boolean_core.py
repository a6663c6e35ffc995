"""Truth tables, the ANF transform, degree, and the ANF text grammar."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vbflab.boolean_core import (
    AnfPolynomial,
    AnfSyntaxError,
    BooleanFunction,
    anf_from_truth_table,
    degree,
    mobius_transform,
    parse_anf,
    render_anf,
    truth_table_from_anf,
    weight,
)


def tables(n):
    return st.tuples(*([st.integers(min_value=0, max_value=1)] * (1 << n)))


def bf(n):
    return tables(n).map(lambda t: BooleanFunction(n, t))


# evaluation oracle: a monomial is 1 exactly on points covering its support
def eval_anf(p: AnfPolynomial, x: int) -> int:
    bits = [(x >> i) & 1 for i in range(p.n)]
    acc = 0
    for mono in p.monomials:
        acc ^= all(bits[i - 1] for i in mono)
    return int(acc)


@given(st.lists(st.integers(min_value=0, max_value=1), min_size=16, max_size=16))
def test_mobius_transform_involution(bits):
    once = mobius_transform(list(bits))
    twice = mobius_transform(list(once))
    assert twice == list(bits)


@given(bf(4))
def test_anf_roundtrip(f):
    assert truth_table_from_anf(anf_from_truth_table(f)) == f


@given(bf(3))
def test_anf_agrees_with_direct_evaluation(f):
    p = anf_from_truth_table(f)
    assert all(eval_anf(p, x) == f.table[x] for x in range(f.size))


def test_table_validation():
    with pytest.raises(ValueError):
        BooleanFunction(2, (0, 1, 0))  # wrong length
    with pytest.raises(ValueError):
        BooleanFunction(2, (0, 1, 0, 2))  # not a bit
    with pytest.raises(ValueError):
        BooleanFunction(0, ())


def test_weight_and_degree_small():
    f = truth_table_from_anf(parse_anf("x1*x2", 2))
    assert weight(f) == 1
    assert degree(f) == 2
    assert degree(truth_table_from_anf(parse_anf("1", 2))) == 0
    assert degree(truth_table_from_anf(parse_anf("0", 2))) == 0
    assert degree(truth_table_from_anf(parse_anf("x2 + 1", 2))) == 1


@given(bf(4))
def test_degree_matches_anf(f):
    p = anf_from_truth_table(f)
    assert degree(f) == p.degree


def test_parse_basic_forms():
    p = parse_anf("x1*x2 + x3 + 1", 3)
    assert p.monomials == frozenset(
        {frozenset({1, 2}), frozenset({3}), frozenset()}
    )
    # duplicate terms cancel over F2
    assert parse_anf("x1 + x1", 3).monomials == frozenset()
    assert parse_anf("1 + 1 + x2", 3).monomials == frozenset({frozenset({2})})
    # squaring collapses: x1*x1 = x1
    assert parse_anf("x1*x1", 2) == parse_anf("x1", 2)
    assert parse_anf("0", 2).monomials == frozenset()
    assert parse_anf("0 + x1", 2) == parse_anf("x1", 2)


def test_parse_whitespace_and_newlines():
    assert parse_anf("x1 *x2\n + x3", 3) == parse_anf("x1*x2+x3", 3)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("x1 x2", "missing '+' or '*'"),
        ("x1*", "missing right factor"),
        ("*x1", "missing left factor"),
        ("x1 + + x2", "empty term"),
        ("", "empty ANF"),
        ("x1*1", "constant 1 cannot appear inside a product"),
        ("1*x1", "constant term cannot appear inside a product"),
        ("x9", "outside"),
        ("x0", "outside"),
        ("y1", "malformed ANF token"),
        ("x1 & x2", "missing '+' or '*' before '&'"),
        ("&", "malformed ANF token"),
        ("x1 + x2 +", "empty term"),
    ],
)
def test_parse_rejections(text, fragment):
    with pytest.raises(AnfSyntaxError) as exc:
        parse_anf(text, 3)
    assert fragment in str(exc.value)


def test_parse_error_position():
    with pytest.raises(AnfSyntaxError) as exc:
        parse_anf("x1 +\n x2 * y3", 3)
    assert exc.value.line == 2
    assert exc.value.col == 7


def test_render_canonical_order():
    p = parse_anf("x3 + x1*x2 + 1 + x1", 3)
    assert render_anf(p) == "x1*x2 + x1 + x3 + 1"
    assert render_anf(parse_anf("0", 3)) == "0"


@given(bf(3))
def test_render_parse_roundtrip(f):
    p = anf_from_truth_table(f)
    assert parse_anf(render_anf(p), 3) == p
