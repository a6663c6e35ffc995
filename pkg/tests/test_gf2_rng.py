"""Bit-vector linear algebra and the seeded generator.

The generator's output for a fixed seed is part of the package contract
(search results and verification samples must be reproducible across
platforms), so the known-answer values here are load-bearing.
"""

from hypothesis import given
from hypothesis import strategies as st

from vbflab.gf2 import (
    basis_of,
    bits_to_int,
    dot,
    insert_into_basis,
    int_to_bits,
    is_subspace,
    parity,
    popcount,
    rank,
    span,
)
from vbflab.rng import SplitMix64, mix64, substream


def test_popcount_small():
    assert [popcount(v) for v in range(8)] == [0, 1, 1, 2, 1, 2, 2, 3]


@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_parity_is_popcount_mod_2(v):
    assert parity(v) == popcount(v) % 2


@given(st.integers(min_value=0, max_value=255), st.integers(min_value=0, max_value=255))
def test_dot_bilinear(a, b):
    assert dot(a, b) == parity(a & b)
    assert dot(a ^ b, a ^ b) == 0 or dot(a ^ b, a ^ b) == 1


@given(st.integers(min_value=0, max_value=2**12 - 1))
def test_bits_roundtrip(v):
    assert bits_to_int(int_to_bits(v, 12)) == v


def test_int_to_bits_little_endian():
    assert int_to_bits(6, 4) == (0, 1, 1, 0)


@given(st.lists(st.integers(min_value=0, max_value=63), max_size=8))
def test_rank_and_span_sizes(vectors):
    r = rank(vectors)
    s = span(basis_of(vectors))
    assert len(s) == 1 << r
    assert 0 in s
    assert is_subspace(s)


def test_insert_into_basis_rejects_dependent():
    pivots = {}
    assert insert_into_basis(pivots, 0b101)
    assert insert_into_basis(pivots, 0b011)
    assert not insert_into_basis(pivots, 0b110)  # 101 ^ 011
    assert not insert_into_basis(pivots, 0)


def test_span_closed_under_xor():
    s = span(basis_of([5, 9, 12]))
    for a in s:
        for b in s:
            assert a ^ b in s


def test_splitmix_reference_sequence():
    # known-answer sequence for seed 0
    g = SplitMix64(0)
    assert [g.next64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_mix64_zero_is_nonzero():
    assert mix64(0) == 0
    assert mix64(1) != 0


def test_substream_independence_and_stability():
    assert substream(7, 3).next64() == substream(7, 3).next64()
    seen = {substream(7, i).next64() for i in range(64)}
    assert len(seen) == 64


@given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(min_value=1, max_value=63))
def test_bits_range(seed, k):
    v = SplitMix64(seed).bits(k)
    assert 0 <= v < 1 << k


@given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(min_value=1, max_value=1000))
def test_below_range(seed, bound):
    assert 0 <= SplitMix64(seed).below(bound) < bound


def test_shuffle_is_permutation():
    g = SplitMix64(123)
    items = list(range(20))
    shuffled = list(items)
    g.shuffle(shuffled)
    assert sorted(shuffled) == items
    assert shuffled != items  # 1/20! chance of a false alarm
