"""Field arithmetic, power maps, differential uniformity, and the
restricted-derivative route to APN detection.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vbflab.apn import (
    IRREDUCIBLE,
    algebraic_degree,
    apn_via_restricted_derivatives,
    check_cubic_apn_corollary,
    differential_uniformity,
    gf_mul,
    gf_pow,
    insert_zero_bit,
    is_apn,
    power_map_table,
    restricted_derivative,
    transversal_pivot,
)
from vbflab.rng import SplitMix64
from vbflab.statements import check_statement
from vbflab.vectorial import (
    VectorialBooleanFunction,
    balanced_set,
    constant_set,
    image_is_affine_subspace,
    image_size,
    is_embedding,
)


# polynomial multiplication oracle: shift-and-xor without reduction,
# then long division by the modulus
def polymul_oracle(a, b, n):
    prod = 0
    bb = b
    shift = 0
    while bb:
        if bb & 1:
            prod ^= a << shift
        bb >>= 1
        shift += 1
    mod = IRREDUCIBLE[n]
    while prod.bit_length() >= mod.bit_length():
        prod ^= mod << (prod.bit_length() - mod.bit_length())
    return prod


def poly_is_irreducible(p):
    """Brute force: no factor of degree in [1, deg/2]."""
    deg = p.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            # long-divide p by q over F2
            r = p
            while r.bit_length() >= q.bit_length():
                r ^= q << (r.bit_length() - q.bit_length())
            if r == 0:
                return False
    return True


def test_moduli_are_irreducible_and_least():
    for n, p in IRREDUCIBLE.items():
        assert p.bit_length() == n + 1
        assert poly_is_irreducible(p), f"degree {n}"
        # nothing smaller of the same degree works
        for q in range(1 << n, p):
            if q.bit_length() == n + 1 and poly_is_irreducible(q):
                pytest.fail(f"degree {n}: {q:#b} < {p:#b} is irreducible")


@given(
    st.integers(min_value=0, max_value=31),
    st.integers(min_value=0, max_value=31),
    st.integers(min_value=0, max_value=31),
)
def test_field_axioms_degree_5(a, b, c):
    n = 5
    assert gf_mul(a, b, n) == gf_mul(b, a, n) == polymul_oracle(a, b, n)
    assert gf_mul(a, gf_mul(b, c, n), n) == gf_mul(gf_mul(a, b, n), c, n)
    assert gf_mul(a, b ^ c, n) == gf_mul(a, b, n) ^ gf_mul(a, c, n)
    assert gf_mul(a, 1, n) == a


def test_gf_pow_small():
    n = 3
    for x in range(8):
        assert gf_pow(x, 0, n) == 1
        assert gf_pow(x, 1, n) == x
        assert gf_pow(x, 2, n) == gf_mul(x, x, n)
        # multiplicative order divides 2^n - 1 for nonzero x
        if x:
            assert gf_pow(x, 7, n) == 1


def test_power_map_cube_table_degree_3():
    F = power_map_table(3, 3)
    assert F.table == (0, 1, 3, 4, 5, 6, 7, 2)
    assert is_apn(F)
    assert algebraic_degree(F) == 2


def test_power_map_bounds():
    with pytest.raises(ValueError):
        power_map_table(1, 3)
    with pytest.raises(ValueError):
        power_map_table(17, 3)
    with pytest.raises(ValueError):
        power_map_table(3, -1)
    F = power_map_table(2, 0)
    assert F.table == (1, 1, 1, 1)  # x^0 = 1 everywhere, 0 included


def test_differential_uniformity_brute_force():
    F = power_map_table(4, 3)
    worst = 0
    for a in range(1, F.size):
        for b in range(F.size):
            sols = sum(
                1 for x in range(F.size) if F.table[x] ^ F.table[x ^ a] == b
            )
            worst = max(worst, sols)
    assert differential_uniformity(F) == worst == 2  # Gold map, n=4


def test_known_apn_power_maps():
    assert is_apn(power_map_table(3, 3))
    assert is_apn(power_map_table(5, 3))
    assert is_apn(power_map_table(5, 13))  # degree-3 exponent
    assert not is_apn(power_map_table(4, 1))
    assert not is_apn(power_map_table(5, 2))  # linear: squaring
    assert not is_apn(power_map_table(4, 7))


def test_transversal_pivot_and_insert():
    assert transversal_pivot(1) == 0
    assert transversal_pivot(6) == 2
    assert insert_zero_bit(0b101, 1) == 0b1001
    assert insert_zero_bit(0b11, 0) == 0b110
    # domain and its shift by a tile the cube
    for n in (3, 4):
        for a in range(1, 1 << n):
            pts = {insert_zero_bit(v, transversal_pivot(a)) for v in range(1 << (n - 1))}
            assert not pts & {x ^ a for x in pts}
            assert pts | {x ^ a for x in pts} == set(range(1 << n))


def test_restricted_derivative_shape():
    F = power_map_table(4, 3)
    rd = restricted_derivative(F, 5)
    assert rd.direction == 5
    assert rd.pivot == 2
    assert rd.map.n == 3 and rd.map.m == 4
    # values really are derivative values on the transversal
    for v in range(8):
        x = insert_zero_bit(v, rd.pivot)
        assert rd.map.table[v] == F.table[x] ^ F.table[x ^ 5]
    with pytest.raises(ValueError):
        restricted_derivative(F, 0)


@settings(max_examples=250, deadline=None)
@given(st.tuples(*([st.integers(min_value=0, max_value=7)] * 8)))
def test_apn_equivalence_restricted_route(table):
    F = VectorialBooleanFunction(3, 3, table)
    assert is_apn(F) == apn_via_restricted_derivatives(F)


def test_derivative_pair_symmetry():
    rng = SplitMix64(5)
    for _ in range(40):
        F = VectorialBooleanFunction(
            3, 3, tuple(rng.below(8) for _ in range(8))
        )
        a = 1 + rng.below(7)
        d = [F.table[x] ^ F.table[x ^ a] for x in range(8)]
        assert all(d[x] == d[x ^ a] for x in range(8))


def test_cube_over_degree_5_restrictions_affine_like():
    F = power_map_table(5, 3)
    for a in range(1, F.size):
        rd = restricted_derivative(F, a)
        assert is_embedding(rd.map)
        assert algebraic_degree(rd.map) <= 1
        assert image_is_affine_subspace(rd.map)
        assert len(balanced_set(rd.map)) == 30
        assert len(constant_set(rd.map)) == 2
        v = check_statement(rd.map, "theorem5.10")
        assert v.applicable and v.holds


def test_kasami_over_degree_5_cubic_corollary():
    F = power_map_table(5, 13)
    assert algebraic_degree(F) == 3
    v = check_cubic_apn_corollary(F)
    assert v.applicable and v.holds
    assert v.lhs == 15 and v.rhs == 15  # worst direction sits on the floor
    for a in (1, 7, 30):
        rd = restricted_derivative(F, a)
        assert is_embedding(rd.map)
        assert algebraic_degree(rd.map) == 2


def test_cubic_corollary_inapplicable_cases():
    assert not check_cubic_apn_corollary(power_map_table(5, 3)).applicable
    assert not check_cubic_apn_corollary(power_map_table(4, 1)).applicable
    assert not check_cubic_apn_corollary(
        VectorialBooleanFunction(2, 3, (0, 1, 2, 4))
    ).applicable
