"""APN maps on F2^n and the hyperplane-restricted derivative construction.

Power-map fixtures x -> x^e are built over F2[x]/(p) with a fixed minimal
irreducible p per degree, so tables are bit-exact across runs and platforms.
"""

from dataclasses import dataclass

from .boolean_core import degree
from .statements import StatementVerdict, build_verdict
from .vectorial import VectorialBooleanFunction, component_analyses, coordinate, image_size

# Minimal-integer monic irreducible polynomial per degree, bit i = coeff of x^i.
IRREDUCIBLE = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
    13: 0b10000000011011,
    14: 0b100000000100001,
    15: 0b1000000000000011,
    16: 0b10000000000101011,
}


def gf_mul(a: int, b: int, n: int) -> int:
    """Carry-less product reduced mod the degree-n table polynomial."""
    poly = IRREDUCIBLE[n]
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= poly
    return out


def gf_pow(a: int, e: int, n: int) -> int:
    out = 1
    base = a
    while e:
        if e & 1:
            out = gf_mul(out, base, n)
        base = gf_mul(base, base, n)
        e >>= 1
    return out


def power_map_table(n: int, exponent: int) -> VectorialBooleanFunction:
    """x -> x^exponent over the fixed degree-n field; x^0 maps 0 to 1 too."""
    if n not in IRREDUCIBLE:
        raise ValueError(f"field degree must be in 2..16, got {n}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    table = tuple(gf_pow(x, exponent, n) for x in range(1 << n))
    return VectorialBooleanFunction(n, n, table)


def algebraic_degree(F: VectorialBooleanFunction) -> int:
    """Max coordinate degree (equals the max over nonzero components)."""
    return max(degree(coordinate(F, i)) for i in range(1, F.m + 1))


def differential_uniformity(F: VectorialBooleanFunction) -> int:
    """Max solution count of F(x) + F(x+a) = b over a != 0, b."""
    if F.n != F.m:
        raise ValueError(f"requires a square map, got n={F.n}, m={F.m}")
    size = F.size
    table = F.table
    worst = 0
    for a in range(1, size):
        counts = [0] * size
        for x in range(size):
            counts[table[x] ^ table[x ^ a]] += 1
        worst = max(worst, max(counts))
    return worst


def is_apn(F: VectorialBooleanFunction) -> bool:
    return differential_uniformity(F) == 2


def transversal_pivot(a: int) -> int:
    """The coordinate split along: the highest set bit of the direction.

    Fixing that bit to 0 picks exactly one point of every pair {x, x+a},
    which is what makes the restricted derivative injective exactly when
    no two pairs share a derivative value.
    """
    if a <= 0:
        raise ValueError(f"direction must be nonzero, got {a}")
    return a.bit_length() - 1


def insert_zero_bit(v: int, pivot: int) -> int:
    """Widen v by one bit, placing 0 at position pivot."""
    low = v & ((1 << pivot) - 1)
    return ((v >> pivot) << (pivot + 1)) | low


@dataclass(frozen=True)
class RestrictedDerivative:
    """D_a F evaluated on the hyperplane {x : bit pivot of x = 0}.

    map(v) = F(x + a) + F(x) with x the widening of v by a zero at the
    pivot position; pivot is the highest set bit of a, so the hyperplane
    is a transversal of the pairs {x, x+a}.
    """

    source: VectorialBooleanFunction
    direction: int
    pivot: int
    map: VectorialBooleanFunction


def restricted_derivative(F: VectorialBooleanFunction, a: int) -> RestrictedDerivative:
    if F.n != F.m:
        raise ValueError(f"requires a square map, got n={F.n}, m={F.m}")
    if F.n < 2:
        raise ValueError("requires n >= 2")
    if not 0 < a < F.size:
        raise ValueError(f"direction must be a nonzero n-bit vector, got {a}")
    pivot = transversal_pivot(a)
    table = []
    for v in range(1 << (F.n - 1)):
        x = insert_zero_bit(v, pivot)
        table.append(F.table[x ^ a] ^ F.table[x])
    return RestrictedDerivative(
        source=F,
        direction=a,
        pivot=pivot,
        map=VectorialBooleanFunction(F.n - 1, F.m, tuple(table)),
    )


def apn_via_restricted_derivatives(F: VectorialBooleanFunction) -> bool:
    """APN iff every restricted derivative is injective (the route that
    avoids difference-distribution counting entirely)."""
    for a in range(1, F.size):
        rd = restricted_derivative(F, a)
        if image_size(rd.map) != rd.map.size:
            return False
    return True


def check_cubic_apn_corollary(F: VectorialBooleanFunction) -> StatementVerdict:
    """For cubic APN F on F2^n, every restricted derivative has
    |B| >= 2^(n-1) - 1 (n odd, equality iff unbalanced components bent) or
    |B| >= 3*2^(n-2) - 1 (n even, equality iff unbalanced semi-bent).
    """
    sid = "corollary6.1"
    if F.n != F.m:
        return build_verdict(F, sid, False, True, "requires a square map")
    if F.n < 3:
        return build_verdict(F, sid, False, True, "requires n >= 3")
    deg = algebraic_degree(F)
    if deg != 3:
        return build_verdict(F, sid, False, True, f"requires a cubic map, degree is {deg}")
    if not is_apn(F):
        return build_verdict(F, sid, False, True, "requires an APN map")

    if F.n % 2:
        floor = (1 << (F.n - 1)) - 1
        shape = "bent"
    else:
        floor = 3 * (1 << (F.n - 2)) - 1
        shape = "semi-bent"
    worst = None
    for a in range(1, F.size):
        rd = restricted_derivative(F, a)
        comps = component_analyses(rd.map)
        balanced = sum(1 for c in comps if "balanced" in c.tags)
        unbalanced = [c for c in comps if c.lam != 0 and "balanced" not in c.tags]
        structured = all(shape in c.tags for c in unbalanced)
        ok = balanced >= floor and (balanced == floor) == structured
        if worst is None or balanced < worst:
            worst = balanced
        if not ok:
            detail = (
                f"direction {a}: balanced={balanced} floor={floor} "
                f"unbalanced_all_{shape}={structured}"
            )
            return build_verdict(F, sid, True, False, detail, balanced, floor)
    detail = f"all {F.size - 1} directions pass; min balanced={worst} floor={floor}"
    return build_verdict(F, sid, True, True, detail, worst, floor)


def restriction_reports(F: VectorialBooleanFunction) -> list:
    """Per-direction summary rows for the CLI: embedding flag, |B|, degree."""
    rows = []
    for a in range(1, F.size):
        rd = restricted_derivative(F, a)
        comps = component_analyses(rd.map)
        rows.append(
            {
                "direction": a,
                "pivot": rd.pivot,
                "is_embedding": image_size(rd.map) == rd.map.size,
                "balanced_count": sum(1 for c in comps if "balanced" in c.tags),
                "constant_count": sum(1 for c in comps if "constant" in c.tags),
                "degree": algebraic_degree(rd.map),
            }
        )
    return rows
