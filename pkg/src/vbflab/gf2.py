"""Small helpers for F2 vectors encoded as Python ints (bit i = coordinate i+1)."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def dot(a: int, b: int) -> int:
    """Inner product a.b over F2."""
    return parity(a & b)


def bits_to_int(bits) -> int:
    """Pack (v1, ..., vk) with v1 in the least significant bit."""
    value = 0
    for i, bit in enumerate(bits):
        if bit:
            value |= 1 << i
    return value


def int_to_bits(value: int, width: int) -> tuple:
    """Unpack to (v1, ..., v_width), v1 taken from the least significant bit."""
    return tuple((value >> i) & 1 for i in range(width))


def insert_into_basis(pivots: dict, v: int) -> bool:
    """Reduce v against a pivot->row echelon dict; insert if independent.

    Returns True when v extended the span. `pivots` maps the index of a
    row's leading bit to the row.
    """
    while v:
        hi = v.bit_length() - 1
        if hi not in pivots:
            pivots[hi] = v
            return True
        v ^= pivots[hi]
    return False


def basis_of(vectors) -> list:
    """Echelon basis (sorted ascending) of the span of `vectors`."""
    pivots: dict = {}
    for v in vectors:
        insert_into_basis(pivots, v)
    return sorted(pivots.values())


def rank(vectors) -> int:
    return len(basis_of(vectors))


def span(basis) -> list:
    """All 2^k combinations of the basis rows, sorted ascending."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return sorted(out)


def is_subspace(vectors) -> bool:
    """True iff the given set of vectors is closed under xor (and contains 0)."""
    vs = set(vectors)
    return 0 in vs and len(vs) == 1 << rank(vs)
