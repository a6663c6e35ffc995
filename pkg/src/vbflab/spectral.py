"""Walsh spectra, derivatives, linear structures, partial bentness.

Sign convention: walsh(f, a) = sum over x of (-1)^(f(x) + a.x), so the
coefficient at a = 0 equals 2^n - 2*wt(f).
"""

from dataclasses import dataclass

from .boolean_core import BooleanFunction, degree
from .gf2 import basis_of, dot, is_subspace, span

ORACLE_MAX_VARS = 6


class InternalCheckError(AssertionError):
    """A self-consistency identity failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class WalshSpectrum:
    """All 2^n Walsh coefficients of an n-variable function."""

    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != 1 << self.n:
            raise ValueError(
                f"spectrum length {len(self.values)} does not match 2^{self.n}"
            )
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def max_abs(self) -> int:
        return max(abs(v) for v in self.values)


@dataclass(frozen=True)
class LinearStructureSpace:
    """Span of the directions whose derivative of f is constant."""

    n: int
    basis: tuple

    def __post_init__(self):
        vecs = tuple(sorted(basis_of(self.basis)))
        if len(vecs) != len(self.basis):
            raise ValueError("basis vectors must be linearly independent")
        if any(not 0 < v < 1 << self.n for v in vecs):
            raise ValueError("basis vectors must be nonzero n-bit values")
        object.__setattr__(self, "basis", vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vectors(self) -> tuple:
        """The full space, ascending, 0 included."""
        return tuple(span(self.basis))


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """Full spectrum by the in-place butterfly, O(n * 2^n)."""
    vals = [1 - 2 * bit for bit in f.table]
    size = len(vals)
    step = 1
    while step < size:
        for start in range(0, size, step << 1):
            for j in range(start, start + step):
                u = vals[j]
                v = vals[j + step]
                vals[j] = u + v
                vals[j + step] = u - v
        step <<= 1
    return WalshSpectrum(f.n, tuple(vals))


def walsh_coefficient(f: BooleanFunction, a: int) -> int:
    """Single coefficient by direct summation (independent of the butterfly)."""
    return sum(1 - 2 * (f.table[x] ^ dot(a, x)) for x in range(f.size))


def fourier_coefficient(f: BooleanFunction) -> int:
    """The coefficient at a = 0, i.e. 2^n - 2*wt(f)."""
    return f.size - 2 * sum(f.table)


def is_balanced(f: BooleanFunction) -> bool:
    return sum(f.table) * 2 == f.size


def nonlinearity(f: BooleanFunction) -> int:
    return (f.size - walsh_transform(f).max_abs) // 2


def is_bent(f: BooleanFunction) -> bool:
    """Nonlinearity 2^(n-1) - 2^(n/2-1); false (not an error) for odd n.

    By Parseval this forces the whole spectrum flat at 2^(n/2).
    """
    if f.n % 2:
        return False
    return walsh_transform(f).max_abs == 1 << (f.n // 2)


def is_semi_bent(f: BooleanFunction) -> bool:
    """Nonlinearity 2^(n-1) - 2^((n-1)/2); false (not an error) for even n."""
    if f.n % 2 == 0:
        return False
    return walsh_transform(f).max_abs == 1 << ((f.n + 1) // 2)


def derivative(f: BooleanFunction, a: int) -> BooleanFunction:
    """x -> f(x + a) + f(x)."""
    if not 0 <= a < f.size:
        raise ValueError(f"direction {a} outside [0, {f.size})")
    return BooleanFunction(f.n, tuple(f.table[x ^ a] ^ f.table[x] for x in range(f.size)))


def derivative_weight(f: BooleanFunction, a: int) -> int:
    if not 0 <= a < f.size:
        raise ValueError(f"direction {a} outside [0, {f.size})")
    return sum(f.table[x ^ a] ^ f.table[x] for x in range(f.size))


def derivative_weight_sum(f: BooleanFunction) -> int:
    """Sum of wt(D_a f) over all a, cross-checked against the spectrum.

    The sum must equal 2^(2n-1) - fourier^2/2; a mismatch means the
    implementation is broken, so it raises rather than returning.
    """
    total = sum(derivative_weight(f, a) for a in range(f.size))
    expected = (1 << (2 * f.n - 1)) - fourier_coefficient(f) ** 2 // 2
    if total != expected:
        raise InternalCheckError(
            f"derivative weight sum {total} != {expected} from the spectrum"
        )
    return total


def scalar_fourier_identity_check(f: BooleanFunction) -> bool:
    """fourier^2 (from the butterfly) vs the sum of fourier(D_a f) over all a.

    The two sides are computed by unrelated code paths on purpose.
    """
    lhs = walsh_transform(f).values[0] ** 2
    rhs = sum(fourier_coefficient(derivative(f, a)) for a in range(f.size))
    return lhs == rhs


def linear_structures(f: BooleanFunction) -> LinearStructureSpace:
    """Basis of the constant-derivative directions, by Gaussian elimination."""
    vecs = []
    for a in range(f.size):
        w = derivative_weight(f, a)
        if w == 0 or w == f.size:
            vecs.append(a)
    if not is_subspace(vecs):
        raise InternalCheckError("constant-derivative directions not xor-closed")
    return LinearStructureSpace(f.n, tuple(basis_of(vecs)))


def is_partially_bent(f: BooleanFunction) -> bool:
    """Every nonzero derivative balanced or constant."""
    half = f.size // 2
    for a in range(1, f.size):
        w = derivative_weight(f, a)
        if w != half and w != 0 and w != f.size:
            return False
    return True


def restrict_to_span(f: BooleanFunction, basis: tuple) -> BooleanFunction:
    """Restriction of f to the span of an independent family, in basis coords."""
    k = len(basis)
    if k == 0:
        raise ValueError("cannot restrict to an empty basis")
    table = []
    for y in range(1 << k):
        point = 0
        for i in range(k):
            if (y >> i) & 1:
                point ^= basis[i]
        table.append(f.table[point])
    return BooleanFunction(k, tuple(table))


def partially_bent_oracle(f: BooleanFunction) -> bool:
    """Decomposition route, independent of the derivative characterization.

    With E the structure space and E' the canonical complement (standard
    basis vectors at E's non-pivot coordinates), checks the definition
    directly: f is affine on E, f(e + e') splits as f(e) + f(e') + f(0)
    across the decomposition, and f restricted to E' is bent. Refuses n
    above ORACLE_MAX_VARS; the subspace walk is exponential.
    """
    if f.n > ORACLE_MAX_VARS:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_VARS}, got {f.n}")
    space = linear_structures(f)
    inside = space.vectors
    pivots = {b.bit_length() - 1 for b in space.basis}
    free = [1 << i for i in range(f.n) if i not in pivots]

    for e1 in inside:
        for e2 in inside:
            affine_ok = (
                f.table[e1 ^ e2] ^ f.table[0]
                == (f.table[e1] ^ f.table[0]) ^ (f.table[e2] ^ f.table[0])
            )
            if not affine_ok:
                return False
    outside = span(free)
    for e in inside:
        for ep in outside:
            if f.table[e ^ ep] != f.table[e] ^ f.table[ep] ^ f.table[0]:
                return False

    if len(free) % 2:
        return False
    if not free:
        return True
    return is_bent(restrict_to_span(f, tuple(free)))


def classification_tags(f: BooleanFunction) -> tuple:
    """Every applicable tag, in the fixed listing order.

    `partially-bent-other` marks partially bent functions not already
    covered by the constant/bent/semi-bent tags; `general` marks
    everything that is not partially bent at all.
    """
    tags = []
    constant = all(b == f.table[0] for b in f.table)
    if constant:
        tags.append("constant")
    if is_balanced(f):
        tags.append("balanced")
    bent = is_bent(f)
    if bent:
        tags.append("bent")
    semi = is_semi_bent(f)
    if semi:
        tags.append("semi-bent")
    if is_partially_bent(f):
        if not constant and not bent and not semi:
            tags.append("partially-bent-other")
    else:
        tags.append("general")
    return tuple(tags)
