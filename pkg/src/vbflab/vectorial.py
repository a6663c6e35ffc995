"""Vectorial maps F: F2^n -> F2^m, their components, images and reports.

A map is stored as 2^n packed outputs, coordinate f_i in bit i-1, the same
little-endian convention used for inputs. The component at lambda is the
Boolean function x -> lambda . F(x).
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .boolean_core import BooleanFunction, MAX_VARS, degree
from .gf2 import basis_of, int_to_bits, parity, rank
from .spectral import InternalCheckError, classification_tags

MAX_OUT_BITS = 32


@dataclass(frozen=True)
class VectorialBooleanFunction:
    """table[x] = F(x) for x in [0, 2^n), packed into m bits."""

    n: int
    m: int
    table: tuple

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"input dimension must be in [1, {MAX_VARS}], got {self.n}")
        if not 1 <= self.m <= MAX_OUT_BITS:
            raise ValueError(
                f"output dimension must be in [1, {MAX_OUT_BITS}], got {self.m}"
            )
        if len(self.table) != 1 << self.n:
            raise ValueError(
                f"table length {len(self.table)} does not match 2^{self.n}"
            )
        bound = 1 << self.m
        for x, v in enumerate(self.table):
            if not 0 <= v < bound:
                raise ValueError(f"entry {v} at index {x} outside [0, 2^{self.m})")
        object.__setattr__(self, "table", tuple(self.table))

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def lambda_count(self) -> int:
        return 1 << self.m


def from_coordinates(coords) -> VectorialBooleanFunction:
    """Assemble F from its coordinate functions f_1..f_m (f_i in bit i-1)."""
    coords = list(coords)
    if not coords:
        raise ValueError("at least one coordinate function required")
    n = coords[0].n
    if any(c.n != n for c in coords):
        raise ValueError("coordinate functions must share the variable count")
    table = []
    for x in range(1 << n):
        table.append(sum(c.table[x] << i for i, c in enumerate(coords)))
    return VectorialBooleanFunction(n, len(coords), tuple(table))


def coordinate(F: VectorialBooleanFunction, i: int) -> BooleanFunction:
    """The i-th coordinate f_i, 1-based."""
    if not 1 <= i <= F.m:
        raise ValueError(f"coordinate index {i} outside 1..{F.m}")
    return BooleanFunction(F.n, tuple((v >> (i - 1)) & 1 for v in F.table))


def component(F: VectorialBooleanFunction, lam: int) -> BooleanFunction:
    """x -> lam . F(x); lam = 0 gives the trivial constant-zero component."""
    if not 0 <= lam < F.lambda_count:
        raise ValueError(f"lambda {lam} outside [0, 2^{F.m})")
    return BooleanFunction(F.n, tuple(parity(lam & v) for v in F.table))


def component_weights(F: VectorialBooleanFunction) -> list:
    """wt(F_lambda) for every lambda, via a popcount-parity table."""
    parities = [0] * F.lambda_count
    for v in range(1, F.lambda_count):
        parities[v] = parities[v >> 1] ^ (v & 1)
    return [sum(parities[lam & v] for v in F.table) for lam in range(F.lambda_count)]


def image_size(F: VectorialBooleanFunction) -> int:
    return len(set(F.table))


def is_embedding(F: VectorialBooleanFunction) -> bool:
    """Injectivity, decided by counting distinct outputs."""
    return image_size(F) == F.size


def collision_count(F: VectorialBooleanFunction, a: int) -> int:
    """|{x : F(x) = F(x+a)}|; even, since colliding x pair up with x+a."""
    if not 0 < a < F.size:
        raise ValueError(f"direction must be a nonzero n-bit vector, got {a}")
    return sum(1 for x in range(F.size) if F.table[x] == F.table[x ^ a])


def sum_sq_fourier(F: VectorialBooleanFunction) -> int:
    """Sum over all lambda of fourier(F_lambda)^2; 2^(n+m) exactly on embeddings."""
    return sum((F.size - 2 * w) ** 2 for w in component_weights(F))


def is_embedding_via_fourier(F: VectorialBooleanFunction) -> bool:
    """Injectivity read off the component spectra instead of the image."""
    return sum_sq_fourier(F) == 1 << (F.n + F.m)


def preimage_identity_check(F: VectorialBooleanFunction) -> bool:
    """Compare sum_sq_fourier with 2^m * sum of squared preimage sizes."""
    hist: dict = {}
    for v in F.table:
        hist[v] = hist.get(v, 0) + 1
    rhs = (1 << F.m) * sum(c * c for c in hist.values())
    return sum_sq_fourier(F) == rhs


def derivative_weight_total(F: VectorialBooleanFunction) -> int:
    """Sum of wt(D_a F_lambda) over every direction and every lambda != 0."""
    if F.m < F.n:
        raise ValueError(f"requires m >= n, got n={F.n}, m={F.m}")
    parities = [0] * F.lambda_count
    for v in range(1, F.lambda_count):
        parities[v] = parities[v >> 1] ^ (v & 1)
    size = F.size
    table = F.table
    total = 0
    for lam in range(1, F.lambda_count):
        comp = [parities[lam & v] for v in table]
        for a in range(1, size):
            total += sum(comp[x ^ a] ^ comp[x] for x in range(size))
    return total


def balanced_set(F: VectorialBooleanFunction) -> frozenset:
    """B(F): the lambdas whose component is balanced; never contains 0."""
    half = F.size // 2
    return frozenset(
        lam for lam, w in enumerate(component_weights(F)) if w == half
    )


def constant_set(F: VectorialBooleanFunction) -> frozenset:
    """C(F): the lambdas whose component is constant; always contains 0."""
    out = frozenset(
        lam
        for lam, w in enumerate(component_weights(F))
        if w == 0 or w == F.size
    )
    if len(out) != 1 << rank(out):
        raise InternalCheckError("constant components do not form a subspace")
    return out


def image_is_affine_subspace(F: VectorialBooleanFunction) -> bool:
    """True iff Im(F) is a coset of a subspace (span-size comparison)."""
    img = set(F.table)
    origin = F.table[0]
    b = basis_of(v ^ origin for v in img)
    return (1 << len(b)) == len(img)


@dataclass(frozen=True)
class Affinity:
    """x -> xM + t with an invertible matrix M, row-vector convention.

    rows[i] is the i-th row of M as a packed vector, so applying the map
    xors together the rows selected by the bits of x.
    """

    dim: int
    rows: tuple
    translation: int = 0

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_VARS:
            raise ValueError(f"dimension must be in [1, {MAX_VARS}], got {self.dim}")
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")
        bound = 1 << self.dim
        if any(not 0 <= r < bound for r in self.rows):
            raise ValueError("rows must be dim-bit vectors")
        if not 0 <= self.translation < bound:
            raise ValueError("translation must be a dim-bit vector")
        if rank(self.rows) != self.dim:
            raise ValueError("matrix is singular")
        object.__setattr__(self, "rows", tuple(self.rows))

    def apply(self, x: int) -> int:
        out = self.translation
        for i in range(self.dim):
            if (x >> i) & 1:
                out ^= self.rows[i]
        return out

    @classmethod
    def identity(cls, dim: int) -> "Affinity":
        return cls(dim, tuple(1 << i for i in range(dim)), 0)


def apply_affinities(
    F: VectorialBooleanFunction, psi_out: Affinity, psi_in: Affinity
) -> VectorialBooleanFunction:
    """F'(x) = psi_out(F(psi_in(x))); preserves |B|, |C| and injectivity."""
    if psi_in.dim != F.n:
        raise ValueError(f"inner affinity dimension {psi_in.dim} != n={F.n}")
    if psi_out.dim != F.m:
        raise ValueError(f"outer affinity dimension {psi_out.dim} != m={F.m}")
    table = tuple(psi_out.apply(F.table[psi_in.apply(x)]) for x in range(F.size))
    return VectorialBooleanFunction(F.n, F.m, table)


@dataclass(frozen=True)
class ComponentAnalysis:
    """Classification of one component F_lambda."""

    lam: int
    weight: int
    fourier: int
    degree: int
    tags: tuple


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyzer knows about one map."""

    n: int
    m: int
    components: tuple
    balanced_count: int
    constant_count: int
    image_size: int
    is_embedding: bool
    sum_sq_fourier: int
    image_affine: bool
    theorem_verdicts: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.balanced_count + self.constant_count > 1 << self.m:
            raise InternalCheckError("balanced and constant counts exceed 2^m")
        zero = self.components[0]
        if zero.lam != 0 or "constant" not in zero.tags:
            raise InternalCheckError("trivial component must be constant")
        if self.is_embedding != (self.image_size == 1 << self.n):
            raise InternalCheckError("embedding flag contradicts image size")

    @property
    def balanced_lambdas(self) -> tuple:
        return tuple(c.lam for c in self.components if "balanced" in c.tags)

    @property
    def constant_lambdas(self) -> tuple:
        return tuple(c.lam for c in self.components if "constant" in c.tags)


def _analyze_component(args) -> ComponentAnalysis:
    F, lam = args
    comp = component(F, lam)
    w = sum(comp.table)
    return ComponentAnalysis(
        lam=lam,
        weight=w,
        fourier=comp.size - 2 * w,
        degree=degree(comp),
        tags=classification_tags(comp),
    )


def thread_count() -> int:
    """Executor cap from VBF_THREADS; 0 or unset means single-threaded."""
    raw = os.environ.get("VBF_THREADS", "0")
    try:
        v = int(raw)
    except ValueError:
        raise ValueError(f"VBF_THREADS must be an integer, got {raw!r}")
    if v < 0:
        raise ValueError(f"VBF_THREADS must be >= 0, got {v}")
    if v == 0:
        return 1
    return v


def component_analyses(F: VectorialBooleanFunction, threads: int = 0) -> tuple:
    """Per-lambda analysis for every lambda, in lambda order.

    With threads > 1 the lambdas are farmed out to a thread pool; results
    are collected in submission order, so the output is identical either way.
    """
    work = [(F, lam) for lam in range(F.lambda_count)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return tuple(pool.map(_analyze_component, work))
    return tuple(_analyze_component(w) for w in work)


def analyze(
    F: VectorialBooleanFunction, with_verdicts: bool = True, threads: int = 0
) -> AnalysisReport:
    """Build the full report; verdicts cover every applicable statement."""
    comps = component_analyses(F, threads=threads)
    img = image_size(F)
    verdicts: tuple = ()
    if with_verdicts:
        from .statements import check_all_statements

        verdicts = check_all_statements(F, comps)
    return AnalysisReport(
        n=F.n,
        m=F.m,
        components=comps,
        balanced_count=sum(1 for c in comps if "balanced" in c.tags),
        constant_count=sum(1 for c in comps if "constant" in c.tags),
        image_size=img,
        is_embedding=img == F.size,
        sum_sq_fourier=sum(c.fourier**2 for c in comps),
        image_affine=image_is_affine_subspace(F),
        theorem_verdicts=verdicts,
    )


def lambda_bits(lam: int, m: int) -> list:
    """Render lambda in the coordinate order (lambda_1 first)."""
    return list(int_to_bits(lam, m))


def vbf_to_dict(F: VectorialBooleanFunction) -> dict:
    """The on-disk table form: {"n", "m", "table"}."""
    return {"n": F.n, "m": F.m, "table": list(F.table)}


def vbf_from_dict(data: dict) -> VectorialBooleanFunction:
    """Parse the table form; ANF-based files are handled by the CLI loader."""
    try:
        n = data["n"]
        m = data["m"]
        table = data["table"]
    except (KeyError, TypeError):
        raise ValueError('expected an object with "n", "m" and "table" entries')
    if not isinstance(n, int) or not isinstance(m, int):
        raise ValueError('"n" and "m" must be integers')
    if not isinstance(table, list) or any(not isinstance(v, int) for v in table):
        raise ValueError('"table" must be a list of integers')
    return VectorialBooleanFunction(n, m, tuple(table))


def report_to_dict(report: AnalysisReport) -> dict:
    """JSON-ready form; B(F)/C(F) listed in coordinate-lexicographic order."""
    bit_order = lambda lam: lambda_bits(lam, report.m)  # noqa: E731
    return {
        "n": report.n,
        "m": report.m,
        "balanced_count": report.balanced_count,
        "constant_count": report.constant_count,
        "image_size": report.image_size,
        "is_embedding": report.is_embedding,
        "image_affine": report.image_affine,
        "sum_sq_fourier": report.sum_sq_fourier,
        "balanced_set": sorted(
            (bit_order(lam) for lam in report.balanced_lambdas)
        ),
        "constant_set": sorted(
            (bit_order(lam) for lam in report.constant_lambdas)
        ),
        "components": [
            {
                "lambda": bit_order(c.lam),
                "weight": c.weight,
                "fourier": c.fourier,
                "degree": c.degree,
                "tags": list(c.tags),
            }
            for c in report.components
        ],
        "verdicts": [verdict_to_dict(v) for v in report.theorem_verdicts],
    }


def verdict_to_dict(v) -> dict:
    out = {
        "statement": v.statement,
        "applicable": v.applicable,
        "holds": v.holds,
        "detail": v.detail,
    }
    if v.lhs is not None:
        out["lhs"] = v.lhs
    if v.rhs is not None:
        out["rhs"] = v.rhs
    if v.witness is not None:
        out["witness"] = v.witness
    return out
