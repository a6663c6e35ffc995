"""Seeded randomized search for low-degree embeddings F2^n -> F2^m.

Candidate i is generated from substream(seed, i), so the stream is
reproducible no matter how candidates are partitioned across workers.
Hits are classified against the balanced-component floor for the parity
of n and the 2^m - 2^(m-n) cap.
"""

from dataclasses import dataclass
from itertools import combinations

from .gf2 import insert_into_basis
from .rng import SplitMix64, substream
from .spectral import InternalCheckError
from .statements import FalsificationError
from .vectorial import (
    Affinity,
    AnalysisReport,
    VectorialBooleanFunction,
    analyze,
    balanced_set,
    image_size,
)

TARGETS = ("any-embedding", "meets-lower-bound", "meets-upper-bound")


@dataclass(frozen=True)
class SearchConfig:
    n: int
    m: int
    budget: int
    seed: int
    degree_cap: int = 2
    target: str = "meets-lower-bound"
    max_hits: int = 0  # stop after this many hits; 0 = no cap

    def __post_init__(self):
        if self.m <= self.n:
            raise ValueError(
                f"search needs m > n (permutations are out of scope), got "
                f"n={self.n}, m={self.m}"
            )
        if self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")
        if self.target not in TARGETS:
            raise ValueError(
                f"target must be one of {', '.join(TARGETS)}, got {self.target!r}"
            )
        if not 1 <= self.degree_cap <= self.n:
            raise ValueError(f"degree cap must be in [1, n], got {self.degree_cap}")
        if self.max_hits < 0:
            raise ValueError(f"max_hits must be >= 0, got {self.max_hits}")


@dataclass(frozen=True)
class SearchHit:
    candidate: int  # candidate index; -1 marks the constructive witness
    function: VectorialBooleanFunction
    report: AnalysisReport
    lower_bound_equality: bool
    upper_bound_equality: bool

    def __post_init__(self):
        if not self.report.is_embedding:
            raise InternalCheckError("search hit is not an embedding")


def lower_bound(n: int, m: int) -> int:
    """Balanced-component floor for partially-bent embeddings, by parity of n."""
    if n % 2 == 0:
        return (1 << n) - 1
    return (1 << (m - 1)) + (1 << (n - 1)) - 1


def upper_bound(n: int, m: int) -> int:
    """Balanced-component cap for any map with m >= n."""
    return (1 << m) - (1 << (m - n))


def monomial_masks(n: int, degree_cap: int) -> tuple:
    """Support masks of all monomials with 1 <= degree <= cap, canonical order."""
    masks = []
    for d in range(1, degree_cap + 1):
        for combo in combinations(range(n), d):
            mask = 0
            for i in combo:
                mask |= 1 << i
            masks.append(mask)
    return tuple(masks)


def random_quadratic_vbf(
    n: int, m: int, rng: SplitMix64, degree_cap: int = 2
) -> VectorialBooleanFunction:
    """Uniform coefficients over monomials of degree <= cap, no constant term.

    Coefficients are drawn one bit at a time, coordinate by coordinate, in
    the canonical monomial order, so the table is a pure function of the
    generator state.
    """
    masks = monomial_masks(n, degree_cap)
    size = 1 << n
    table = [0] * size
    for bit in range(m):
        chosen = [mask for mask in masks if rng.bits(1)]
        for x in range(size):
            v = 0
            for mask in chosen:
                if x & mask == mask:
                    v ^= 1
            if v:
                table[x] |= 1 << bit
    return VectorialBooleanFunction(n, m, tuple(table))


def random_affinity(dim: int, rng: SplitMix64) -> Affinity:
    """Invertible matrix built row by row with rejection, plus a translation."""
    pivots: dict = {}
    rows = []
    while len(rows) < dim:
        row = rng.bits(dim)
        if insert_into_basis(pivots, row):
            rows.append(row)
    return Affinity(dim, tuple(rows), rng.bits(dim))


def affine_image_embedding(n: int, psi: Affinity) -> VectorialBooleanFunction:
    """F(x) = psi(x || 0...0); injective, with an affine image by construction."""
    if psi.dim < n:
        raise ValueError(f"affinity dimension {psi.dim} must be >= n={n}")
    return VectorialBooleanFunction(
        n, psi.dim, tuple(psi.apply(x) for x in range(1 << n))
    )


def _bound_guard(F, bal, lo, partially_bent_known):
    """A partially-bent embedding below the floor would be a counterexample."""
    if partially_bent_known and bal < lo:
        raise FalsificationError(
            {
                "statement": "theorem5.8",
                "n": F.n,
                "m": F.m,
                "table": list(F.table),
                "lhs": bal,
                "rhs": lo,
                "detail": "partially-bent embedding below the balanced floor",
            }
        )


def _hit(index, F, lo, hi) -> SearchHit:
    report = analyze(F)
    for v in report.theorem_verdicts:
        if v.applicable and not v.holds:
            raise FalsificationError(v.witness)
    return SearchHit(
        candidate=index,
        function=F,
        report=report,
        lower_bound_equality=report.balanced_count == lo,
        upper_bound_equality=report.balanced_count == hi,
    )


def search(config: SearchConfig) -> list:
    """Deterministic scan of the candidate stream; returns hits in order.

    For the cap target a constructive affine-image witness (drawn from a
    reserved substream) is emitted first; it attains the cap by design.
    Raises FalsificationError if any examined embedding violates the floor
    or any hit fails a verdict, since that would be a counterexample.
    """
    lo = lower_bound(config.n, config.m)
    hi = upper_bound(config.n, config.m)
    cap = config.max_hits if config.max_hits else None
    hits = []

    if config.target == "meets-upper-bound":
        psi = random_affinity(config.m, substream(config.seed, config.budget))
        F = affine_image_embedding(config.n, psi)
        hits.append(_hit(-1, F, lo, hi))

    for index in range(config.budget):
        if cap is not None and len(hits) >= cap:
            break
        rng = substream(config.seed, index)
        F = random_quadratic_vbf(config.n, config.m, rng, config.degree_cap)
        if image_size(F) != F.size:
            continue
        bal = len(balanced_set(F))
        _bound_guard(F, bal, lo, config.degree_cap <= 2)
        if config.target == "any-embedding":
            matched = True
        elif config.target == "meets-lower-bound":
            matched = bal == lo
        else:
            matched = bal == hi
        if matched:
            hits.append(_hit(index, F, lo, hi))
    return hits
