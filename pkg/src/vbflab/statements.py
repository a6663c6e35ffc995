"""Checkable statements about a vectorial map, as uniform verdict records.

Statement ids follow the numbering of the source results they encode; each
checker states the claim it tests in its docstring. A verdict with
applicable=False means the preconditions were not met (not a failure); a
verdict with applicable=True and holds=False is a counterexample and should
be treated as a falsification by callers.
"""

from dataclasses import dataclass

from .spectral import derivative_weight
from .vectorial import (
    VectorialBooleanFunction,
    component,
    component_analyses,
    derivative_weight_total,
    image_is_affine_subspace,
    image_size,
)


class FalsificationError(Exception):
    """A checked statement failed on valid input; carries the witness dict.

    This is raised only where a failure cannot be returned as a verdict,
    e.g. mid-search; it means either the source result or this code is wrong.
    """

    def __init__(self, witness: dict):
        super().__init__(witness.get("detail", "statement falsified"))
        self.witness = witness


@dataclass(frozen=True)
class StatementVerdict:
    statement: str
    applicable: bool
    holds: bool
    detail: str = ""
    lhs: int = None
    rhs: int = None
    witness: dict = None


def _witness(F: VectorialBooleanFunction, statement: str, lhs, rhs, detail) -> dict:
    return {
        "statement": statement,
        "n": F.n,
        "m": F.m,
        "table": list(F.table),
        "lhs": lhs,
        "rhs": rhs,
        "detail": detail,
    }


def build_verdict(F, statement, applicable, holds, detail="", lhs=None, rhs=None):
    witness = None
    if applicable and not holds:
        witness = _witness(F, statement, lhs, rhs, detail)
    return StatementVerdict(
        statement=statement,
        applicable=applicable,
        holds=holds,
        detail=detail,
        lhs=lhs,
        rhs=rhs,
        witness=witness,
    )


def _comps(F, comps):
    return comps if comps is not None else component_analyses(F)


def _is_embedding(comps, F):
    return image_size(F) == F.size


def _balanced(comps):
    return [c for c in comps if "balanced" in c.tags]


def _constant(comps):
    return [c for c in comps if "constant" in c.tags]


def check_theorem_4_2(F, comps=None) -> StatementVerdict:
    """sum of fourier^2 over components >= 2^(n+m), equality iff injective."""
    comps = _comps(F, comps)
    lhs = sum(c.fourier**2 for c in comps)
    rhs = 1 << (F.n + F.m)
    emb = _is_embedding(comps, F)
    holds = lhs >= rhs and (lhs == rhs) == emb
    detail = f"sum_sq={lhs} floor={rhs} embedding={emb}"
    return build_verdict(F, "theorem4.2", True, holds, detail, lhs, rhs)


def check_corollary_4_3(F, comps=None) -> StatementVerdict:
    """Sum of fourier(D_a F_lambda) over all a, lambda >= 2^(n+m), equality iff injective.

    The double sum is evaluated directly from derivative weights, not from
    the component spectra, so this is an independent route to the same floor.
    """
    comps = _comps(F, comps)
    size = F.size
    lhs = 0
    for lam in range(F.lambda_count):
        comp = component(F, lam)
        for a in range(size):
            lhs += size - 2 * derivative_weight(comp, a)
    rhs = 1 << (F.n + F.m)
    emb = _is_embedding(comps, F)
    holds = lhs >= rhs and (lhs == rhs) == emb
    detail = f"derivative_fourier_sum={lhs} floor={rhs} embedding={emb}"
    return build_verdict(F, "corollary4.3", True, holds, detail, lhs, rhs)


def check_corollary_5_1(F, comps=None) -> StatementVerdict:
    """For m >= n: total derivative weight <= 2^(2n-1)(2^m - 2^(m-n)), equality iff injective."""
    if F.m < F.n:
        return build_verdict(F, "corollary5.1", False, True, "requires m >= n")
    comps = _comps(F, comps)
    lhs = derivative_weight_total(F)
    rhs = (1 << (2 * F.n - 1)) * ((1 << F.m) - (1 << (F.m - F.n)))
    emb = _is_embedding(comps, F)
    holds = lhs <= rhs and (lhs == rhs) == emb
    detail = f"weight_total={lhs} cap={rhs} embedding={emb}"
    return build_verdict(F, "corollary5.1", True, holds, detail, lhs, rhs)


def check_corollary_5_2(F, comps=None) -> StatementVerdict:
    """For m >= n: |B(F)| <= 2^m - 2^(m-n); at the cap F is injective and the rest constant."""
    if F.m < F.n:
        return build_verdict(F, "corollary5.2", False, True, "requires m >= n")
    comps = _comps(F, comps)
    lhs = len(_balanced(comps))
    rhs = (1 << F.m) - (1 << (F.m - F.n))
    holds = lhs <= rhs
    detail = f"balanced={lhs} cap={rhs}"
    if holds and lhs == rhs:
        emb = _is_embedding(comps, F)
        rest_constant = all(
            "constant" in c.tags for c in comps if "balanced" not in c.tags
        )
        holds = emb and rest_constant
        detail += f" at-cap embedding={emb} rest_constant={rest_constant}"
    return build_verdict(F, "corollary5.2", True, holds, detail, lhs, rhs)


def check_lemma_5_4(F, comps=None) -> StatementVerdict:
    """For m >= n: |Im(F)| <= 2^(m-h) where h = dim C(F)."""
    if F.m < F.n:
        return build_verdict(F, "lemma5.4", False, True, "requires m >= n")
    comps = _comps(F, comps)
    const = len(_constant(comps))
    h = const.bit_length() - 1
    lhs = image_size(F)
    rhs = 1 << (F.m - h)
    holds = (1 << h) == const and lhs <= rhs
    detail = f"image={lhs} cap={rhs} h={h}"
    return build_verdict(F, "lemma5.4", True, holds, detail, lhs, rhs)


def check_corollary_5_5(F, comps=None) -> StatementVerdict:
    """Injective, m >= n: |C(F)| <= 2^(m-n); at the cap every other component is balanced."""
    comps = _comps(F, comps)
    if F.m < F.n or not _is_embedding(comps, F):
        return build_verdict(F, "corollary5.5", False, True, "requires an embedding with m >= n")
    lhs = len(_constant(comps))
    rhs = 1 << (F.m - F.n)
    holds = lhs <= rhs
    detail = f"constant={lhs} cap={rhs}"
    if holds and lhs == rhs:
        rest_balanced = all(
            "balanced" in c.tags for c in comps if "constant" not in c.tags
        )
        holds = rest_balanced
        detail += f" at-cap rest_balanced={rest_balanced}"
    return build_verdict(F, "corollary5.5", True, holds, detail, lhs, rhs)


def check_theorem_5_8(F, comps=None) -> StatementVerdict:
    """Partially-bent embedding, m > n: parity-split floor on |B(F)|.

    n even: |B| >= 2^n - 1, equality iff every unbalanced nontrivial
    component is bent. n odd: |B| >= 2^(m-1) + 2^(n-1) - 1, equality iff
    every unbalanced nontrivial component is semi-bent.
    """
    comps = _comps(F, comps)
    if F.m < F.n + 1:
        return build_verdict(F, "theorem5.8", False, True, "requires m >= n+1")
    if not _is_embedding(comps, F):
        return build_verdict(F, "theorem5.8", False, True, "requires an embedding")
    if any("general" in c.tags for c in comps):
        return build_verdict(
            F, "theorem5.8", False, True, "requires every component partially bent"
        )
    lhs = len(_balanced(comps))
    unbalanced = [c for c in comps if c.lam != 0 and "balanced" not in c.tags]
    if F.n % 2 == 0:
        rhs = (1 << F.n) - 1
        structured = all("bent" in c.tags for c in unbalanced)
        shape = "bent"
    else:
        rhs = (1 << (F.m - 1)) + (1 << (F.n - 1)) - 1
        structured = all("semi-bent" in c.tags for c in unbalanced)
        shape = "semi-bent"
    holds = lhs >= rhs and (lhs == rhs) == structured
    detail = f"balanced={lhs} floor={rhs} unbalanced_all_{shape}={structured}"
    return build_verdict(F, "theorem5.8", True, holds, detail, lhs, rhs)


def check_proposition_5_9(F, comps=None) -> StatementVerdict:
    """Injective into m = n+1: either no nontrivial constant, or exactly one
    and every component outside C(F) balanced."""
    comps = _comps(F, comps)
    if F.m != F.n + 1 or not _is_embedding(comps, F):
        return build_verdict(
            F, "proposition5.9", False, True, "requires an embedding with m = n+1"
        )
    const = _constant(comps)
    lhs = len(const)
    if lhs == 1:
        holds = True
        detail = "no nontrivial constant component"
    elif lhs == 2:
        holds = all(
            "balanced" in c.tags for c in comps if "constant" not in c.tags
        )
        detail = f"one nontrivial constant, rest_balanced={holds}"
    else:
        holds = False
        detail = f"|C(F)|={lhs} outside {{1, 2}}"
    return build_verdict(F, "proposition5.9", True, holds, detail, lhs, 2)


def check_theorem_5_10(F, comps=None) -> StatementVerdict:
    """Injective with affine image: every component balanced or constant,
    with exactly 2^m - 2^(m-n) balanced and 2^(m-n) constant."""
    comps = _comps(F, comps)
    if F.m < F.n or not _is_embedding(comps, F):
        return build_verdict(
            F, "theorem5.10", False, True, "requires an embedding with m >= n"
        )
    if not image_is_affine_subspace(F):
        return build_verdict(F, "theorem5.10", False, True, "image is not affine")
    split = all(
        "balanced" in c.tags or "constant" in c.tags for c in comps
    )
    lhs = len(_balanced(comps))
    rhs = (1 << F.m) - (1 << (F.m - F.n))
    const_ok = len(_constant(comps)) == 1 << (F.m - F.n)
    holds = split and lhs == rhs and const_ok
    detail = (
        f"balanced={lhs} expected={rhs} "
        f"constant={len(_constant(comps))} split={split}"
    )
    return build_verdict(F, "theorem5.10", True, holds, detail, lhs, rhs)


CHECKERS = {
    "theorem4.2": check_theorem_4_2,
    "corollary4.3": check_corollary_4_3,
    "corollary5.1": check_corollary_5_1,
    "corollary5.2": check_corollary_5_2,
    "lemma5.4": check_lemma_5_4,
    "corollary5.5": check_corollary_5_5,
    "theorem5.8": check_theorem_5_8,
    "proposition5.9": check_proposition_5_9,
    "theorem5.10": check_theorem_5_10,
}


def check_statement(
    F: VectorialBooleanFunction, statement: str, comps=None
) -> StatementVerdict:
    """Run one named checker; unknown ids raise ValueError."""
    try:
        checker = CHECKERS[statement]
    except KeyError:
        raise ValueError(
            f"unknown statement {statement!r}; known: {', '.join(sorted(CHECKERS))}"
        )
    return checker(F, comps)


def check_all_statements(F: VectorialBooleanFunction, comps=None) -> tuple:
    """Every registered checker, in registry order."""
    comps = _comps(F, comps)
    return tuple(checker(F, comps) for checker in CHECKERS.values())
