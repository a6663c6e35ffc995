"""Verification suites: exhaustive and seeded sampled checks of every
statement the library encodes, runnable from the CLI.

Each suite draws randomness only from a substream of the configured seed
keyed by its registry position, so a given (seed, max_n, max_m) triple
always produces the identical summary, pass counts and witnesses.
"""

from dataclasses import dataclass, field

from .apn import (
    algebraic_degree,
    apn_via_restricted_derivatives,
    check_cubic_apn_corollary,
    differential_uniformity,
    insert_zero_bit,
    is_apn,
    power_map_table,
    restricted_derivative,
)
from .boolean_core import BooleanFunction
from .gf2 import parity
from .rng import substream
from .search import affine_image_embedding, random_affinity, random_quadratic_vbf
from .spectral import (
    derivative,
    derivative_weight,
    derivative_weight_sum,
    fourier_coefficient,
    is_balanced,
    is_bent,
    is_partially_bent,
    linear_structures,
    scalar_fourier_identity_check,
    walsh_transform,
)
from .statements import (
    check_corollary_4_3,
    check_corollary_5_1,
    check_corollary_5_2,
    check_corollary_5_5,
    check_lemma_5_4,
    check_proposition_5_9,
    check_theorem_5_8,
    check_theorem_5_10,
)
from .vectorial import (
    VectorialBooleanFunction,
    collision_count,
    component_analyses,
    coordinate,
    image_size,
    is_embedding,
    preimage_identity_check,
    sum_sq_fourier,
    vbf_to_dict,
)

EXHAUSTIVE_CAP = 65536


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 3
    max_m: int = 4
    seed: int = 7

    def __post_init__(self):
        if not 1 <= self.max_n <= 4:
            raise ValueError(f"max_n must be in [1, 4], got {self.max_n}")
        if not 1 <= self.max_m <= 8:
            raise ValueError(f"max_m must be in [1, 8], got {self.max_m}")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    passed: int
    notes: tuple = field(default_factory=tuple)
    witnesses: tuple = field(default_factory=tuple)

    @property
    def failed(self) -> int:
        return self.checked - self.passed


class _Tally:
    """Mutable pass/fail accumulator a suite fills in before freezing."""

    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.passed = 0
        self.notes = []
        self.witnesses = []

    def record(self, ok: bool, witness: dict = None):
        self.checked += 1
        if ok:
            self.passed += 1
        elif witness is not None:
            self.witnesses.append(witness)

    def verdict(self, v):
        """Count an applicable verdict; inapplicable ones are skipped."""
        if v.applicable:
            self.record(v.holds, v.witness)

    def note(self, text: str):
        self.notes.append(text)

    def result(self) -> SuiteResult:
        return SuiteResult(
            self.name, self.checked, self.passed,
            tuple(self.notes), tuple(self.witnesses),
        )


def _scalar_witness(statement, f, detail) -> dict:
    return {"statement": statement, "n": f.n, "table": list(f.table), "detail": detail}


def _all_boolean(n: int):
    size = 1 << n
    for mask in range(1 << size):
        yield BooleanFunction(n, tuple((mask >> x) & 1 for x in range(size)))


def _random_vbf(n, m, rng) -> VectorialBooleanFunction:
    return VectorialBooleanFunction(
        n, m, tuple(rng.below(1 << m) for _ in range(1 << n))
    )


def _sample_dims(cfg) -> tuple:
    """(n, m) with m >= n drawn from the configured caps."""
    lo, hi = sorted((cfg.max_n, cfg.max_m))
    return lo, hi


def _suite_parseval(cfg, rng) -> SuiteResult:
    t = _Tally("parseval")
    n = cfg.max_n
    for f in _all_boolean(n):
        sp = walsh_transform(f)
        ok = (
            sum(v * v for v in sp.values) == 1 << (2 * n)
            and sp.max_abs <= 1 << n
            and all(v % 2 == 0 for v in sp.values)
        )
        t.record(ok, None if ok else _scalar_witness("parseval", f, "energy identity"))
    t.note(f"exhaustive over all {1 << (1 << n)} functions at n={n}")
    return t.result()


def _suite_remark_2_2(cfg, rng) -> SuiteResult:
    t = _Tally("remark2.2")
    n = cfg.max_n
    examined = 0
    for f in _all_boolean(n):
        if is_balanced(f) or not is_partially_bent(f):
            continue
        examined += 1
        t.record(
            _remark_2_2_holds(f),
            _scalar_witness("remark2.2", f, "spectral magnitude vs dim V(f)"),
        )
    sampled = 0
    for _ in range(150):
        F = random_quadratic_vbf(6, 1, rng)
        f = coordinate(F, 1)
        if is_balanced(f):
            continue
        sampled += 1
        t.record(
            _remark_2_2_holds(f),
            _scalar_witness("remark2.2", f, "sampled quadratic n=6"),
        )
    t.note(
        f"{examined} exhaustive unbalanced partially-bent at n={n}, "
        f"{sampled} sampled unbalanced quadratics at n=6"
    )
    return t.result()


def _remark_2_2_holds(f: BooleanFunction) -> bool:
    """Unbalanced partially-bent: dim V has the parity of n and fixes |F(f)|;
    for even n, dim V = 0 exactly on the bent ones."""
    k = linear_structures(f).dim
    if (k - f.n) % 2:
        return False
    if abs(fourier_coefficient(f)) != 1 << ((f.n + k) // 2):
        return False
    if f.n % 2 == 0 and (k == 0) != is_bent(f):
        return False
    return True


def _suite_lemma_3_1(cfg, rng) -> SuiteResult:
    t = _Tally("lemma3.1")
    n = cfg.max_n
    for f in _all_boolean(n):
        ok = scalar_fourier_identity_check(f)
        t.record(ok, None if ok else _scalar_witness("lemma3.1", f, "identity"))
    t.note(f"exhaustive over all {1 << (1 << n)} functions at n={n}")
    return t.result()


def _suite_corollary_3_2(cfg, rng) -> SuiteResult:
    t = _Tally("corollary3.2")
    n = cfg.max_n
    for f in _all_boolean(n):
        direct = sum(derivative_weight(f, a) for a in range(f.size))
        expected = (1 << (2 * n - 1)) - walsh_transform(f).values[0] ** 2 // 2
        ok = direct == expected and derivative_weight_sum(f) == direct
        t.record(ok, None if ok else _scalar_witness("corollary3.2", f, "weight sum"))
    t.note(f"exhaustive over all {1 << (1 << n)} functions at n={n}")
    return t.result()


def _suite_lemma_3_3(cfg, rng) -> SuiteResult:
    t = _Tally("lemma3.3")
    n = cfg.max_n
    cap = 1 << (2 * n - 1)
    for f in _all_boolean(n):
        total = sum(derivative_weight(f, a) for a in range(f.size))
        ok = total <= cap and (total == cap) == is_balanced(f)
        t.record(ok, None if ok else _scalar_witness("lemma3.3", f, "cap"))
    t.note(f"exhaustive over all {1 << (1 << n)} functions at n={n}")
    return t.result()


def _suite_corollary_3_4(cfg, rng) -> SuiteResult:
    t = _Tally("corollary3.4")
    n = cfg.max_n
    examined = 0
    for f in _all_boolean(n):
        if not is_partially_bent(f):
            continue
        examined += 1
        total = sum(derivative_weight(f, a) for a in range(f.size))
        if is_balanced(f):
            ok = total == 1 << (2 * n - 1)
        else:
            k = linear_structures(f).dim
            ok = total == (1 << (2 * n - 1)) - (1 << (n + k - 1))
        t.record(ok, None if ok else _scalar_witness("corollary3.4", f, "pb sum"))
    t.note(f"{examined} partially-bent functions at n={n}, exhaustive")
    return t.result()


def _suite_theorem_4_2(cfg, rng) -> SuiteResult:
    t = _Tally("theorem4.2")
    n, m = cfg.max_n, cfg.max_m
    size = 1 << n
    population = 1 << (m * size)

    def check(F):
        lhs = sum_sq_fourier(F)
        rhs = 1 << (n + m)
        emb = image_size(F) == size
        ok = lhs >= rhs and (lhs == rhs) == emb
        t.record(
            ok,
            None
            if ok
            else {
                "statement": "theorem4.2",
                **vbf_to_dict(F),
                "lhs": lhs,
                "rhs": rhs,
                "detail": "floor or equality direction",
            },
        )

    if population <= EXHAUSTIVE_CAP:
        mask = (1 << m) - 1
        for code in range(population):
            check(
                VectorialBooleanFunction(
                    n, m, tuple((code >> (m * x)) & mask for x in range(size))
                )
            )
        t.note(f"exhaustive over all {population} maps {n}->{m}")
    else:
        for _ in range(4096):
            check(_random_vbf(n, m, rng))
        t.note(f"4096 sampled maps {n}->{m} (population {population} too large)")
    return t.result()


def _suite_corollary_4_3(cfg, rng) -> SuiteResult:
    t = _Tally("corollary4.3")
    dims = [(cfg.max_n, cfg.max_m)]
    if cfg.max_n != cfg.max_m:
        dims.append((cfg.max_m, cfg.max_n))
    for n, m in dims:
        for _ in range(200):
            t.verdict(check_corollary_4_3(_random_vbf(n, m, rng)))
        t.note(f"200 sampled maps {n}->{m} (both orientations of the floor)")
    return t.result()


def _suite_lemma_4_1(cfg, rng) -> SuiteResult:
    t = _Tally("lemma4.1")
    n, m = _sample_dims(cfg)
    for _ in range(120):
        F = _random_vbf(n, m, rng)
        for a in range(1, F.size):
            triple = 0
            for x in range(F.size):
                d = F.table[x] ^ F.table[x ^ a]
                for lam in range(F.lambda_count):
                    triple += 1 - 2 * parity(lam & d)
            coll = collision_count(F, a)
            ok = triple == (1 << m) * coll and coll % 2 == 0
            t.record(
                ok,
                None
                if ok
                else {
                    "statement": "lemma4.1",
                    **vbf_to_dict(F),
                    "detail": f"direction {a}",
                },
            )
    t.note(f"120 sampled maps {n}->{m}, every nonzero direction")
    return t.result()


def _constructed_embeddings(n, m, rng, count):
    """Affine-image embeddings, the guaranteed-equality corner cases."""
    return [
        affine_image_embedding(n, random_affinity(m, rng)) for _ in range(count)
    ]


def _quadratic_embeddings(n, m, rng, budget, limit):
    out = []
    for _ in range(budget):
        F = random_quadratic_vbf(n, m, rng)
        if is_embedding(F):
            out.append(F)
            if len(out) >= limit:
                break
    return out


def _suite_corollary_5_1(cfg, rng) -> SuiteResult:
    t = _Tally("corollary5.1")
    n, m = _sample_dims(cfg)
    for _ in range(350):
        t.verdict(check_corollary_5_1(_random_vbf(n, m, rng)))
    for F in _constructed_embeddings(n, m, rng, 10):
        t.verdict(check_corollary_5_1(F))
    t.note(f"350 sampled plus 10 constructed embeddings at {n}->{m}")
    return t.result()


def _suite_corollary_5_2(cfg, rng) -> SuiteResult:
    t = _Tally("corollary5.2")
    n, m = _sample_dims(cfg)
    for _ in range(700):
        t.verdict(check_corollary_5_2(_random_vbf(n, m, rng)))
    for F in _constructed_embeddings(n, m, rng, 10):
        t.verdict(check_corollary_5_2(F))
    t.note(f"700 sampled plus 10 cap-attaining embeddings at {n}->{m}")
    return t.result()


def _suite_lemma_5_4(cfg, rng) -> SuiteResult:
    t = _Tally("lemma5.4")
    n, m = _sample_dims(cfg)
    for _ in range(700):
        t.verdict(check_lemma_5_4(_random_vbf(n, m, rng)))
    t.note(f"700 sampled maps at {n}->{m}")
    return t.result()


def _suite_corollary_5_5(cfg, rng) -> SuiteResult:
    t = _Tally("corollary5.5")
    n, m = _sample_dims(cfg)
    for F in _constructed_embeddings(n, m, rng, 40):
        t.verdict(check_corollary_5_5(F))
    quads = _quadratic_embeddings(n, m, rng, 300, 60) if m > n else []
    for F in quads:
        t.verdict(check_corollary_5_5(F))
    t.note(f"40 cap-attaining plus {len(quads)} quadratic embeddings at {n}->{m}")
    return t.result()


def _suite_theorem_5_8(cfg, rng) -> SuiteResult:
    t = _Tally("theorem5.8")
    for n, m, budget in ((3, 4, 400), (4, 5, 250)):
        found = 0
        for _ in range(budget):
            F = random_quadratic_vbf(n, m, rng)
            if not is_embedding(F):
                continue
            found += 1
            t.verdict(check_theorem_5_8(F))
        t.note(f"{found} quadratic embeddings among {budget} candidates at {n}->{m}")
    return t.result()


def _suite_proposition_5_9(cfg, rng) -> SuiteResult:
    t = _Tally("proposition5.9")
    quads = _quadratic_embeddings(3, 4, rng, 400, 80)
    for F in quads:
        t.verdict(check_proposition_5_9(F))
    built = _constructed_embeddings(3, 4, rng, 10)
    for F in built:
        t.verdict(check_proposition_5_9(F))
    t.note(f"{len(quads)} quadratic plus {len(built)} affine-image embeddings 3->4")
    return t.result()


def _suite_theorem_5_10(cfg, rng) -> SuiteResult:
    t = _Tally("theorem5.10")
    n, m = 3, 5
    expect_bal = (1 << m) - (1 << (m - n))
    expect_const = 1 << (m - n)
    for _ in range(50):
        F = affine_image_embedding(n, random_affinity(m, rng))
        v = check_theorem_5_10(F)
        comps = component_analyses(F)
        bal = sum(1 for c in comps if "balanced" in c.tags)
        const = sum(1 for c in comps if "constant" in c.tags)
        ok = v.applicable and v.holds and bal == expect_bal and const == expect_const
        t.record(ok, v.witness if v.witness else None)
    t.note(
        f"50 affine-image embeddings {n}->{m}; each must split "
        f"{expect_bal} balanced / {expect_const} constant"
    )
    return t.result()


def _suite_preimage(cfg, rng) -> SuiteResult:
    t = _Tally("preimage")
    for code in range(256):
        F = VectorialBooleanFunction(
            2, 2, tuple((code >> (2 * x)) & 3 for x in range(4))
        )
        ok = preimage_identity_check(F)
        t.record(
            ok,
            None if ok else {"statement": "preimage", **vbf_to_dict(F), "detail": ""},
        )
    n, m = _sample_dims(cfg)
    for _ in range(400):
        F = _random_vbf(n, m, rng)
        ok = preimage_identity_check(F)
        t.record(
            ok,
            None if ok else {"statement": "preimage", **vbf_to_dict(F), "detail": ""},
        )
    t.note(f"exhaustive 2->2 (256 maps) plus 400 sampled at {n}->{m}")
    return t.result()


def _restricted_all_injective(F) -> bool:
    return apn_via_restricted_derivatives(F)


def _suite_apn(cfg, rng) -> SuiteResult:
    t = _Tally("apn")

    def equiv_check(F, label):
        ok = is_apn(F) == _restricted_all_injective(F)
        t.record(
            ok,
            None
            if ok
            else {
                "statement": "apn-equivalence",
                **vbf_to_dict(F),
                "detail": label,
            },
        )

    for e in range(8):
        equiv_check(power_map_table(3, e), f"power map e={e}")
    apn_flags = {e: is_apn(power_map_table(3, e)) for e in range(8)}
    t.record(apn_flags[3] and not apn_flags[1] and not apn_flags[0], None)

    for i in range(600):
        equiv_check(_random_vbf(3, 3, rng), f"random square map {i}")

    for n in (3, 4):
        for a in range(1, 1 << n):
            pivot = a.bit_length() - 1
            points = {insert_zero_bit(v, pivot) for v in range(1 << (n - 1))}
            shifted = {x ^ a for x in points}
            ok = not (points & shifted) and (points | shifted) == set(range(1 << n))
            t.record(ok, None)

    for _ in range(60):
        F = _random_vbf(3, 3, rng)
        a = 1 + rng.below(F.size - 1)
        d = [F.table[x] ^ F.table[x ^ a] for x in range(F.size)]
        t.record(all(d[x] == d[x ^ a] for x in range(F.size)), None)

    gold = power_map_table(5, 3)
    t.record(is_apn(gold) and algebraic_degree(gold) == 2, None)
    for a in range(1, gold.size):
        rd = restricted_derivative(gold, a)
        v = check_theorem_5_10(rd.map)
        ok = (
            is_embedding(rd.map)
            and algebraic_degree(rd.map) <= 1
            and v.applicable
            and v.holds
        )
        t.record(ok, v.witness if v.witness else None)

    kasami = power_map_table(5, 13)
    t.record(is_apn(kasami) and algebraic_degree(kasami) == 3, None)
    floor = (1 << 4) - 1
    for a in range(1, kasami.size):
        rd = restricted_derivative(kasami, a)
        comps = component_analyses(rd.map)
        bal = sum(1 for c in comps if "balanced" in c.tags)
        ok = (
            is_embedding(rd.map)
            and algebraic_degree(rd.map) == 2
            and bal >= floor
        )
        t.record(
            ok,
            None
            if ok
            else {
                "statement": "corollary6.1",
                **vbf_to_dict(kasami),
                "detail": f"direction {a}: balanced={bal} floor={floor}",
            },
        )
    cv = check_cubic_apn_corollary(kasami)
    t.record(cv.applicable and cv.holds, cv.witness)
    t.record(not check_cubic_apn_corollary(gold).applicable, None)

    t.note(
        "power maps and 600 random square maps at n=3; transversal checks; "
        "degree-2 and degree-3 power maps over the degree-5 field"
    )
    return t.result()


SUITES = {
    "parseval": _suite_parseval,
    "remark2.2": _suite_remark_2_2,
    "lemma3.1": _suite_lemma_3_1,
    "corollary3.2": _suite_corollary_3_2,
    "lemma3.3": _suite_lemma_3_3,
    "corollary3.4": _suite_corollary_3_4,
    "theorem4.2": _suite_theorem_4_2,
    "corollary4.3": _suite_corollary_4_3,
    "lemma4.1": _suite_lemma_4_1,
    "corollary5.1": _suite_corollary_5_1,
    "corollary5.2": _suite_corollary_5_2,
    "lemma5.4": _suite_lemma_5_4,
    "corollary5.5": _suite_corollary_5_5,
    "theorem5.8": _suite_theorem_5_8,
    "proposition5.9": _suite_proposition_5_9,
    "theorem5.10": _suite_theorem_5_10,
    "preimage": _suite_preimage,
    "apn": _suite_apn,
}


def run_suites(cfg: VerifyConfig, names) -> list:
    """Run the named suites (or all of them) in registry order."""
    if "all" in names:
        chosen = list(SUITES)
    else:
        unknown = [s for s in names if s not in SUITES]
        if unknown:
            raise ValueError(
                f"unknown suites: {', '.join(unknown)}; "
                f"known: {', '.join(SUITES)} (or 'all')"
            )
        chosen = [s for s in SUITES if s in set(names)]
    results = []
    order = list(SUITES)
    for name in chosen:
        rng = substream(cfg.seed, order.index(name))
        results.append(SUITES[name](cfg, rng))
    return results
