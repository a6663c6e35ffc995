"""Acceptance gate: the ten binding criteria, exact integer comparisons,
each with its runtime budget. Every test prints one PASS/FAIL line
(visible with -v -s or in captured output).
"""

import contextlib
import io
import os
import time

from vbflab.apn import (
    algebraic_degree,
    is_apn,
    power_map_table,
    restricted_derivative,
)
from vbflab.cli import main as cli_main
from vbflab.rng import substream
from vbflab.search import affine_image_embedding, random_affinity, random_quadratic_vbf
from vbflab.spectral import (
    derivative_weight,
    is_partially_bent,
    partially_bent_oracle,
    walsh_transform,
)
from vbflab.vectorial import (
    VectorialBooleanFunction,
    analyze,
    balanced_set,
    constant_set,
    coordinate,
    derivative_weight_total,
    image_is_affine_subspace,
    image_size,
    is_embedding,
    lambda_bits,
    sum_sq_fourier,
)

from test_vectorial import EXAMPLE1_BALANCED, EXAMPLE2_BALANCED


def _finish(name, limit, t0, ok, detail=""):
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < limit
    tail = f" ({detail})" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'} {name} [{elapsed:.2f}s/{limit:g}s]{tail}")
    assert ok, f"{name}{tail} elapsed={elapsed:.2f}s"


def test_criterion_01_first_fixture_golden(example1):
    t0 = time.perf_counter()
    rep = analyze(example1)
    rows = {tuple(lambda_bits(lam, 4)) for lam in balanced_set(example1)}
    unbal = [c for c in rep.components if c.lam and "balanced" not in c.tags]
    degrees = sorted(c.degree for c in rep.components if c.lam)
    ok = (
        rep.is_embedding
        and rep.balanced_count == 11
        and rows == EXAMPLE1_BALANCED
        and len(unbal) == 4
        and all("semi-bent" in c.tags for c in unbal)
        and degrees == [1] + [2] * 14
    )
    _finish(
        "criterion 1: 3->4 fixture report",
        1.0,
        t0,
        ok,
        f"|B|={rep.balanced_count}, {len(unbal)} unbalanced",
    )


def test_criterion_02_second_fixture_golden(example2):
    t0 = time.perf_counter()
    rep = analyze(example2)
    rows = {tuple(lambda_bits(lam, 5)) for lam in balanced_set(example2)}
    unbal = [c for c in rep.components if c.lam and "balanced" not in c.tags]
    ok = (
        rep.is_embedding
        and rep.balanced_count == 15
        and rows == EXAMPLE2_BALANCED
        and len(unbal) == 16
        and all("bent" in c.tags for c in unbal)
        and all(c.degree == 2 for c in rep.components if c.lam)
        and rep.constant_count == 1
    )
    _finish(
        "criterion 2: 4->5 fixture report",
        1.0,
        t0,
        ok,
        f"|B|={rep.balanced_count}, |C|={rep.constant_count}",
    )


def test_criterion_03_squared_sum_floor_exhaustive():
    t0 = time.perf_counter()
    n, m = 2, 3
    size, floor = 1 << n, 1 << (n + m)
    ok = True
    equal_count = 0
    for code in range(1 << (m * size)):
        table = tuple((code >> (m * x)) & 7 for x in range(size))
        F = VectorialBooleanFunction(n, m, table)
        s = sum_sq_fourier(F)
        inj = len(set(table)) == size  # brute-force image count
        if s < floor or (s == floor) != inj:
            ok = False
            break
        equal_count += s == floor
    _finish(
        "criterion 3: 2->3 exhaustive squared-sum floor",
        5.0,
        t0,
        ok and equal_count == 8 * 7 * 6 * 5,  # injections of 4 points into 8
        f"{equal_count} maps at the floor",
    )


def test_criterion_04_scalar_identity_exhaustive():
    t0 = time.perf_counter()
    from vbflab.boolean_core import BooleanFunction

    ok = True
    for mask in range(1 << 8):
        f = BooleanFunction(3, tuple((mask >> x) & 1 for x in range(8)))
        lhs = walsh_transform(f).values[0] ** 2
        rhs = sum(8 - 2 * derivative_weight(f, a) for a in range(8))
        if lhs != rhs:
            ok = False
            break
    _finish("criterion 4: n=3 exhaustive scalar identity", 1.0, t0, ok)


def test_criterion_05_sampled_caps_imply_injective():
    t0 = time.perf_counter()
    n, m, cap_wt, cap_b = 3, 4, 448, 14
    ok = True
    wt_eq = b_eq = 0
    for i in range(10**4):
        rng = substream(2024, i)
        F = VectorialBooleanFunction(
            n, m, tuple(rng.below(16) for _ in range(8))
        )
        total = derivative_weight_total(F)
        nb = len(balanced_set(F))
        if total > cap_wt or nb > cap_b:
            ok = False
            break
        if total == cap_wt:
            wt_eq += 1
            if not is_embedding(F):
                ok = False
                break
        if nb == cap_b:
            b_eq += 1
            if not is_embedding(F):
                ok = False
                break
    _finish(
        "criterion 5: 10^4 sampled weight/balanced caps",
        30.0,
        t0,
        ok,
        f"{wt_eq} weight-cap and {b_eq} balanced-cap cases",
    )


def test_criterion_06_affine_image_split():
    t0 = time.perf_counter()
    ok = True
    for i in range(50):
        psi = random_affinity(5, substream(606, i))
        F = affine_image_embedding(3, psi)
        if len(balanced_set(F)) != 28 or len(constant_set(F)) != 4:
            ok = False
            break
    _finish("criterion 6: 50 affine-image 3->5 splits 28/4", 5.0, t0, ok)


def test_criterion_07_cubic_power_map_floor():
    t0 = time.perf_counter()
    F = power_map_table(5, 13)
    ok = is_apn(F) and algebraic_degree(F) == 3
    worst = None
    for a in range(1, F.size):
        rd = restricted_derivative(F, a)
        nb = len(balanced_set(rd.map))
        worst = nb if worst is None else min(worst, nb)
        if not (
            rd.map.n == 4
            and rd.map.m == 5
            and is_embedding(rd.map)
            and algebraic_degree(rd.map) == 2
            and nb >= 15
        ):
            ok = False
            break
    _finish(
        "criterion 7: degree-3 power map restrictions",
        10.0,
        t0,
        ok,
        f"min |B| over directions = {worst}",
    )


def test_criterion_08_quadratic_power_map_affine_split():
    t0 = time.perf_counter()
    F = power_map_table(5, 3)
    ok = is_apn(F)
    for a in range(1, F.size):
        rd = restricted_derivative(F, a)
        if not (
            is_embedding(rd.map)
            and image_is_affine_subspace(rd.map)
            and len(balanced_set(rd.map)) == 30
            and len(constant_set(rd.map)) == 2
        ):
            ok = False
            break
    _finish("criterion 8: degree-2 power map restrictions", 10.0, t0, ok)


def test_criterion_09_partially_bent_oracle_agreement():
    t0 = time.perf_counter()
    ok = True
    for i in range(10**4):
        rng = substream(909, i)
        cap = 2 if i % 2 == 0 else 3
        f = coordinate(random_quadratic_vbf(4, 1, rng, degree_cap=cap), 1)
        if is_partially_bent(f) != partially_bent_oracle(f):
            ok = False
            break
    _finish(
        "criterion 9: 10^4 derivative-vs-decomposition agreement", 60.0, t0, ok
    )


def _capture(argv) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    assert code == 0, argv
    return buf.getvalue()


def test_criterion_10_cli_determinism(tmp_path, monkeypatch):
    t0 = time.perf_counter()
    verify_args = ["verify", "--suites", "all", "--seed", "7"]
    search_args = ["search", "--n", "3", "--m", "4", "--seed", "1", "--budget", "10000"]

    outs = {"verify": [], "search": []}
    files = []
    for run in ("a", "b"):
        d = tmp_path / run
        d.mkdir()
        monkeypatch.chdir(d)
        outs["verify"].append(_capture(list(verify_args)))
        outs["search"].append(_capture(list(search_args)))
        files.append(
            {
                p.name: p.read_bytes()
                for p in sorted((d / "search-hits").iterdir())
            }
        )
    ok = (
        outs["verify"][0] == outs["verify"][1]
        and outs["search"][0] == outs["search"][1]
        and files[0] == files[1]
        and len(files[0]) > 0
    )
    _finish(
        "criterion 10: byte-identical reruns",
        120.0,
        t0,
        ok,
        f"{len(files[0])} hit files compared",
    )
