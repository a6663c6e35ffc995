"""Command-line front end: analyze a map, run verification suites, search
for quadratic embeddings, or inspect restricted derivatives of square maps.

Exit codes: 0 success, 1 falsification or counterexample found, 2 bad
input, 3 search finished with no hits. All JSON output is key-sorted and
contains nothing run-dependent, so identical invocations produce
byte-identical bytes.
"""

import argparse
import json
import os
import sys

from .apn import (
    algebraic_degree,
    check_cubic_apn_corollary,
    differential_uniformity,
    is_apn,
    power_map_table,
    restriction_reports,
)
from .boolean_core import parse_anf, truth_table_from_anf
from .search import TARGETS, SearchConfig, search
from .statements import FalsificationError
from .vectorial import (
    VectorialBooleanFunction,
    analyze,
    from_coordinates,
    lambda_bits,
    report_to_dict,
    thread_count,
    vbf_from_dict,
    vbf_to_dict,
    verdict_to_dict,
)
from .verify import SUITES, VerifyConfig, run_suites


class InputSpecError(ValueError):
    """Unusable input spec, file contents or flag value: exit status 2."""


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_json(obj, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_json_text(obj))


def _bit_row(bits) -> str:
    """`[ 0, 0, 0, 1 ]`, the bracketed style the report tables use."""
    return "[ " + ", ".join(str(b) for b in bits) + " ]"


def load_vbf(spec: str) -> VectorialBooleanFunction:
    """Resolve an input spec: `power:<n>:<e>` or a path to a VBF JSON file.

    Files carry {"n", "m", "table"} or {"n", "m", "anf": [m strings]}.
    """
    if spec.startswith("power:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise InputSpecError(
                f"power map spec must be power:<n>:<exponent>, got {spec!r}"
            )
        try:
            n, e = int(parts[1]), int(parts[2])
        except ValueError:
            raise InputSpecError(
                f"power map spec needs integer fields, got {spec!r}"
            )
        try:
            return power_map_table(n, e)
        except ValueError as exc:
            raise InputSpecError(f"{spec}: {exc}")
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputSpecError(f"cannot read {spec}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputSpecError(f"{spec}: not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise InputSpecError(f"{spec}: expected a JSON object")
    if "anf" in data:
        return _vbf_from_anf_entry(spec, data)
    try:
        return vbf_from_dict(data)
    except ValueError as exc:
        raise InputSpecError(f"{spec}: {exc}")


def _vbf_from_anf_entry(path: str, data: dict) -> VectorialBooleanFunction:
    n, m, anf = data.get("n"), data.get("m"), data.get("anf")
    if not isinstance(n, int) or not isinstance(m, int):
        raise InputSpecError(f'{path}: "n" and "m" must be integers')
    if not isinstance(anf, list) or any(not isinstance(s, str) for s in anf):
        raise InputSpecError(f'{path}: "anf" must be a list of strings')
    if len(anf) != m:
        raise InputSpecError(
            f'{path}: "anf" lists {len(anf)} coordinates but m={m}'
        )
    coords = []
    for i, text in enumerate(anf, start=1):
        try:
            coords.append(truth_table_from_anf(parse_anf(text, n)))
        except ValueError as exc:
            # AnfSyntaxError renders with its line/column position
            raise InputSpecError(f"{path}: coordinate {i}: {exc}")
    try:
        return from_coordinates(coords)
    except ValueError as exc:
        raise InputSpecError(f"{path}: {exc}")


def _write_witnesses(witnesses, outdir) -> list:
    """One JSON file per witness, deterministically named, in list order."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    seen = {}
    for w in witnesses:
        stem = str(w.get("statement", "check")).replace(".", "-")
        k = seen.get(stem, 0)
        seen[stem] = k + 1
        name = f"witness-{stem}.json" if k == 0 else f"witness-{stem}-{k}.json"
        path = os.path.join(outdir, name)
        _write_json(w, path)
        paths.append(path)
    return paths


def _print_report_text(report, out):
    d = report_to_dict(report)
    w = out.write
    w(f"n={d['n']} m={d['m']}\n")
    w(f"image size: {d['image_size']}/{1 << d['n']}\n")
    w(f"embedding: {'yes' if d['is_embedding'] else 'no'}\n")
    w(f"image is affine subspace: {'yes' if d['image_affine'] else 'no'}\n")
    w(f"sum of squared Fourier coefficients: {d['sum_sq_fourier']}\n")
    w(f"balanced components: {d['balanced_count']}\n")
    w(f"constant components: {d['constant_count']}\n")
    w("B(F):\n")
    for row in d["balanced_set"]:
        w(f"  {_bit_row(row)}\n")
    w("C(F):\n")
    for row in d["constant_set"]:
        w(f"  {_bit_row(row)}\n")
    w("components:\n")
    for c in d["components"]:
        w(
            f"  {_bit_row(c['lambda'])}  weight={c['weight']:<4d} "
            f"fourier={c['fourier']:<5d} degree={c['degree']}  "
            f"{', '.join(c['tags'])}\n"
        )
    w("statement checks:\n")
    for v in d["verdicts"]:
        if not v["applicable"]:
            status = "not applicable"
        elif v["holds"]:
            status = "pass"
        else:
            status = "FAIL"
        detail = f" ({v['detail']})" if v["detail"] else ""
        w(f"  {v['statement']}: {status}{detail}\n")


def cmd_analyze(args) -> int:
    F = load_vbf(args.input)
    report = analyze(F, threads=thread_count())
    if args.format == "json":
        sys.stdout.write(_json_text(report_to_dict(report)))
    else:
        sys.stdout.write(f"input: {args.input}\n")
        _print_report_text(report, sys.stdout)
    failed = [
        v for v in report.theorem_verdicts if v.applicable and not v.holds
    ]
    if failed:
        paths = _write_witnesses(
            [v.witness for v in failed if v.witness], args.witness_dir
        )
        for p in paths:
            print(f"witness written: {p}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    suites = []
    for chunk in args.suites:
        suites.extend(s for s in chunk.split(",") if s)
    try:
        cfg = VerifyConfig(max_n=args.max_n, max_m=args.max_m, seed=args.seed)
        results = run_suites(cfg, suites)
    except ValueError as exc:
        raise InputSpecError(str(exc))
    witnesses = []
    for r in results:
        line = f"{r.name}: {r.passed}/{r.checked} pass"
        if r.failed:
            line += f" ({r.failed} FAILED)"
        print(line)
        for note in r.notes:
            print(f"  note: {note}")
        witnesses.extend(r.witnesses)
    if witnesses:
        for p in _write_witnesses(witnesses, args.witness_dir):
            print(f"witness written: {p}", file=sys.stderr)
        return 1
    return 0


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            n=args.n,
            m=args.m,
            budget=args.budget,
            seed=args.seed,
            degree_cap=args.degree_cap,
            target=args.target,
            max_hits=args.max_hits,
        )
    except ValueError as exc:
        raise InputSpecError(str(exc))
    try:
        hits = search(cfg)
    except FalsificationError as exc:
        paths = _write_witnesses([exc.witness], args.witness_dir)
        print(f"counterexample found: {exc}", file=sys.stderr)
        for p in paths:
            print(f"witness written: {p}", file=sys.stderr)
        return 1
    if not hits:
        print(f"no hits in {cfg.budget} candidates (target {cfg.target})")
        return 3
    os.makedirs(args.out, exist_ok=True)
    for i, hit in enumerate(hits):
        fn_path = os.path.join(args.out, f"hit-{i:03d}-function.json")
        rp_path = os.path.join(args.out, f"hit-{i:03d}-report.json")
        _write_json(vbf_to_dict(hit.function), fn_path)
        _write_json(report_to_dict(hit.report), rp_path)
        tag = "constructed" if hit.candidate < 0 else f"candidate {hit.candidate}"
        print(
            f"hit {i}: {tag} balanced={hit.report.balanced_count} "
            f"constant={hit.report.constant_count} "
            f"lower-bound-equality={'yes' if hit.lower_bound_equality else 'no'} "
            f"upper-bound-equality={'yes' if hit.upper_bound_equality else 'no'} "
            f"-> {fn_path}"
        )
    return 0


def cmd_apn(args) -> int:
    F = load_vbf(args.input)
    if F.n != F.m:
        raise InputSpecError(
            f"apn requires a square map, got n={F.n}, m={F.m}"
        )
    uniformity = differential_uniformity(F)
    rows = restriction_reports(F)
    verdict = check_cubic_apn_corollary(F)
    if args.format == "json":
        payload = {
            "n": F.n,
            "degree": algebraic_degree(F),
            "differential_uniformity": uniformity,
            "is_apn": uniformity == 2,
            "restricted_derivatives": rows,
            "corollary6.1": verdict_to_dict(verdict),
        }
        sys.stdout.write(_json_text(payload))
    else:
        print(f"input: {args.input}")
        print(f"n={F.n} degree={algebraic_degree(F)}")
        print(f"differential uniformity: {uniformity}")
        print(f"APN: {'yes' if uniformity == 2 else 'no'}")
        print("restricted derivatives:")
        for r in rows:
            print(
                f"  a={r['direction']:<3d} pivot={r['pivot']} "
                f"embedding={'yes' if r['is_embedding'] else 'no'} "
                f"degree={r['degree']} balanced={r['balanced_count']} "
                f"constant={r['constant_count']}"
            )
        if verdict.applicable:
            status = "pass" if verdict.holds else "FAIL"
        else:
            status = "not applicable"
        detail = f" ({verdict.detail})" if verdict.detail else ""
        print(f"corollary6.1: {status}{detail}")
    if verdict.applicable and not verdict.holds:
        for p in _write_witnesses([verdict.witness], args.witness_dir):
            print(f"witness written: {p}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vbflab",
        description="Analyze vectorial Boolean functions: balanced components, "
        "embedding detection, partially-bent classification, restricted "
        "derivatives of square maps, and randomized embedding search.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="full per-component report for one map")
    p.add_argument("--input", required=True, help="VBF JSON path or power:<n>:<e>")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--witness-dir", default="witnesses")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run exhaustive/sampled verification suites")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument(
        "--suites",
        action="append",
        default=None,
        help=f"comma-separated or repeated; one of {', '.join(SUITES)} or 'all'",
    )
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--witness-dir", default="witnesses")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="seeded random search for embeddings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--degree-cap", type=int, default=2)
    p.add_argument("--target", choices=TARGETS, default="meets-lower-bound")
    p.add_argument("--max-hits", type=int, default=16)
    p.add_argument("--out", default="search-hits")
    p.add_argument("--witness-dir", default="witnesses")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("apn", help="restricted-derivative report for a square map")
    p.add_argument("--input", required=True, help="VBF JSON path or power:<n>:<e>")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--witness-dir", default="witnesses")
    p.set_defaults(func=cmd_apn)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "verify":
        if args.suites is None:
            args.suites = ["all"]
    try:
        return args.func(args)
    except InputSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
