"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Optional, Sequence

from .criteria import Verdict, br_discriminant, verdict
from .geometry import RenderOptions, export_csv, export_svg, realize
from .params import decompose, p0_of_n
from .search import (
    bounds_ok,
    bounds_window,
    canonicalize,
    complete_seq,
    cross_validate,
    enumerate_exceptional,
    find_extremal,
    n_of_seq,
    perimeter_of_seq,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_SOLUTIONS = 32
SMALL_N = 6

CRITERION_NAMES = {
    "wegner": "wegner_conjecture",
    "br": "boeroeczky_ruzsa",
    "corrected": "corrected",
    "oracle": "oracle",
}

COUNTEREXAMPLE_N = 1541551
COUNTEREXAMPLE_WITNESS = (702, 717, 714, 741)


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seq4(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("--seq takes four comma-separated integers p1,p2,p3,p4")
    try:
        return tuple(int(x) for x in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid sequence {text!r}")


def verdict_report(v: Verdict, max_solutions: Optional[int] = DEFAULT_MAX_SOLUTIONS) -> dict[str, Any]:
    """JSON-ready report with a fixed key order."""
    w, br, cor = v.wegner_conjecture, v.boeroeczky_ruzsa, v.corrected
    report: dict[str, Any] = {
        "n": v.n,
        "a": v.params.a,
        "b": v.params.b,
        "c": v.params.c,
        "p0": v.p0,
        "wegner_conjecture": {
            "exceptional": w is not None,
            "m": w.m if w else None,
            "branch": w.branch if w else None,
        },
        "boeroeczky_ruzsa": {
            "exceptional": br is not None,
            "k": br.k if br else None,
            "l": br.l if br else None,
            "discriminant": br_discriminant(v.n),
        },
        "corrected": {
            "exceptional": cor is not None,
            "k": cor.k if cor else None,
            "l": cor.l if cor else None,
        },
    }
    if v.oracle is not None:
        sols = list(v.solutions or ())
        shown = sols if max_solutions is None else sols[:max_solutions]
        report["oracle"] = {
            "exceptional": v.oracle,
            "solution_count": len(sols),
            "solutions": [list(s) for s in shown],
        }
    return report


def run_check(n: int, oracle: bool = False, side_bounds: bool = False) -> Verdict:
    v = verdict(n)
    if oracle:
        rep = find_extremal(n, side_bounds=side_bounds)
        v = replace(v, oracle=rep.exceptional, solutions=tuple(rep.sorted_solutions()))
    return v


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_decompose(args: argparse.Namespace) -> int:
    p = decompose(args.n)
    p0 = p0_of_n(args.n)
    _emit(
        args,
        {"n": args.n, "a": p.a, "b": p.b, "c": p.c, "p0": p0},
        f"n={args.n} a={p.a} b={p.b} c={p.c} p0={p0}",
    )
    return EXIT_OK


def _format_verdict(rep: dict[str, Any]) -> str:
    def flag(block: dict[str, Any], *keys: str) -> str:
        extra = " ".join(f"{k}={block[k]}" for k in keys if block.get(k) is not None)
        return f"{'exceptional' if block['exceptional'] else 'not exceptional'}" + (f" ({extra})" if extra else "")

    lines = [
        f"n={rep['n']} a={rep['a']} b={rep['b']} c={rep['c']} p0={rep['p0']}",
        f"  wegner conjecture : {flag(rep['wegner_conjecture'], 'branch', 'm')}",
        f"  boeroeczky-ruzsa  : {flag(rep['boeroeczky_ruzsa'], 'k', 'l')}  D={rep['boeroeczky_ruzsa']['discriminant']}",
        f"  corrected         : {flag(rep['corrected'], 'k', 'l')}",
    ]
    if "oracle" in rep:
        o = rep["oracle"]
        lines.append(f"  packing search    : {flag(o)}  solutions={o['solution_count']}")
        lines.extend(f"    {tuple(s)}" for s in o["solutions"])
        if rep["n"] <= SMALL_N:
            lines.append("    (hull has fewer than six sides at this n; result is algebraic only)")
    return "\n".join(lines)


def cmd_check(args: argparse.Namespace) -> int:
    v = run_check(args.n, oracle=args.oracle, side_bounds=args.side_bounds)
    limit = None if args.all_solutions else args.max_solutions
    rep = verdict_report(v, limit)
    _emit(args, rep, _format_verdict(rep))
    if not args.side_bounds and not v.consistent():
        print(f"inconsistent verdicts for n={args.n}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    found = enumerate_exceptional(args.max, CRITERION_NAMES[args.criterion], jobs=args.jobs)
    _emit(
        args,
        {"criterion": args.criterion, "max": args.max, "exceptional": found},
        "\n".join(str(n) for n in found),
    )
    return EXIT_OK


def cmd_cross_validate(args: argparse.Namespace) -> int:
    cv = cross_validate(args.max, jobs=args.jobs)
    payload = {
        "max": cv.n_max,
        "discrepancies": [
            {
                "n": d.n,
                "wegner_conjecture": d.conjecture,
                "boeroeczky_ruzsa": d.boeroeczky_ruzsa,
                "oracle": d.oracle_exceptional,
            }
            for d in cv.discrepancies
        ],
        "conjecture_only_count": len(cv.conjecture_only),
        "conjecture_missed_count": len(cv.conjecture_missed),
        "oracle_confirms_boeroeczky_ruzsa": cv.oracle_confirms,
        "corrected_mismatches": list(cv.corrected_mismatches),
    }
    lines = [f"n <= {cv.n_max}: {len(cv.discrepancies)} discrepancies between conjecture and Boeroeczky-Ruzsa"]
    lines += [
        f"  n={d.n} conjecture={'E' if d.conjecture else '-'} br={'E' if d.boeroeczky_ruzsa else '-'} "
        f"oracle={'E' if d.oracle_exceptional else '-'}"
        for d in cv.discrepancies
    ]
    lines.append(f"conjecture-only positives: {len(cv.conjecture_only)}")
    lines.append(f"missed by conjecture: {len(cv.conjecture_missed)}")
    lines.append(f"oracle confirms Boeroeczky-Ruzsa: {cv.oracle_confirms}")
    lines.append(f"corrected vs Boeroeczky-Ruzsa mismatches: {len(cv.corrected_mismatches)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if cv.oracle_confirms and not cv.corrected_mismatches else EXIT_FAIL


def counterexample_checks() -> list[tuple[str, bool]]:
    """Each reproduction step of the n = 1541551 counterexample with its outcome."""
    n = COUNTEREXAMPLE_N
    v = run_check(n, oracle=True)
    p = v.params
    p1, p2, p3, p4 = COUNTEREXAMPLE_WITNESS
    seq = complete_seq(p1, p2, p3, p4)
    lo, hi = bounds_window(p)
    sols = v.solutions or ()
    return [
        (f"decompose({n}) = (717, 2, 0)", (p.a, p.b, p.c) == (717, 2, 0)),
        (f"p0 = {v.p0} = 4299", v.p0 == 4299),
        (
            f"conjecture flags n (branch b2, m=2): {v.wegner_conjecture}",
            v.wegner_conjecture is not None and (v.wegner_conjecture.branch, v.wegner_conjecture.m) == ("b2", 2),
        ),
        (
            f"discriminant {br_discriminant(n)} has no (3k-1)*9^l form",
            br_discriminant(n) == 8595 and v.boeroeczky_ruzsa is None,
        ),
        ("corrected characterization agrees", v.corrected is None),
        (f"witness {COUNTEREXAMPLE_WITNESS} completes to {tuple(seq) if seq else None}", seq is not None),
        (f"witness has n = {n_of_seq(p1, p2, p3, p4)}", n_of_seq(p1, p2, p3, p4) == n),
        (f"witness perimeter = {perimeter_of_seq(p1, p2, p3, p4)}", perimeter_of_seq(p1, p2, p3, p4) == v.p0),
        (f"witness within side window [{lo}, {hi}]", seq is not None and bounds_ok(seq, p) and (lo, hi) == (358, 1434)),
        (f"packing search finds {len(sols)} extremal sequences", bool(sols) and v.oracle is False),
        ("witness is among them", seq is not None and canonicalize(seq) in sols),
        (
            "every solution satisfies the count, perimeter and window conditions",
            all(
                n_of_seq(*s[:4]) == n and perimeter_of_seq(*s[:4]) == v.p0 and bounds_ok(s, p)
                for s in sols
            ),
        ),
    ]


def cmd_counterexample(args: argparse.Namespace) -> int:
    checks = counterexample_checks()
    ok = all(passed for _, passed in checks)
    payload = {
        "n": COUNTEREXAMPLE_N,
        "witness": list(COUNTEREXAMPLE_WITNESS),
        "checks": [{"check": name, "pass": passed} for name, passed in checks],
        "pass": ok,
    }
    text = "\n".join(f"[{'PASS' if passed else 'FAIL'}] {name}" for name, passed in checks)
    text += f"\n{'PASS' if ok else 'FAIL'}: n = {COUNTEREXAMPLE_N} refutes the conjecture"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args: argparse.Namespace) -> int:
    if args.seq is not None:
        seq = complete_seq(*args.seq)
        if seq is None or min(args.seq) < 1:
            raise UsageError(f"sequence {args.seq} does not close to a hexagon")
    elif args.n is not None:
        rep = find_extremal(args.n)
        if rep.exceptional:
            raise UsageError(f"n={args.n} is exceptional: no extremal packing exists")
        seq = rep.sorted_solutions()[0]
    else:
        raise UsageError("render needs <n> or --seq")
    r = realize(seq)
    if args.format == "csv":
        body = export_csv(r)
    else:
        body = export_svg(r, RenderOptions(scale=args.scale, highlight_boundary=not args.no_highlight))
    summary = f"seq={tuple(seq)} points={len(r)} boundary_count={r.boundary_count}"
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        print(summary)
    else:
        sys.stdout.write(body)
        print(summary, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wegner", description="Exceptional numbers for extremal disc packings.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="hexagonal parameters (a, b, c) and p0")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", parents=[common], help="all criteria for one n")
    p.add_argument("n", type=_positive)
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive packing search")
    p.add_argument("--side-bounds", action="store_true", help="restrict the search to the (a-1)/2 <= p_i <= 2a-c window")
    p.add_argument("--max-solutions", type=int, default=DEFAULT_MAX_SOLUTIONS)
    p.add_argument("--all-solutions", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="exceptional numbers up to --max")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--criterion", choices=sorted(CRITERION_NAMES), default="br")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cross-validate", parents=[common], help="conjecture vs Boeroeczky-Ruzsa, oracle at discrepancies")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("counterexample", parents=[common], help="reproduce the n = 1541551 counterexample")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("render", parents=[common], help="export the lattice points of an extremal packing")
    p.add_argument("n", type=_positive, nargs="?")
    p.add_argument("--seq", type=_seq4)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out")
    p.add_argument("--scale", type=float, default=10.0)
    p.add_argument("--no-highlight", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
