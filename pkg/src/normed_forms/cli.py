"""Command-line front end for form inspection, classification and catalogs.

Five subcommands, all thin adapters over the library:

    form-info   facts about one form (discriminant, content, reduction)
    classify    which pairing families realize a form, with witnesses
    curve       CSV samples of the real witness curve (for plotting)
    verify      check a user-supplied pairing against a form
    catalog     classify every reduced primitive form in a discriminant range

Machine-readable output is JSON lines with every integer rendered as a
decimal string (consumers never lose precision to doubles), keys sorted.
Output bytes are deterministic for fixed inputs and flags; wall-clock timing
is only attached when --timing is passed, and never in catalog records.

Exit codes: 0 success, 1 verification negative, 2 input error,
3 inconclusive under --strict, 4 I/O failure.

The catalog command can fan classification out across processes; set
NORMED_FORMS_THREADS to a worker count.  Records are buffered and emitted
in canonical order (ascending discriminant, then enumeration order of the
reduced forms), so the worker count never changes the output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd, isqrt

from .classify import (
    Decision,
    curve_sample,
    full_classification,
    order3_verdict,
)
from .forms import Definiteness, Form, principal_form, reduced_forms, semigroup_probe
from .pairings import Pairing, PlusParams, Quadruple, is_normed, type_of

_HYPERBOLIC_COMMENT = "# hyperbolic parametrization: s = sinh, c = cosh"


def _istr(value: int) -> str:
    return str(int(value))


def _form_fields(form: Form) -> list[str]:
    return [_istr(form.m), _istr(form.k), _istr(form.n)]


def _mat_fields(mat) -> list[list[str]]:
    return [[_istr(entry) for entry in row] for row in mat]


def _params_fields(params: PlusParams | None):
    if params is None:
        return None
    return {
        "m": _istr(params.m),
        "k": _istr(params.k),
        "n": _istr(params.n),
        "p": _istr(params.p),
        "q": _istr(params.q),
        "r": _istr(params.r),
    }


def _quad_fields(quad: Quadruple | None):
    if quad is None:
        return None
    return [_istr(quad.a), _istr(quad.b), _istr(quad.c), _istr(quad.d)]


def _print_record(record: dict, elapsed_ms: float | None) -> None:
    if elapsed_ms is not None:
        record["elapsed_ms"] = round(elapsed_ms, 3)
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"error: {message}\n")
    return code


def cmd_form_info(args: argparse.Namespace) -> int:
    form = Form(args.m, args.k, args.n)
    if form.is_zero():
        return _fail("the zero form has no content or primitive part", 2)
    start = time.perf_counter()
    kind = form.definiteness()
    content, primitive = form.content_and_primitive()
    record = {
        "command": "form-info",
        "form": _form_fields(form),
        "discriminant": _istr(form.discriminant()),
        "definiteness": kind.value,
        "degenerate": kind is Definiteness.DEGENERATE,
        "content": _istr(content),
        "primitive_part": _form_fields(primitive),
        "is_primitive": form.is_primitive(),
        "is_reduced": None,
        "reduced": None,
        "reduction_transform": None,
        "principal_form": None,
        "is_principal_class": None,
    }
    if kind is Definiteness.POSITIVE_DEFINITE:
        reduced, transform = primitive.reduce()
        principal = principal_form(primitive.discriminant())
        record["is_reduced"] = form.is_reduced()
        record["reduced"] = _form_fields(reduced)
        record["reduction_transform"] = _mat_fields(transform)
        record["principal_form"] = _form_fields(principal)
        record["is_principal_class"] = reduced == principal
    elapsed = (time.perf_counter() - start) * 1000
    _print_record(record, elapsed if args.timing else None)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    form = Form(args.m, args.k, args.n)
    if form.discriminant() == 0:
        return _fail("classification requires a nondegenerate form", 2)
    start = time.perf_counter()
    report = full_classification(form, box_bound=args.box)
    order3 = None
    if report.minus_quadruple is not None:
        order3 = order3_verdict(report.minus_quadruple).value
    record = {
        "command": "classify",
        "form": _form_fields(form),
        "discriminant": _istr(form.discriminant()),
        "definiteness": report.definiteness.value,
        "plus_witness": _params_fields(report.plus_params),
        "plus_decision": report.plus_decision.value,
        "minus_witness": _quad_fields(report.minus_quadruple),
        "minus_decision": report.minus_decision.value,
        "order3": order3,
    }
    elapsed = (time.perf_counter() - start) * 1000
    _print_record(record, elapsed if args.timing else None)
    if args.strict and not report.fully_decided:
        return 3
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    form = Form(args.m, args.k, args.n)
    if form.m * form.n == 0 or form.discriminant() == 0:
        return _fail("the witness curve needs m*n != 0 and a nondegenerate form", 2)
    if form.m < 0 or form.n < 0:
        return _fail("the witness curve needs m > 0 and n > 0", 2)
    if args.samples < 1:
        return _fail("--samples must be at least 1", 2)
    definite = form.definiteness() is Definiteness.POSITIVE_DEFINITE
    theta_max = args.theta_max
    if theta_max is None:
        theta_max = 2 * math.pi if definite else 2.0
    step = (theta_max - args.theta_min) / args.samples
    thetas = [args.theta_min + i * step for i in range(args.samples)]
    branch = 1 if args.branch == "plus" else -1
    points = curve_sample(form, thetas, branch)
    lines = []
    if not definite:
        lines.append(_HYPERBOLIC_COMMENT)
    lines.append("theta,a,b,c,d")
    for pt in points:
        cells = [format(v, ".12g") for v in (pt.theta, pt.a, pt.b, pt.c, pt.d)]
        lines.append(",".join(cells))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    pairing = Pairing(
        ((args.entries[0], args.entries[1]), (args.entries[2], args.entries[3])),
        ((args.entries[4], args.entries[5]), (args.entries[6], args.entries[7])),
    )
    form = Form(args.entries[8], args.entries[9], args.entries[10])
    start = time.perf_counter()
    normed = is_normed(pairing, form)
    type_label = None
    if normed and form.discriminant() != 0:
        type_label = str(type_of(pairing, form))
    record = {
        "command": "verify",
        "form": _form_fields(form),
        "normed": normed,
        "type": type_label,
        "commutative": pairing.is_commutative(),
        "traceless": pairing.is_traceless(),
    }
    elapsed = (time.perf_counter() - start) * 1000
    _print_record(record, elapsed if args.timing else None)
    return 0 if normed else 1


def _positive_delta_forms(delta: int, box: int) -> list[tuple[int, int, int]]:
    """Primitive forms of positive discriminant delta with 1 <= m <= box,
    |n| <= box (a normalized finite sample; the full set is infinite)."""
    found: set[tuple[int, int, int]] = set()
    for m in range(1, box + 1):
        for n in range(-box, box + 1):
            square = delta + 4 * m * n
            if square < 0:
                continue
            root = isqrt(square)
            if root * root != square:
                continue
            for k in {root, -root}:
                if gcd(gcd(m, k), n) == 1:
                    found.add((m, k, n))
    return sorted(found)


def _catalog_tasks(dmin: int, dmax: int, box: int) -> list[tuple[int, tuple[int, int, int]]]:
    tasks: list[tuple[int, tuple[int, int, int]]] = []
    for delta in range(dmin, dmax + 1):
        if delta == 0 or delta % 4 not in (0, 1):
            continue
        if delta < 0:
            shapes = [f.coefficients() for f in reduced_forms(delta)]
        else:
            shapes = _positive_delta_forms(delta, box)
        tasks.extend((delta, shape) for shape in shapes)
    return tasks


def _catalog_record(task: tuple[int, tuple[int, int, int]]) -> dict:
    delta, shape = task
    form = Form(*shape)
    report = full_classification(form)
    probe = semigroup_probe(form)
    order3 = None
    if report.minus_quadruple is not None:
        order3 = order3_verdict(report.minus_quadruple).value
    closed = None
    if probe.decided:
        closed = not probe.has_counterexample
    return {
        "delta": _istr(delta),
        "form": _form_fields(form),
        "definiteness": report.definiteness.value,
        "plus_witness": _params_fields(report.plus_params),
        "plus_decision": report.plus_decision.value,
        "minus_witness": _quad_fields(report.minus_quadruple),
        "minus_decision": report.minus_decision.value,
        "order3": order3,
        "semigroup_decided": probe.decided,
        "semigroup_counterexamples": _istr(probe.counterexample_count),
        "semigroup_closed": closed,
    }


_CSV_COLUMNS = [
    "delta",
    "m",
    "k",
    "n",
    "definiteness",
    "plus_decision",
    "plus_r",
    "plus_p",
    "plus_q",
    "minus_decision",
    "minus_a",
    "minus_b",
    "minus_c",
    "minus_d",
    "order3",
    "semigroup_decided",
    "semigroup_closed",
]


def _record_to_csv(record: dict) -> str:
    plus = record["plus_witness"] or {}
    minus = record["minus_witness"] or [""] * 4
    flat = {
        "delta": record["delta"],
        "m": record["form"][0],
        "k": record["form"][1],
        "n": record["form"][2],
        "definiteness": record["definiteness"],
        "plus_decision": record["plus_decision"],
        "plus_r": plus.get("r", ""),
        "plus_p": plus.get("p", ""),
        "plus_q": plus.get("q", ""),
        "minus_decision": record["minus_decision"],
        "minus_a": minus[0],
        "minus_b": minus[1],
        "minus_c": minus[2],
        "minus_d": minus[3],
        "order3": record["order3"] or "",
        "semigroup_decided": _bool_cell(record["semigroup_decided"]),
        "semigroup_closed": _bool_cell(record["semigroup_closed"]),
    }
    return ",".join(flat[col] for col in _CSV_COLUMNS)


def _bool_cell(value) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def _worker_count() -> int:
    raw = os.environ.get("NORMED_FORMS_THREADS", "")
    try:
        count = int(raw)
    except ValueError:
        return 1
    return max(count, 1)


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.dmin > args.dmax:
        return _fail("--dmin must not exceed --dmax", 2)
    if args.dmax >= 0 and args.dmin <= 0:
        return _fail("range must be entirely negative or entirely positive", 2)
    if args.dmin > 0 and args.box < 1:
        return _fail("a positive range needs --box >= 1", 2)
    tasks = _catalog_tasks(args.dmin, args.dmax, args.box)
    workers = _worker_count()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_catalog_record, tasks))
    else:
        records = [_catalog_record(task) for task in tasks]
    if args.format == "jsonl":
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    else:
        lines = [",".join(_CSV_COLUMNS)]
        lines.extend(_record_to_csv(r) for r in records)
        text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}", 4)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normed-forms",
        description="Exact classification of integer normed pairings on "
        "binary quadratic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("form-info", help="facts about one form")
    for name in ("m", "k", "n"):
        info.add_argument(name, type=int)
    info.add_argument("--timing", action="store_true", help="attach elapsed_ms")
    info.set_defaults(func=cmd_form_info)

    classify = sub.add_parser("classify", help="which pairing families realize a form")
    for name in ("m", "k", "n"):
        classify.add_argument(name, type=int)
    classify.add_argument("--box", type=int, default=100,
                          help="search bound for indefinite forms")
    classify.add_argument("--strict", action="store_true",
                          help="exit 3 when any verdict is merely bounded")
    classify.add_argument("--timing", action="store_true", help="attach elapsed_ms")
    classify.set_defaults(func=cmd_classify)

    curve = sub.add_parser("curve", help="CSV samples of the real witness curve")
    for name in ("m", "k", "n"):
        curve.add_argument(name, type=int)
    curve.add_argument("--samples", type=int, default=64)
    curve.add_argument("--theta-min", type=float, default=0.0)
    curve.add_argument("--theta-max", type=float, default=None,
                       help="default: one period (definite) or 2.0 (indefinite)")
    curve.add_argument("--branch", choices=("plus", "minus"), default="plus")
    curve.set_defaults(func=cmd_curve)

    verify = sub.add_parser(
        "verify",
        help="check a pairing (two row-major 2x2 matrices) against a form",
    )
    verify.add_argument(
        "entries",
        type=int,
        nargs=11,
        metavar="INT",
        help="a11 a12 a21 a22 b11 b12 b21 b22 m k n",
    )
    verify.add_argument("--timing", action="store_true", help="attach elapsed_ms")
    verify.set_defaults(func=cmd_verify)

    catalog = sub.add_parser("catalog", help="classify a discriminant range")
    catalog.add_argument("--dmin", type=int, required=True)
    catalog.add_argument("--dmax", type=int, required=True)
    catalog.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    catalog.add_argument("--out", default=None, help="output path (default stdout)")
    catalog.add_argument("--box", type=int, default=12,
                         help="coefficient bound for positive discriminants")
    catalog.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
