"""Command-line front end: verification suites, separations, and gauges.

Three subcommands:

``verify``
    Runs one or all property suites deterministically from a seed and prints
    a text or JSON report.  Exit 0 when every check passes, 1 when any check
    fails, 2 on bad flags.

``separate``
    Reads a JSON file with a pair of D-convex sets, writes a separation
    certificate.  Exit 0 with a certificate, 1 with a witness record when the
    sets are not component-disjoint (or the first set is not open), 2 on
    malformed input.

``gauge``
    Reads a D-convex set and a point, prints the two gauge components.
    Exit 0 on success, 1 when the set is not absorbing, 2 on malformed input.

Reports are byte-identical across runs with the same flags, except for the
``wall_time_s`` fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import serialize
from .analysis import separate_hyperbolic
from .backend import BACKENDS, EXACT, encode_real
from .convex import minkowski_gauge
from .errors import (
    DimensionMismatch,
    NotAbsorbingError,
    NotDisjointError,
    NotOpenError,
    SchemaError,
)
from .suites import SUITE_NAMES, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicomplex",
        description="Verification tools for bicomplex/hyperbolic scalar algebra, "
        "modules, convexity, and separation certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the seeded property suites")
    verify.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all",
                        help="which suite to run (default: all)")
    verify.add_argument("--seed", type=int, default=0, help="deterministic seed (default: 0)")
    verify.add_argument("--cases", type=int, default=50,
                        help="cases per suite (default: 50)")
    verify.add_argument("--backend", choices=BACKENDS, default=EXACT,
                        help="scalar backend (default: exact)")
    verify.add_argument("--report", metavar="PATH",
                        help="also write the JSON report to this file")
    verify.add_argument("--format", choices=("text", "json"), default="text",
                        dest="fmt", help="stdout format (default: text)")

    separate = sub.add_parser("separate", help="separate two D-convex sets from a JSON file")
    separate.add_argument("input", help='JSON file with {"A": <set>, "B": <set>}')
    separate.add_argument("output", nargs="?",
                          help="certificate destination (default: stdout)")
    separate.add_argument("--backend", choices=BACKENDS, default=EXACT,
                          help="scalar backend for decoding (default: exact)")

    gauge = sub.add_parser("gauge", help="evaluate a Minkowski gauge at a point")
    gauge.add_argument("polytope", help="JSON file with a D-convex set")
    gauge.add_argument("point", help="JSON file with a D-vector")
    gauge.add_argument("--backend", choices=BACKENDS, default=EXACT,
                       help="scalar backend (default: exact)")

    return parser


# -- verify -----------------------------------------------------------------------


def cmd_verify(suite: str, seed: int, cases: int, backend: str,
               report: Optional[str] = None, fmt: str = "text",
               out=None) -> int:
    out = out if out is not None else sys.stdout
    names = SUITE_NAMES if suite == "all" else (suite,)
    reports = [run_suite(name, seed, cases, backend) for name in names]
    document = {
        "seed": seed,
        "cases": cases,
        "backend": backend,
        "ok": all(r.ok for r in reports),
        "suites": [r.as_dict() for r in reports],
    }
    if report is not None:
        with open(report, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2)
            fh.write("\n")
    if fmt == "json":
        out.write(json.dumps(document, indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.text() + "\n")
        passed = sum(1 for r in reports if r.ok)
        out.write(f"{passed}/{len(reports)} suites passed\n")
    return 0 if document["ok"] else 1


# -- separate ---------------------------------------------------------------------


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(document: dict, output: Optional[str], out) -> None:
    text = json.dumps(document, indent=2) + "\n"
    if output is None:
        out.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_separate(input_path: str, output: Optional[str] = None,
                 backend: str = EXACT, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        obj = _load_json(input_path)
        if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
            raise SchemaError('separation input needs keys "A" and "B"')
        A = serialize.decode_dconvex(obj["A"], backend, where="A")
        B = serialize.decode_dconvex(obj["B"], backend, where="B")
    except (OSError, json.JSONDecodeError, SchemaError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    try:
        cert = separate_hyperbolic(A, B)
    except DimensionMismatch as exc:
        err.write(f"error: {exc}\n")
        return 2
    except NotDisjointError as exc:
        record = {
            "status": "not-disjoint",
            "component": exc.component,
            "witness": [encode_real(c) for c in exc.witness],
            "message": str(exc),
        }
        _emit(record, output, out)
        return 1
    except NotOpenError as exc:
        _emit({"status": "not-open", "message": str(exc)}, output, out)
        return 1
    document = serialize.encode_certificate(cert)
    document["status"] = "separated"
    _emit(document, output, out)
    return 0


# -- gauge ------------------------------------------------------------------------


def _format_component(value, backend: str) -> str:
    if backend == EXACT:
        return str(value)  # Fractions print as p/q, integers plainly
    return str(float(value))


def cmd_gauge(polytope_path: str, point_path: str, backend: str = EXACT,
              out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        S = serialize.decode_dconvex(_load_json(polytope_path), backend, where="set")
        x = serialize.decode_dvector(_load_json(point_path), backend, where="point")
    except (OSError, json.JSONDecodeError, SchemaError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    try:
        value = minkowski_gauge(S, x)
        q = value.hyper()
    except DimensionMismatch as exc:
        err.write(f"error: {exc}\n")
        return 2
    except NotAbsorbingError as exc:
        err.write(f"error: {exc}\n")
        return 1
    out.write(f"{_format_component(q.a1, backend)} {_format_component(q.a2, backend)}\n")
    return 0


# -- entry point ------------------------------------------------------------------


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args.suite, args.seed, args.cases, args.backend,
                          args.report, args.fmt)
    if args.command == "separate":
        return cmd_separate(args.input, args.output, args.backend)
    return cmd_gauge(args.polytope, args.point, args.backend)


if __name__ == "__main__":  # pragma: no cover - exercised via the console script
    sys.exit(main())
