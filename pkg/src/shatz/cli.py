"""Command-line front end.

Commands: ``bun`` (full-stack series), ``ss`` (semistable series), ``stable``
(coarse-space Betti/Hodge numbers), ``strata`` (instability types with
codimensions), ``verify`` (stratum-sum consistency check).  Results go to
stdout in text, json or csv; diagnostics go to stderr.  Exit codes: 0 ok,
1 usage error (bad arguments, truncation over the guard), 2 domain error
(genus < 2), 3 verification failure.

JSON coefficients are decimal strings: they routinely exceed the integer
range JSON consumers can be trusted with.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .cachefile import cache_load, cache_store
from .hn import BundleClass, CurveContext, enumerate_hn_types
from .moduli import (
    SsCache,
    bun_hodge_poincare,
    bun_poincare,
    ss_hodge_poincare,
    ss_poincare,
    verify_strata_identity,
)
from .series import HodgeSeries, TruncatedSeries
from .stable import moduli_betti, moduli_hodge

TRUNCATION_GUARD = 200
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY_FAILED = 3

EMPTY_RANGE_NOTE = "valid range is empty for rank 1"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; remap to our usage code
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="shatz",
        description="Exact Poincare / Hodge-Poincare series for moduli of "
        "bundles on a curve of genus >= 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=False, trunc=False, hodge=False, cache=False, codim=False):
        p.add_argument("--rank", "-r", type=_positive_int, required=True)
        if degree:
            p.add_argument("--degree", "-d", type=int, required=True)
        p.add_argument("--genus", "-g", type=int, required=True)
        if trunc:
            p.add_argument("--trunc", "-N", type=_nonneg_int, required=True)
        if codim:
            p.add_argument("--max-codim", "-c", type=_nonneg_int, required=True)
        if hodge:
            p.add_argument("--hodge", action="store_true",
                           help="two-variable (x, y) series instead of t")
        if cache:
            p.add_argument("--cache", metavar="PATH",
                           help="cache file path (default: $SHATZ_CACHE)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--trunc-guard", type=_positive_int, default=TRUNCATION_GUARD,
                       help=argparse.SUPPRESS)

    common(sub.add_parser("bun", help="series of the full moduli stack"),
           trunc=True, hodge=True)
    common(sub.add_parser("ss", help="series of the semistable stratum"),
           degree=True, trunc=True, hodge=True, cache=True)
    common(sub.add_parser("stable", help="Betti/Hodge numbers of the stable "
                          "coarse moduli space"), degree=True, hodge=True)
    sub.choices["stable"].add_argument(
        "--conservative", action="store_true",
        help="use the range bound 2(r-1)(g-1) - 1 instead of 2(r-1)(g-1)")
    common(sub.add_parser("strata", help="instability types up to a codimension"),
           degree=True, codim=True)
    common(sub.add_parser("verify", help="check the stratum sum against the "
                          "closed formula"), degree=True, trunc=True, cache=True)
    return parser


# ---------------------------------------------------------------------------
# rendering


def _text_term(coeff: int, monomial: str) -> str:
    if monomial == "":
        return str(coeff)
    if abs(coeff) == 1:
        return ("-" if coeff < 0 else "") + monomial
    return f"{coeff}{monomial}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _t_monomial(i: int) -> str:
    return "" if i == 0 else ("t" if i == 1 else f"t^{i}")


def _xy_monomial(p: int, q: int) -> str:
    def var(name, e):
        return "" if e == 0 else (name if e == 1 else f"{name}^{e}")

    return var("x", p) + var("y", q)


def render_series(s: TruncatedSeries, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "kind": "poincare",
            "vars": ["t"],
            "truncation": s.truncation,
            "coeffs": [str(c) for c in s.coeffs],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return "".join(f"{i},{c}\n" for i, c in enumerate(s.coeffs))
    terms = [_text_term(c, _t_monomial(i)) for i, c in enumerate(s.coeffs) if c]
    return _join_terms(terms) + "\n"


def render_hodge(h: HodgeSeries, fmt: str) -> str:
    items = sorted(h.terms.items(), key=lambda kv: (sum(kv[0]), kv[0][0]))
    if fmt == "json":
        doc = {
            "kind": "hodge-poincare",
            "vars": ["x", "y"],
            "truncation": h.truncation,
            "terms": [[p, q, str(c)] for (p, q), c in items],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return "".join(f"{p},{q},{c}\n" for (p, q), c in items)
    terms = [_text_term(c, _xy_monomial(p, q)) for (p, q), c in items]
    return _join_terms(terms) + "\n"


def render_moduli(numbers, hodge: bool, fmt: str) -> tuple[str, str]:
    """Return (data, diagnostics); the note for an empty range goes to the
    data stream in text mode and to stderr otherwise."""
    note = EMPTY_RANGE_NOTE if numbers.bound_used <= 0 else ""
    if hodge:
        items = sorted(numbers.hodge.items(), key=lambda kv: (sum(kv[0]), kv[0][0]))
        rows = [(p, q, c) for (p, q), c in items]
        kind = "moduli-hodge"
    else:
        rows = sorted(numbers.betti.items())
        kind = "moduli-betti"
    if fmt == "json":
        doc = {
            "kind": kind,
            "bound": numbers.bound_used,
            "values": [[*head, str(c)] for *head, c in rows],
        }
        if note:
            doc["note"] = note
        return json.dumps(doc, separators=(",", ":")) + "\n", ""
    if fmt == "csv":
        data = "".join(",".join(str(x) for x in row) + "\n" for row in rows)
        return data, note
    data = "".join(" ".join(str(x) for x in row) + "\n" for row in rows)
    if note:
        data += note + "\n"
    return data, ""


def render_strata(strata, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "kind": "strata",
            "count": len(strata),
            "strata": [
                {
                    "codim": c,
                    "vertices": [list(v) for v in hn.vertices()],
                    "segments": [list(s) for s in hn.segments],
                }
                for hn, c in strata
            ],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"

    def pairs(points):
        return ";".join(f"{a}:{b}" for a, b in points)

    if fmt == "csv":
        return "".join(
            f"{c},{pairs(hn.vertices())},{pairs(hn.segments)}\n" for hn, c in strata
        )
    return "".join(
        "codim={} vertices={} segments={}\n".format(
            c,
            ",".join(f"({a},{b})" for a, b in hn.vertices()),
            ",".join(f"({a},{b})" for a, b in hn.segments),
        )
        for hn, c in strata
    )


def render_verify(report, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "kind": "verify",
            "pass": report.passed,
            "truncation": report.residual.truncation,
            "residual": [str(c) for c in report.residual.coeffs],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return "".join(f"{i},{c}\n" for i, c in enumerate(report.residual.coeffs))
    if report.passed:
        return "residual = 0\n"
    terms = [
        _text_term(c, _t_monomial(i)) for i, c in enumerate(report.residual.coeffs) if c
    ]
    return "residual = " + _join_terms(terms) + "\n"


# ---------------------------------------------------------------------------
# dispatch


def _open_cache(args, ctx):
    path = getattr(args, "cache", None) or os.environ.get("SHATZ_CACHE")
    if not path:
        return None, SsCache()
    return path, cache_load(path, ctx, args.trunc)


def _store_cache(path, cache, ctx, truncation):
    # persistence is best effort: the data stream has already been written
    try:
        cache_store(path, cache, ctx, truncation)
    except OSError as exc:
        print(f"shatz: warning: could not write cache {path}: {exc}", file=sys.stderr)


def run(args) -> int:
    if args.genus < 2:
        print("shatz: genus must be at least 2", file=sys.stderr)
        return EXIT_DOMAIN
    ctx = CurveContext(args.genus)
    guard = args.trunc_guard
    for attr in ("trunc", "max_codim"):
        value = getattr(args, attr, None)
        if value is not None and value > guard:
            print(
                f"shatz: {attr} {value} exceeds the guard {guard} "
                "(raise --trunc-guard to override)",
                file=sys.stderr,
            )
            return EXIT_USAGE

    if args.command == "bun":
        if args.hodge:
            out = render_hodge(bun_hodge_poincare(args.rank, ctx, args.trunc),
                               args.format)
        else:
            out = render_series(bun_poincare(args.rank, ctx, args.trunc), args.format)
        sys.stdout.write(out)
        return EXIT_OK

    if args.command == "ss":
        bundle = BundleClass(args.rank, args.degree)
        path, cache = _open_cache(args, ctx)
        if args.hodge:
            out = render_hodge(
                ss_hodge_poincare(bundle, ctx, args.trunc, cache), args.format)
        else:
            out = render_series(
                ss_poincare(bundle, ctx, args.trunc, cache), args.format)
        sys.stdout.write(out)
        if path and not args.hodge:
            _store_cache(path, cache, ctx, args.trunc)
        return EXIT_OK

    if args.command == "stable":
        bundle = BundleClass(args.rank, args.degree)
        if args.hodge:
            numbers = moduli_hodge(bundle, ctx, conservative=args.conservative)
        else:
            numbers = moduli_betti(bundle, ctx, conservative=args.conservative)
        data, diag = render_moduli(numbers, args.hodge, args.format)
        sys.stdout.write(data)
        if diag:
            print(diag, file=sys.stderr)
        return EXIT_OK

    if args.command == "strata":
        bundle = BundleClass(args.rank, args.degree)
        strata = enumerate_hn_types(bundle, ctx, args.max_codim)
        sys.stdout.write(render_strata(strata, args.format))
        return EXIT_OK

    if args.command == "verify":
        bundle = BundleClass(args.rank, args.degree)
        path, cache = _open_cache(args, ctx)
        report = verify_strata_identity(bundle, ctx, args.trunc, cache)
        sys.stdout.write(render_verify(report, args.format))
        if path:
            _store_cache(path, cache, ctx, args.trunc)
        return EXIT_OK if report.passed else EXIT_VERIFY_FAILED

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = run(args)
        for warning in caught:
            print(f"shatz: warning: {warning.message}", file=sys.stderr)
        return code
    except ValueError as exc:
        print(f"shatz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
