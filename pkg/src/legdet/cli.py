"""Command-line front end.

Subcommands: invariants, det, verify, scan, discover, selftest.

Matrix grammar for ``det`` (fields separated by ``;``)::

    n=<odd int>; rows=<lo>..<hi>; cols=<lo>..<hi>; atom=[<weight>:]<expr>; vars=<x,y,z,w subset>

``p`` is accepted for ``n``; ``range`` sets rows and cols at once; bounds may
use ``n``/``p`` (``0..(p-1)/2``); ``atom`` repeats and ``<expr>`` is a
quadratic in j, k with integer coefficients, e.g. ``j^2+3jk+2k^2``.

Exit codes: 0 all good, 1 a counterexample candidate or failed discovery,
2 usage error (bad range, unknown id, malformed spec).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import quadfield
from .arith import is_prime
from .detengine import ENGINES, choose_engine, det_mod
from .matrixgen import build_numeric, parse_spec
from .multiaffine import MultiAffinePoly, det_poly, render
from .quadfield import QuadInt, QuadInvariants, invariants
from .registry import (
    DiscoveryError,
    UnknownIdentity,
    VerificationReport,
    all_identities,
    discover,
    has_unknown_at,
    moduli,
    scan,
    select,
)

log = logging.getLogger("legdet")

SCHEMA_VERSION = 1
REPORT_FIELDS = ("id", "modulus", "outcome", "computed", "expected", "residual", "engine", "millis", "unknown")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ cache


@dataclass(frozen=True)
class CacheRecord:
    p: int
    eps: tuple[int, int]
    ab: tuple[int, int]
    ab_prime: tuple[int, int]
    h_plus: int
    h_minus: int
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_invariants(cls, inv: QuadInvariants) -> CacheRecord:
        pair = lambda q: (q.two_a, q.two_b)  # noqa: E731
        return cls(inv.p, pair(inv.eps), pair(inv.ab), pair(inv.ab_prime), inv.h_plus, inv.h_minus)

    def to_invariants(self) -> QuadInvariants:
        q = lambda t: QuadInt(t[0], t[1], self.p)  # noqa: E731
        return QuadInvariants(self.p, q(self.eps), self.h_plus, self.h_minus, q(self.ab), q(self.ab_prime))

    def to_json(self) -> str:
        return json.dumps({
            "schema_version": self.schema_version, "p": self.p,
            "eps": list(self.eps), "ab": list(self.ab), "ab_prime": list(self.ab_prime),
            "h_plus": self.h_plus, "h_minus": self.h_minus,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> CacheRecord:
        d = json.loads(line)
        return cls(int(d["p"]), tuple(d["eps"]), tuple(d["ab"]), tuple(d["ab_prime"]),
                   int(d["h_plus"]), int(d["h_minus"]), int(d["schema_version"]))


def cache_store(path: str | Path, records: Iterable[CacheRecord], append: bool = False) -> None:
    with open(path, "a" if append else "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def cache_load(path: str | Path) -> list[CacheRecord]:
    """Records from a JSONL cache; bad lines are skipped, an old schema drops everything."""
    path = Path(path)
    if not path.exists():
        return []
    out = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = CacheRecord.from_json(line)
        except (ValueError, KeyError, TypeError, IndexError):
            log.warning("%s:%d: skipping unreadable cache line", path, lineno)
            continue
        if rec.schema_version != SCHEMA_VERSION:
            log.warning("%s: schema version %s != %s, ignoring cache", path, rec.schema_version, SCHEMA_VERSION)
            return []
        out.append(rec)
    return out


def _use_cache(path: str | None, primes: Iterable[int]) -> None:
    """Seed the invariant memo from the cache and append whatever was missing."""
    if path is None:
        return
    records = {r.p: r for r in cache_load(path)}
    quadfield.seed_memo({p: r.to_invariants() for p, r in records.items()})
    fresh = [CacheRecord.from_invariants(invariants(p)) for p in primes if p not in records]
    if fresh:
        cache_store(path, fresh, append=True)


# ---------------------------------------------------------------- output


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _range_moduli(args) -> list[int]:
    if bool(args.primes) == bool(args.odd):
        raise UsageError("give exactly one of --primes A..B or --odd A..B")
    lo, hi = _parse_range(args.primes or args.odd)
    ns = moduli(lo, hi, primes_only=bool(args.primes))
    if not ns:
        raise UsageError("range contains no odd moduli")
    return ns


def _format(args) -> str:
    if args.format:
        return args.format
    return "table" if sys.stdout.isatty() else "json"


def _emit_rows(rows: Sequence[dict], fmt: str, fields: Sequence[str], out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(fields), lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow(row)
    else:
        table = [["" if row.get(f) is None else str(row[f]) for f in fields] for row in rows]
        widths = [max([len(f)] + [min(len(r[i]), 60) for r in table]) for i, f in enumerate(fields)]
        out.write("  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip() + "\n")
        for r in table:
            cells = [c if len(c) <= 60 else c[:57] + "..." for c in r]
            out.write("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() + "\n")


def emit_reports(reports: Sequence[VerificationReport], fmt: str, timing: bool = True, out=None) -> None:
    out = out or sys.stdout
    _emit_rows([r.as_dict(timing) for r in reports], fmt, REPORT_FIELDS, out)


# ---------------------------------------------------------------- commands


def cmd_invariants(args) -> int:
    lo, hi = _parse_range(args.primes)
    ps = [p for p in range(max(lo, 3), hi + 1) if is_prime(p)]
    if not ps:
        raise UsageError("range contains no odd primes")
    _use_cache(args.cache, ps)
    rows = []
    for p in ps:
        inv = invariants(p)
        rows.append({
            "p": p, "eps_2a": inv.eps.two_a, "eps_2b": inv.eps.two_b,
            "h_plus": inv.h_plus, "h_minus": inv.h_minus,
            "2a": inv.ab.two_a, "2b": inv.ab.two_b,
            "2a_prime": inv.ab_prime.two_a, "2b_prime": inv.ab_prime.two_b,
        })
    _emit_rows(rows, _format(args), list(rows[0]), sys.stdout)
    return 0


def cmd_det(args) -> int:
    try:
        spec = parse_spec(args.spec)
    except (ValueError, SyntaxError) as exc:
        raise UsageError(f"bad matrix spec: {exc}") from None
    if args.mod is not None:
        if args.mod < 2:
            raise UsageError("--mod must be at least 2")
        if spec.vars:
            poly = det_poly(spec, choose_engine(spec.size, args.engine))
            print(render(MultiAffinePoly({k: v % args.mod for k, v in poly.coeffs.items()})))
        else:
            print(det_mod(build_numeric(spec), args.mod))
        return 0
    print(render(det_poly(spec, choose_engine(spec.size, args.engine))))
    return 0


def _selected(args):
    try:
        return select(args.id or ["*"])
    except UnknownIdentity as exc:
        raise UsageError(f"unknown identity {exc.args[0]}") from None


def cmd_verify(args) -> int:
    if not args.id:
        raise UsageError("verify needs --id")
    return _run_scan(args)


def _run_scan(args) -> int:
    ids = _selected(args)
    ns = _range_moduli(args)
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    _use_cache(args.cache, [n for n in ns if is_prime(n)] if args.cache else [])
    reports = scan(ids, ns, engine=args.engine, jobs=args.jobs)
    if not args.all:
        reports = [r for r in reports if r.outcome != "inapplicable"]
    if not reports:
        raise UsageError("no identity applies to any modulus in the range")
    emit_reports(reports, _format(args), timing=not args.no_timing)
    return 1 if any(r.outcome in ("mismatch", "guard_failed") for r in reports) else 0


def cmd_discover(args) -> int:
    ids = [i for i in _selected(args) if i.unknown]
    if not ids:
        raise UsageError("no selected identity has an unknown")
    ns = _range_moduli(args)
    _use_cache(args.cache, [n for n in ns if is_prime(n)] if args.cache else [])
    rows, failed = [], False
    for ident in ids:
        for p in ns:
            if not has_unknown_at(ident, p):
                continue
            published = ident.published.get(p)
            try:
                value = discover(ident, p, args.engine)
            except DiscoveryError as exc:
                rows.append({"id": ident.id, "unknown": ident.unknown, "p": p, "value": "",
                             "published": published, "status": f"failed: {exc}"})
                failed = True
                continue
            if published is None:
                status = "new"
            else:
                status = "agrees" if published == value else "DISAGREES"
            rows.append({"id": ident.id, "unknown": ident.unknown, "p": p, "value": value,
                         "published": published, "status": status})
    if not rows:
        raise UsageError("no applicable primes in range")
    _emit_rows(rows, _format(args), ["id", "unknown", "p", "value", "published", "status"], sys.stdout)
    return 1 if failed else 0


def selftest_cases():
    """(label, thunk returning (got, want)) for the quick sanity suite."""
    from .arith import euler_phi, jacobi, sum_two_squares
    from .detengine import det_bareiss, det_modular
    from .matrixgen import chapman_matrix, family
    from .multiaffine import interpolate
    from .quadfield import class_number_imag
    from .roster import curly

    return [
        ("jacobi(2,7)", lambda: (jacobi(2, 7), 1)),
        ("jacobi(5,21)", lambda: (jacobi(5, 21), 1)),
        ("phi(21)", lambda: (euler_phi(21), 12)),
        ("two squares 25", lambda: (sum_two_squares(25) is not None, True)),
        ("det C_7(1)", lambda: (det_bareiss(chapman_matrix(7, "C", 1)), -8)),
        ("modular det C_7(1)", lambda: (det_modular(chapman_matrix(7, "C", 1)), -8)),
        ("evil-x at 5", lambda: (render(det_poly(family("j-k", "0..2", vars="x").at(5))), "-2 - 5*x")),
        ("j+k at 7", lambda: (render(det_poly(family("j+k", "0..3", vars="xyz").at(7))),
                              "8 + 8*y + 8*z + 8*y*z")),
        ("interpolate", lambda: (render(interpolate([-2, -7], "x")), "-2 - 5*x")),
        ("{3,2}_7", lambda: (curly(3, 2, 7), 3)),
        ("h(-23)", lambda: (class_number_imag(23), 3)),
        ("eps_5", lambda: ((invariants(5).eps.two_a, invariants(5).eps.two_b), (1, 1))),
        ("roster size", lambda: (len(all_identities()) > 60, True)),
    ]


def cmd_selftest(args) -> int:
    bad = 0
    for label, thunk in selftest_cases():
        got, want = thunk()
        ok = got == want
        bad += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {label}: {got!r}" + ("" if ok else f" (want {want!r})"))
    return 1 if bad else 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legdet", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ranges=True):
        if ranges:
            p.add_argument("--primes", metavar="A..B", help="odd primes in [A, B]")
            p.add_argument("--odd", metavar="A..B", help="odd integers in [A, B]")
        p.add_argument("--engine", choices=ENGINES, default="auto")
        p.add_argument("--format", choices=("table", "json", "csv"))
        p.add_argument("--cache", metavar="PATH", help="JSONL invariant cache")

    p = sub.add_parser("invariants", help="fundamental units, class numbers, a_p, b_p")
    p.add_argument("--primes", metavar="A..B", required=True)
    p.add_argument("--format", choices=("table", "json", "csv"))
    p.add_argument("--cache", metavar="PATH")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("det", help="determinant polynomial of one matrix spec")
    p.add_argument("spec")
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--mod", type=int, metavar="M", help="reduce modulo M")
    p.set_defaults(func=cmd_det)

    for name, func, helptext in (("verify", cmd_verify, "check selected identities"),
                                 ("scan", _run_scan, "check identities (default all) over a range")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--id", action="append", metavar="GLOB")
        common(p)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--all", action="store_true", help="also list inapplicable moduli")
        p.add_argument("--no-timing", action="store_true", help="zero the millis column")
        p.set_defaults(func=func)

    p = sub.add_parser("discover", help="solve for the unknown integer sequences")
    p.add_argument("--id", action="append", metavar="GLOB")
    common(p)
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("selftest", help="quick sanity suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"legdet: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
