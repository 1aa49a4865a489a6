"""Command line surface: digits, class tables, census figure, rule verification.

Every command writes deterministic bytes for a given invocation: worker
count and cache state never change output.  Exit codes: 0 success, 1 usage
or input error, 2 hard rule failure found by `verify`, 3 cache corruption.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .census import (
    CensusRow,
    ClassKey,
    ParityScanReport,
    PrimeProfile,
    batch_records,
    census_primes,
    classify,
    global_digit_census,
    third_digit_parity_scan,
)
from .invariants import VerificationSummary, verify_range
from .sequence import DigitHistogram, ReciprocalSpec, digit_prefix
from .store import CacheCorruptionError, ResultCache
from .tables import table_rows

__all__ = ["main", "run"]

DEFAULT_CACHE = "dseq-cache.csv"
CACHE_ENV = "DSEQ_CACHE"
FULL_RANGE_LIMIT = 999983
DEFAULT_LIMIT = 100_000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 1, not argparse's 2
        raise _UsageError(f"{self.prog}: {message}")


def _add_run_options(p: argparse.ArgumentParser, *, full_range: bool = False) -> None:
    p.add_argument("--cache", metavar="PATH",
                   help=f"cache file (default ${CACHE_ENV} or {DEFAULT_CACHE})")
    p.add_argument("--no-cache", action="store_true", help="disable the cache")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="worker processes (default 1)")
    if full_range:
        p.add_argument("--full-range", action="store_true",
                       help=f"run the full range, limit {FULL_RANGE_LIMIT}")


def _add_limit_format(p: argparse.ArgumentParser, choices: tuple[str, ...]) -> None:
    # one optional-positional pool: an integer is the limit, a word the format
    p.add_argument("positional", nargs="*", metavar="[limit] [format]")
    p.add_argument("--limit", dest="limit_opt", type=int, default=None)
    p.add_argument("--format", dest="format_opt", choices=choices, default=None)
    p.set_defaults(format_choices=choices)


def _split_positional(args) -> tuple[int | None, str | None]:
    limit = fmt = None
    for tok in args.positional:
        if tok.isdigit():
            if limit is not None:
                raise _UsageError(f"dseq: two limits given: {limit} and {tok}")
            limit = int(tok)
        elif tok in args.format_choices:
            if fmt is not None:
                raise _UsageError(f"dseq: two formats given: {fmt} and {tok}")
            fmt = tok
        else:
            raise _UsageError(f"dseq: unrecognized argument {tok!r}")
    return limit, fmt


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dseq",
                     description="Base-10 prime reciprocal sequence toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("digits", help="print the first n digits of 1/p")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_digits)

    p = sub.add_parser("tables", help="recompute one of the eight class tables")
    p.add_argument("number", type=int, metavar="N")
    _add_run_options(p)
    p.set_defaults(handler=_cmd_tables)

    p = sub.add_parser("figure", help="aggregate digit census over primes <= limit")
    _add_limit_format(p, ("csv", "json", "svg"))
    p.add_argument("--full-half-only", action="store_true",
                   help="drop primes whose period is neither p-1 nor (p-1)/2")
    _add_run_options(p, full_range=True)
    p.set_defaults(handler=_cmd_figure)

    p = sub.add_parser("verify", help="check structural rules over primes <= limit")
    _add_limit_format(p, ("csv", "json"))
    _add_run_options(p, full_range=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("profile", help="classify one prime")
    p.add_argument("p", type=int)
    p.add_argument("format", nargs="?", choices=("csv", "json"), default=None)
    p.add_argument("--format", dest="format_opt", choices=("csv", "json"),
                   default=None)
    _add_run_options(p)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("census", help="histogram rows for one class of primes")
    _add_limit_format(p, ("csv", "json"))
    p.add_argument("--lsd", type=int, choices=(1, 3, 7, 9), required=True)
    p.add_argument("--parity", choices=("even", "odd"), required=True)
    p.add_argument("--length", choices=("full", "half", "other"), required=True)
    _add_run_options(p)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("scan-parity",
                       help="hundreds-digit parity pattern of half-length primes")
    _add_limit_format(p, ("csv", "json"))
    _add_run_options(p)
    p.set_defaults(handler=_cmd_scan_parity)

    return parser


def _resolve_limit_format(args) -> tuple[int, str]:
    pos_limit, pos_fmt = _split_positional(args)
    if pos_limit is not None and args.limit_opt is not None:
        raise _UsageError("dseq: give the limit either positionally or via --limit")
    if pos_fmt is not None and args.format_opt is not None:
        raise _UsageError("dseq: give the format either positionally or via --format")
    limit = args.limit_opt if args.limit_opt is not None else pos_limit
    fmt = args.format_opt if args.format_opt is not None else pos_fmt
    if getattr(args, "full_range", False):
        if limit is not None:
            raise _UsageError("dseq: --full-range replaces the limit; drop one")
        limit = FULL_RANGE_LIMIT
    elif limit is None:
        limit = DEFAULT_LIMIT
    return limit, "csv" if fmt is None else fmt


@contextlib.contextmanager
def _open_cache(args):
    if args.no_cache:
        yield None
        return
    path = args.cache or os.environ.get(CACHE_ENV) or DEFAULT_CACHE
    with ResultCache(path) as cache:
        yield cache


def _jobs(args) -> int:
    if args.jobs < 1:
        raise _UsageError("dseq: --jobs must be >= 1")
    return args.jobs


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- renderers

def _rows_csv(rows: list[CensusRow]) -> str:
    lines = ["prime,c0,c1,c2,c3,c4,c5,c6,c7,c8,c9"]
    for row in rows:
        lines.append(",".join([str(row.p)] + [str(c) for c in row.histogram.counts]))
    return "\n".join(lines) + "\n"


def _rows_json(limit, key: ClassKey, rows: list[CensusRow]) -> str:
    return _json_dump({
        "limit": limit,
        "key": {"lsd": key.lsd, "second_parity": key.second_parity,
                "length_class": key.length_class},
        "rows": [{"prime": r.p, "counts": list(r.histogram.counts)} for r in rows],
    })


def _figure_csv(hist: DigitHistogram) -> str:
    lines = ["digit,count"]
    lines += [f"{d},{c}" for d, c in enumerate(hist.counts)]
    return "\n".join(lines) + "\n"


def _figure_json(limit: int, include_other: bool, hist: DigitHistogram) -> str:
    return _json_dump({
        "limit": limit,
        "include_other": include_other,
        "counts": list(hist.counts),
        "total": hist.total,
    })


def _figure_svg(limit: int, hist: DigitHistogram) -> str:
    width, height = 640, 400
    left, right, top, bottom = 70, 20, 40, 50
    plot_w, plot_h = width - left - right, height - top - bottom
    peak = max(hist.counts) or 1
    slot = plot_w / 10
    bar_w = slot * 0.7
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">Digit frequencies, primes &#8804; {limit}</text>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{height - bottom}" '
        f'stroke="black"/>',
        f'<line x1="{left}" y1="{height - bottom}" x2="{width - right}" '
        f'y2="{height - bottom}" stroke="black"/>',
        f'<text x="{left - 8}" y="{height - bottom + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="12">0</text>',
        f'<text x="{left - 8}" y="{top + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="12">{peak}</text>',
    ]
    for d, count in enumerate(hist.counts):
        h = plot_h * count / peak
        x = left + slot * d + (slot - bar_w) / 2
        y = height - bottom - h
        parts.append(
            f'<rect x="{x:.1f}" y="{y:.1f}" width="{bar_w:.1f}" height="{h:.1f}" '
            f'fill="#4477aa"/>'
        )
        parts.append(
            f'<text x="{left + slot * (d + 0.5):.1f}" y="{height - bottom + 18}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="12">{d}</text>'
        )
    parts.append(
        f'<text x="{width / 2:.1f}" y="{height - 8}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">digit</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _verify_csv(summary: VerificationSummary) -> str:
    lines = ["rule,checked,hard_failures,strong_failures,soft_passed,soft_checked"]
    for rule, st in summary.rules.items():
        lines.append(
            f"{rule},{st.checked},{st.hard_failures},{st.strong_failures},"
            f"{sum(st.soft_passed.values())},{sum(st.soft_checked.values())}"
        )
    return "\n".join(lines) + "\n"


def _verify_json(summary: VerificationSummary) -> str:
    rules = []
    for rule, st in summary.rules.items():
        soft_rates = {
            name: {
                "passed": st.soft_passed[name],
                "checked": st.soft_checked[name],
                "rate": round(st.soft_passed[name] / st.soft_checked[name], 6),
            }
            for name in sorted(st.soft_checked)
        }
        rules.append({
            "rule": rule,
            "checked": st.checked,
            "hard_failures": st.hard_failures,
            "strong_failures": st.strong_failures,
            "soft_rates": soft_rates,
        })
    violations = [
        {
            "p": v.p,
            "rule": v.rule,
            "hard_passed": v.hard_passed,
            "strong_passed": v.strong_passed,
            "details": list(v.details),
        }
        for v in summary.violations
    ]
    return _json_dump({"limit": summary.limit, "rules": rules,
                       "violations": violations})


def _profile_csv(prof: PrimeProfile) -> str:
    return (
        "p,l,period,k,lsd,second_parity,length_class\n"
        f"{prof.p},{prof.l},{prof.period},{prof.cofactor},"
        f"{prof.key.lsd},{prof.key.second_parity},{prof.key.length_class}\n"
    )


def _profile_json(prof: PrimeProfile) -> str:
    return _json_dump({
        "p": prof.p,
        "l": prof.l,
        "period": prof.period,
        "cofactor": prof.cofactor,
        "lsd": prof.key.lsd,
        "second_parity": prof.key.second_parity,
        "length_class": prof.key.length_class,
    })


def _scan_csv(report: ParityScanReport) -> str:
    lines = ["lsd,second_digit,parities,count"]
    for (lsd, b), cell in report.entries.items():
        lines.append(f"{lsd},{b},{'|'.join(cell.parities)},{cell.count}")
    return "\n".join(lines) + "\n"


def _scan_json(report: ParityScanReport) -> str:
    return _json_dump({
        "limit": report.limit,
        "cells": [
            {"lsd": lsd, "second_digit": b, "parities": list(cell.parities),
             "count": cell.count}
            for (lsd, b), cell in report.entries.items()
        ],
    })


# ----------------------------------------------------------------- handlers

def _cmd_digits(args) -> int:
    if args.n < 0:
        raise ValueError(f"digit count must be >= 0, got {args.n}")
    spec = ReciprocalSpec.for_prime(args.p)
    line: list[str] = []
    out: list[str] = []
    for d in digit_prefix(spec, args.n):
        line.append(str(d))
        if len(line) == 80:
            out.append("".join(line))
            line = []
    if line:
        out.append("".join(line))
    if out:
        _emit("\n".join(out) + "\n")
    return 0


def _cmd_tables(args) -> int:
    with _open_cache(args) as cache:
        rows = table_rows(args.number, jobs=_jobs(args), cache=cache)
    _emit(_rows_csv(rows))
    return 0


def _resolve_format_only(args) -> str:
    if args.format is not None and args.format_opt is not None:
        raise _UsageError("dseq: give the format either positionally or via --format")
    fmt = args.format_opt if args.format_opt is not None else args.format
    return "csv" if fmt is None else fmt


def _cmd_figure(args) -> int:
    limit, fmt = _resolve_limit_format(args)
    include_other = not args.full_half_only
    with _open_cache(args) as cache:
        hist = global_digit_census(limit, include_other=include_other,
                                   jobs=_jobs(args), cache=cache)
    if fmt == "csv":
        _emit(_figure_csv(hist))
    elif fmt == "json":
        _emit(_figure_json(limit, include_other, hist))
    else:
        _emit(_figure_svg(limit, hist))
    return 0


def _cmd_verify(args) -> int:
    limit, fmt = _resolve_limit_format(args)
    with _open_cache(args) as cache:
        summary = verify_range(limit, jobs=_jobs(args), cache=cache)
    _emit(_verify_csv(summary) if fmt == "csv" else _verify_json(summary))
    return 2 if summary.hard_failures else 0


def _cmd_profile(args) -> int:
    fmt = _resolve_format_only(args)
    with _open_cache(args) as cache:
        prof = classify(args.p, cache=cache)
    _emit(_profile_csv(prof) if fmt == "csv" else _profile_json(prof))
    return 0


def _cmd_census(args) -> int:
    limit, fmt = _resolve_limit_format(args)
    key = ClassKey(args.lsd, args.parity, args.length)
    with _open_cache(args) as cache:
        selected = [
            p for p in census_primes(limit)
            if classify(p, cache=cache).key == key
        ]
        records = batch_records(selected, jobs=_jobs(args), cache=cache)
    rows = [CensusRow(r.p, DigitHistogram(r.counts)) for r in records]
    _emit(_rows_csv(rows) if fmt == "csv" else _rows_json(limit, key, rows))
    return 0


def _cmd_scan_parity(args) -> int:
    limit, fmt = _resolve_limit_format(args)
    with _open_cache(args) as cache:
        report = third_digit_parity_scan(limit, cache=cache)
    _emit(_scan_csv(report) if fmt == "csv" else _scan_json(report))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CacheCorruptionError as exc:
        print(f"cache corruption: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
