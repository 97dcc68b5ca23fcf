"""Command line entry point: ``stoimenow {enumerate,map,verify,conjecture,render}``.

Exit status is 0 on success, 1 when a verification check fails, 2 for
usage errors and 3 for domain errors (the error class name goes to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import Callable, Iterable, Sequence

from . import bijections as bij
from .cache import ENV_VAR, ObjectCache, cache_dir
from .errors import StoimenowError
from .matchings import matching_stats, parse_matching, stoimenow_matchings
from .patterns import avoiders, pattern_by_name
from .posets import enumerate_posets, format_poset, omega, parse_poset, stats as poset_stats
from .render import render_dyck, render_matching, render_poset
from .sequences import (
    delta,
    enumerate_ascent_sequences,
    enumerate_fishburn,
    format_permutation,
    format_sequence,
    lambda_,
    parse_permutation,
    parse_sequence,
    perm_ops,
    seq_stats,
    transpose_T,
)
from .verify import SUITES, VerifyReport, conjecture_rows, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

STRUCTURES = ("matching", "poset", "ascent", "fishburn-perm", "dyck")


class UsageError(Exception):
    pass


# -- enumerate --------------------------------------------------------------------


def _objects(structure: str, n: int, avoid: str | None) -> list[str]:
    """Objects of one structure as text, in a fixed order."""
    if structure == "matching":
        ms = stoimenow_matchings(n) if avoid is None else avoiders(n, pattern_by_name(avoid))
        return [str(m) for m in ms]
    if structure == "poset":
        if avoid not in (None, "3+1", "N"):
            raise UsageError("posets can avoid 3+1 or N")
        return [format_poset(p) for p in enumerate_posets(n, avoid)]
    if structure == "ascent":
        if avoid not in (None, "101", "0101"):
            raise UsageError("ascent sequences can avoid 101 or 0101")
        return [format_sequence(a) for a in enumerate_ascent_sequences(n, avoid)]
    if structure == "fishburn-perm":
        if avoid not in (None, "3142"):
            raise UsageError("Fishburn permutations can avoid 3142")
        return [format_permutation(p) for p in enumerate_fishburn(n, avoid == "3142")]
    if avoid is not None:
        raise UsageError("Dyck paths take no pattern")
    return list(bij.enumerate_dyck(n))


def _stats_of(structure: str, text: str) -> dict[str, int]:
    if structure == "matching":
        return matching_stats(parse_matching(text))
    if structure == "poset":
        return asdict(poset_stats(parse_poset(text)))
    if structure == "ascent":
        return asdict(seq_stats(parse_sequence(text)))
    if structure == "fishburn-perm":
        st = perm_ops(parse_permutation(text))
        return {"lmax": st.lmax, "rmin": st.rmin, "idr": st.idr}
    return {"h": bij.dyck_height(text)}


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out)
        out.write("\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    if len(keys) > 1:
        out.write("  ".join(k.ljust(widths[k]) for k in keys).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(r[k]).ljust(widths[k]) for k in keys).rstrip() + "\n")


def cmd_enumerate(args, out) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    root = cache_dir(args.cache_dir)
    cache = ObjectCache(root) if root is not None else None
    objs = cache.load(args.structure, args.n, args.avoid) if cache else None
    if objs is None:
        objs = _objects(args.structure, args.n, args.avoid)
        if cache:
            cache.store(args.structure, args.n, args.avoid, objs)
    if args.count:
        if args.format == "json":
            json.dump({"structure": args.structure, "n": args.n, "avoid": args.avoid, "count": len(objs)}, out)
            out.write("\n")
        else:
            out.write(f"{len(objs)}\n")
        return EXIT_OK
    rows = []
    for text in objs:
        row: dict = {"object": text}
        if args.stats:
            row.update(_stats_of(args.structure, text))
        rows.append(row)
    _emit_rows(rows, args.format, out)
    return EXIT_OK


# -- map ------------------------------------------------------------------------------


def _fmt_pair(a: str, b: str) -> str:
    return f"{a} | {b}"


def _mapping(name: str, k: int) -> Callable[[str], str]:
    seq, perm, match = parse_sequence, parse_permutation, parse_matching
    table: dict[str, Callable[[str], str]] = {
        "omega": lambda s: format_poset(omega(match(s))),
        "gamma": lambda s: str(bij.gamma(s.strip())),
        "gamma-inv": lambda s: bij.gamma_inverse(match(s)),
        "theta": lambda s: str(bij.theta(match(s))),
        "v": lambda s: str(bij.v_map(match(s))),
        "split-p1": lambda s: _fmt_pair(*map(str, bij.split_p1(match(s)))),
        "split-p2": lambda s: _fmt_pair(*map(str, bij.split_p2(match(s)))),
        "phi": lambda s: str(bij.phi(match(s), k)),
        "phi-inv": lambda s: str(bij.phi_inverse(match(s), k)),
        "psi": lambda s: format_sequence(bij.psi_p2(match(s))),
        "psi-inv": lambda s: str(bij.psi_p2_inverse(seq(s))),
        "upsilon": lambda s: format_permutation(bij.upsilon_p2(match(s))),
        "upsilon-inv": lambda s: str(bij.upsilon_p2_inverse(perm(s))),
        "lambda": lambda s: format_permutation(lambda_(seq(s))),
        "delta": lambda s: format_sequence(delta(seq(s))),
        "transpose": lambda s: format_permutation(transpose_T(seq(s))),
    }
    return table[name]


BIJECTIONS = (
    "omega", "gamma", "gamma-inv", "theta", "v", "split-p1", "split-p2", "phi", "phi-inv",
    "psi", "psi-inv", "upsilon", "upsilon-inv", "lambda", "delta", "transpose",
)


def cmd_map(args, out) -> int:
    if args.input is None:
        raise UsageError("map needs --input")
    result = _mapping(args.bijection, args.k)(args.input)
    if args.format == "json":
        json.dump({"bijection": args.bijection, "input": args.input, "output": result}, out)
        out.write("\n")
    else:
        out.write(result + "\n")
    return EXIT_OK


# -- verify and conjecture ---------------------------------------------------------------


def _run_suites(names: Sequence[str], max_n: int | None, jobs: int) -> list[VerifyReport]:
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_suite, names, [max_n] * len(names)))
    return [run_suite(name, max_n) for name in names]


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = _run_suites(names, args.max_n, args.jobs)
    if args.format == "json":
        json.dump([r.to_dict() for r in reports], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        rows = [
            {"suite": r.suite, "check": c.name, "passed": c.passed, "n_min": c.n_range[0],
             "n_max": c.n_range[1], "seconds": c.seconds, "detail": c.detail}
            for r in reports for c in r.checks
        ]
        _emit_rows(rows, "csv", out)
    else:
        for r in reports:
            out.write(r.format_table() + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_conjecture(args, out) -> int:
    max_n = 9 if args.max_n is None else args.max_n
    if not 0 <= max_n <= 11:
        raise UsageError("--max-n must lie in 0..11")
    rows = conjecture_rows(max_n)
    data = [
        {"n": r.n, "agree": r.agree, "nr_M_P1": r.nr_p1, "h_P_3plus1": r.h_3plus1, "h_Dyck": r.h_dyck}
        for r in rows
    ]
    if args.format == "table":
        out.write("noncrossing size over M_n(P1) vs height over P_n(3+1) and D_n (reported, not asserted)\n")
    _emit_rows(data, args.format, out)
    return EXIT_OK


# -- render --------------------------------------------------------------------------------


def _guess_kind(text: str) -> str:
    s = text.strip()
    if s and set(s) <= {"U", "D"}:
        return "dyck"
    if s.startswith("{") and "relations" in s or ":" in s and "<" in s or s.endswith(":"):
        return "poset"
    return "matching"


def cmd_render(args, out) -> int:
    if args.input is None:
        raise UsageError("render needs --input")
    kind = args.kind or _guess_kind(args.input)
    if kind == "dyck":
        if not bij.is_dyck(args.input.strip()):
            raise UsageError(f"{args.input!r} is not a Dyck path")
        picture = render_dyck(args.input.strip())
    elif kind == "poset":
        picture = render_poset(parse_poset(args.input))
    else:
        picture = render_matching(parse_matching(args.input))
    out.write(picture + "\n")
    return EXIT_OK


# -- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stoimenow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Iterable[str] = ("table", "csv", "json")) -> None:
        p.add_argument("--format", choices=list(formats), default="table")

    p = sub.add_parser("enumerate", help="list or count objects of one size")
    p.add_argument("--structure", choices=STRUCTURES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--avoid", help="P1..P5, P2k:5 style family member, 3+1, N, 101, 0101 or 3142")
    p.add_argument("--count", action="store_true")
    p.add_argument("--stats", action="store_true", help="add statistic columns")
    p.add_argument("--cache-dir", help=f"reuse enumerations stored here (default ${ENV_VAR})")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply one bijection to one object")
    p.add_argument("--bijection", choices=BIJECTIONS, required=True)
    p.add_argument("--input")
    p.add_argument("--k", type=int, default=4, help="family member for phi / phi-inv")
    common(p, ("table", "json"))
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --suite all")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="compare three height-like distributions")
    p.add_argument("--max-n", type=int)
    common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("render", help="draw a matching, Dyck path or poset")
    p.add_argument("--input")
    p.add_argument("--kind", choices=("matching", "dyck", "poset"))
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except StoimenowError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


def capture(argv: Sequence[str]) -> tuple[int, str]:
    """Run the command line in-process and return ``(exit code, stdout text)``."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()
