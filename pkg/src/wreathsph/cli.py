"""Command-line surface: validate data, print indicator matrices, decompose
induced characters, emit spherical tables, reconcile engines, run the
acceptance suite.  All algebra lives in the library modules; this file only
parses arguments and formats output.

Exit codes: 0 ok, 1 mathematical violation or bad data, 2 usage, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .acceptance import run_criteria
from .groups import (
    CapExceeded,
    GroupError,
    linear_characters,
    load_group,
    load_table,
    validate_table,
)
from .spherical import (
    Caps,
    SphericalContext,
    build_table,
    cache_key,
    cache_load,
    cache_store,
    reconcile,
)
from .wreath import PI_NAMES, decompose_induced

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    """One fully-specified run: data files, twist, sign character, degree,
    caps, and output routing.  The pi name ranges over exactly the four
    linear characters of the block-centralizer subgroup."""

    group_path: str
    table_path: str
    xi: str
    pi: str
    n: int
    fmt: str = "csv"
    out: str | None = None
    cap_elements: int = 10**6
    cap_classwork: int = 10**7

    def __post_init__(self):
        if self.pi not in PI_NAMES:
            raise ValueError(f"unknown pi name {self.pi!r}; expected one of {PI_NAMES}")
        if self.n < 1:
            raise ValueError(f"degree must be positive, got {self.n}")

    @staticmethod
    def from_args(args) -> "RunConfig":
        return RunConfig(
            args.group,
            args.table,
            args.xi,
            args.pi,
            args.n,
            getattr(args, "format", "csv"),
            getattr(args, "out", None),
            args.cap_elements,
            args.cap_classwork,
        )


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_pair(args):
    group = load_group(args.group)
    table = load_table(args.table, group)
    return group, table


def _context(args, group, table) -> SphericalContext:
    config = RunConfig.from_args(args)
    try:
        xi = table.row_by_name(config.xi)
    except KeyError as e:
        raise GroupError(str(e)) from None
    caps = Caps(max_elements=config.cap_elements, max_classwork=config.cap_classwork)
    return SphericalContext(group, table, xi, config.pi, config.n, caps)


def cmd_validate(args) -> int:
    group = load_group(args.group)
    table = load_table(args.table, group, validate=False)
    problems = validate_table(group, table)
    if problems:
        for p in problems:
            print(f"violation: {p}")
        return EXIT_MATH
    print(
        f"ok: {group.name} of order {group.order}, {len(group.classes)} classes, "
        f"table validated"
    )
    return EXIT_OK


def cmd_nu2(args) -> int:
    from .groups import twisted_indicator

    group, table = _load_pair(args)
    lin = linear_characters(table)
    matrix = [
        [twisted_indicator(table, xi, chi) for xi in lin]
        for chi in range(len(table.rows))
    ]
    if args.format == "json":
        obj = {
            "group": group.name,
            "rows": list(table.names),
            "cols": [table.names[xi] for xi in lin],
            "matrix": matrix,
        }
        _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = ["chi," + ",".join(table.names[xi] for xi in lin)]
        for chi, row in enumerate(matrix):
            lines.append(table.names[chi] + "," + ",".join(str(v) for v in row))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    group, table = _load_pair(args)
    ctx = _context(args, group, table)
    dec = decompose_induced(
        table, ctx.theta, ctx.caps.max_elements, ctx.caps.max_classwork
    )
    items = sorted(dec.items(), key=lambda kv: kv[0].sort_key())
    if args.format == "json":
        obj = {
            "group": group.name,
            "xi": args.xi,
            "pi": args.pi,
            "n": args.n,
            "components": [
                {"label": lam.to_json(table.names), "multiplicity": m}
                for lam, m in items
            ],
        }
        _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = ["label,multiplicity"]
        for lam, m in items:
            lab = ";".join(
                f"{k}:{'+'.join(map(str, v))}"
                for k, v in lam.to_json(table.names).items()
            )
            lines.append(f"{lab},{m}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _table_payload(args, group, table) -> str:
    key = None
    if args.cache_dir:
        key = cache_key(
            Path(args.group).read_bytes(),
            Path(args.table).read_bytes(),
            args.xi,
            args.pi,
            args.n,
            args.engine,
        )
        hit = cache_load(args.cache_dir, key)
        if hit is not None:
            return hit
    ctx = _context(args, group, table)
    tab = build_table(ctx, args.engine)
    payload = tab.to_json()
    if key:
        cache_store(args.cache_dir, key, payload)
    return payload


def cmd_spherical(args) -> int:
    group, table = _load_pair(args)
    payload = _table_payload(args, group, table)
    if args.format == "json":
        _emit(payload, args.out)
    else:
        obj = json.loads(payload)

        def label(d: dict) -> str:
            return ";".join(f"{k}:{'+'.join(map(str, v))}" for k, v in d.items()) or "1"

        lines = [",".join(["label"] + [label(c) for c in obj["cols"]])]
        for rl, row in zip(obj["rows"], obj["values"]):
            lines.append(",".join([label(rl)] + row))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_reconcile(args) -> int:
    group, table = _load_pair(args)
    ctx = _context(args, group, table)
    report = reconcile(ctx)
    _emit(report.to_json(), args.out)
    if not report.ok():
        print(f"reconcile: {len(report.mismatches)} mismatches", file=sys.stderr)
    return EXIT_OK


def cmd_selftest(args) -> int:
    numbers = None
    if args.criteria:
        numbers = [int(v) for v in args.criteria.split(",")]
    results = run_criteria(numbers)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathsph",
        description="exact spherical functions of wreath-product Gelfand triples",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, need_table=True):
        p.add_argument("--group", required=True, help="group JSON file")
        if need_table:
            p.add_argument("--table", required=True, help="character table JSON file")

    def add_run(p):
        p.add_argument("--xi", required=True, help="linear character name, e.g. chi2")
        p.add_argument("--pi", required=True, choices=PI_NAMES)
        p.add_argument("--n", required=True, type=int)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--cap-elements", type=int, default=10**6)
        p.add_argument("--cap-classwork", type=int, default=10**7)

    p = sub.add_parser("validate", help="check group axioms and table orthogonality")
    add_io(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("nu2", help="print the twisted indicator matrix")
    add_io(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_nu2)

    p = sub.add_parser("decompose", help="decompose the induced character")
    add_io(p)
    add_run(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("spherical", help="emit the spherical-function table")
    add_io(p)
    add_run(p)
    p.add_argument("--engine", choices=("brute", "closed", "symfunc"), default="brute")
    p.add_argument("--cache-dir", help="content-addressed table cache directory")
    p.set_defaults(func=cmd_spherical)

    p = sub.add_parser("reconcile", help="cross-check all engines, emit a report")
    add_io(p)
    add_run(p)
    p.set_defaults(func=cmd_reconcile)

    p = sub.add_parser("selftest", help="run the bundled acceptance criteria")
    p.add_argument("--criteria", help="comma-separated criterion numbers (default all)")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_CAP
    except (GroupError, FileNotFoundError, json.JSONDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
