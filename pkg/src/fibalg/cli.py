"""Command-line front end.

    fibalg verify --suite all --seed 42
    fibalg verify --suite cassini --algebra quaternion:1,1 --m-range 0..0
    fibalg show table --algebra octonion:1,1,1
    fibalg show fib-element --algebra quaternion:1,1 --m 0
    fibalg show cross --dim 7 --k 0 --m 1

Exit codes: 0 all cases pass, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import algebra as alg
from .elements import fib_element
from .errors import InputError
from .scalars import parse_rational
from .suites import SUITES, SuiteConfig, run
from .vectors import imaginary_fib_vector
from .cross import cross

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
# options whose values may start with '-' (e.g. --m-range -15..15)
_NEGATIVE_VALUED = ("--m-range", "--algebra", "--m", "--k", "--corrupt")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2) directly
        raise UsageError(f"{self.prog}: error: {message}")


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_corrupt(text: str):
    # "i,j,k=value"
    try:
        idx, value = text.split("=")
        i, j, k = (int(v) for v in idx.split(","))
        return i, j, k, parse_rational(value)
    except (ValueError, InputError):
        raise argparse.ArgumentTypeError(f"expected I,J,K=VALUE, got {text!r}") from None


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _NEGATIVE_VALUED:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _algebra_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algebra", action="append", default=[], metavar="KIND:PARAMS",
                   help="quaternion:a,b or octonion:a,b,c with exact fractions, e.g. quaternion:-1,2/3")
    p.add_argument("--algebra-file", action="append", default=[], type=Path, metavar="PATH",
                   help="custom algebra in the JSON table format (see `show spec`)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibalg", description="Exact Fibonacci elements over finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity verification suites")
    v.add_argument("--suite", default="all", choices=SUITES + ("all",))
    v.add_argument("--m-range", type=_parse_range, default=(-15, 15), metavar="LO..HI")
    v.add_argument("--p-max", type=int, default=200)
    v.add_argument("--k-max", type=int, default=30)
    v.add_argument("--neg-max", type=int, default=100)
    v.add_argument("--series-degree", type=int, default=100)
    v.add_argument("--johnson-max", type=int, default=20)
    v.add_argument("--shift-max", type=int, default=10)
    v.add_argument("--cassini-max", type=int, default=60)
    _algebra_args(v)
    v.add_argument("--random-count", type=int, default=None,
                   help="random algebras (default 20, or 0 when --algebra/--algebra-file is given)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--elements", type=int, default=500)
    v.add_argument("--pairs", type=int, default=1000)
    v.add_argument("--corrupt", type=_parse_corrupt, default=None, metavar="I,J,K=VALUE",
                   help="fault injection: use this structure constant on the Cassini left-hand side only")
    v.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    v.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes output non-reproducible)")

    s = sub.add_parser("show", help="print tables, Fibonacci elements, cross products")
    s.add_argument("what", choices=("table", "fib-element", "cross", "spec"))
    _algebra_args(s)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--dim", type=int, choices=(3, 7), default=3)
    return parser


def _load_algebras(args) -> list[alg.AlgebraSpec]:
    specs = [alg.named_algebra(a) for a in args.algebra]
    for path in args.algebra_file:
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
        specs.append(alg.loads_spec(text))
    return specs


def _config(args) -> SuiteConfig:
    specs = _load_algebras(args)
    cfg = SuiteConfig(
        suite=args.suite,
        m_min=args.m_range[0],
        m_max=args.m_range[1],
        p_max=args.p_max,
        k_max=args.k_max,
        neg_max=args.neg_max,
        series_degree=args.series_degree,
        johnson_max=args.johnson_max,
        shift_max=args.shift_max,
        cassini_max=args.cassini_max,
        seed=args.seed,
        elements=args.elements,
        pairs=args.pairs,
        corrupt=args.corrupt,
        timing=args.timing,
        fmt=args.fmt,
    )
    if specs:
        cfg.algebras = tuple(specs)
        cfg.random_count = 0
    if args.random_count is not None:
        cfg.random_count = args.random_count
    cfg.validate()
    return cfg


def _render_text(report) -> str:
    lines = []
    for part in report.parts or [report]:
        lines.append(part.summary())
        for f in part.failures:
            inputs = ", ".join(f"{k}={v}" for k, v in f.inputs.items())
            lines.append(f"  {f.op}({inputs}): lhs={f.lhs} rhs={f.rhs}")
    if report.parts:
        lines.append(report.summary())
    return "\n".join(lines) + "\n"


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    report = run(cfg)
    if cfg.fmt == "json":
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        out.write(_render_text(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def format_table(spec: alg.AlgebraSpec) -> str:
    head = ["1"] + [f"e{i}" for i in range(1, spec.dim)]
    rows = [[head[i]] + [alg.format_combo(spec.table[i][j]) for j in range(spec.dim)] for i in range(spec.dim)]
    width = max(len(c) for r in rows for c in r + [head])
    lines = [" " * width + " | " + " ".join(h.rjust(width) for h in head)]
    lines.append("-" * len(lines[0]))
    lines += [r[0].rjust(width) + " | " + " ".join(c.rjust(width) for c in r[1:]) for r in rows]
    return "\n".join(lines)


def cmd_show(args, out) -> int:
    if args.what == "cross":
        x = imaginary_fib_vector(args.k, args.dim).vec
        y = imaginary_fib_vector(args.m, args.dim).vec
        out.write(f"{cross(x, y)}\n")
        return EXIT_OK
    specs = _load_algebras(args)
    if len(specs) != 1:
        raise InputError("show needs exactly one --algebra or --algebra-file")
    spec = specs[0]
    if args.what == "table":
        out.write(format_table(spec) + "\n")
    elif args.what == "fib-element":
        out.write(alg.format_coords(fib_element(spec, args.m).coords) + "\n")
    else:
        out.write(alg.dumps_spec(spec))
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_show(args, out)
    except (UsageError, InputError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
