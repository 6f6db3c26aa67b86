"""Command-line front end: construct, verify, check-family, gen-sudoku, info.

Exit codes: 0 on success/PASS, 1 on a verification FAIL, 2 on parse or
domain errors.  All output is deterministic: identical invocations produce
byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .families import construct_family, max_guaranteed_s
from .files import (
    ParseError,
    array_from_text,
    array_to_text,
    flags_from_text,
    flags_to_text,
    grid_to_text,
)
from .gf import find_generator, make_field
from .ooa import assemble, verify
from .strong import FlagData, check_algebraic, check_combinatorial
from .sudoku import generate


def _write(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _grid_paths(out: str | None, count: int) -> list[str | None]:
    if out is None or count == 1:
        return [out] * count
    base = Path(out)
    return [str(base.with_name(f"{base.stem}_{t}{base.suffix}")) for t in range(1, count + 1)]


def _cmd_construct(args) -> int:
    fam = construct_family(args.q, args.s)
    grids = [generate(d.flag()) for d in fam.data]
    array = assemble(grids)
    result = verify(array, "ooa")
    if not result.ok:
        print(f"FAIL {result.witness_text()}")
        return 1
    if args.emit == "flags":
        _write(args.out, flags_to_text(fam.data))
    elif args.emit == "grids":
        for path, grid in zip(_grid_paths(args.out, len(grids)), grids):
            _write(path, grid_to_text(grid))
    else:
        _write(args.out, array_to_text(array))
    print(f"CONSTRUCTED q={args.q} s={args.s} method={fam.method}")
    return 0


def _cmd_verify(args) -> int:
    array = array_from_text(Path(args.path).read_text())
    result = verify(array, args.mode)
    if result.ok:
        print("PASS")
        return 0
    print(f"FAIL {result.witness_text()}")
    return 1


def _cmd_check_family(args) -> int:
    data = flags_from_text(Path(args.path).read_text())
    s = len(data) + 2
    if args.level == "exhaustive":
        grids = [generate(d.flag()) for d in data]
        result = verify(assemble(grids), "ooa")
        if result.ok:
            print("PASS")
            return 0
        print(f"FAIL {result.witness_text()}")
        return 1
    if args.level == "combinatorial":
        report = check_combinatorial([generate(d.flag()) for d in data], s)
    else:
        report = check_algebraic(data, s)
    if not args.quiet:
        print(report.to_text())
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _cmd_gen_sudoku(args) -> int:
    field = make_field(args.q)
    try:
        a, b, c, d, beta = (int(tok) for tok in args.flag.split(","))
    except ValueError:
        raise ParseError(1, f"--flag needs 5 comma-separated integers, got {args.flag!r}")
    datum = FlagData(field, a, b, c, d, beta)
    _write(args.out, grid_to_text(generate(datum.flag())))
    return 0


def _cmd_info(args) -> int:
    field = make_field(args.q)
    print(f"q={field.q}")
    print(f"p={field.p}")
    print(f"k={field.k}")
    print("modulus=" + ",".join(str(c) for c in field.modulus))
    print(f"generator={find_generator(field)}")
    print(f"max_s={max_guaranteed_s(args.q)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sudoku-ooa",
        description="Construct and verify ordered orthogonal arrays OOA(4,s,2,q) "
        "built from linear sudoku solutions over GF(q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="construct a family and emit an artifact")
    p.add_argument("--q", type=int, required=True, help="alphabet size (prime power)")
    p.add_argument("--s", type=int, required=True, help="number of bands")
    p.add_argument(
        "--emit",
        choices=("flags", "grids", "array"),
        default="array",
        help="artifact to write (default: array)",
    )
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="verify an array file exhaustively")
    p.add_argument("path", help="array file")
    p.add_argument("--mode", choices=("ooa", "sa"), default="ooa")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check-family", help="run a condition checker on a flags file")
    p.add_argument("path", help="flags file")
    p.add_argument(
        "--level",
        choices=("algebraic", "combinatorial", "exhaustive"),
        default="algebraic",
    )
    p.add_argument(
        "--quiet", action="store_true", help="print only the final verdict"
    )
    p.set_defaults(func=_cmd_check_family)

    p = sub.add_parser("gen-sudoku", help="generate one sudoku grid from a flag datum")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--flag", required=True, metavar="a,b,c,d,beta")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_gen_sudoku)

    p = sub.add_parser("info", help="print field and construction parameters")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_info)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
