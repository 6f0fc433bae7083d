"""Command line front end.

One executable, seven subcommands:

    enum           exhaustive table of maximum-length rule vectors
    charpoly       characteristic polynomial of one rule vector
    primitive      primitivity verdict with order diagnostics
    cycle          measured cycle length from a seed
    stream         pseudorandom bitstream from a running automaton
    verify-tables  re-verify the bundled reference table
    primpoly-list  all primitive polynomials of one degree

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure (verify-tables --strict), 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .automaton import CaState, cycle_length_from, pack_bits, stream_bits, unit_seed
from .charpoly import RuleVector, characteristic_polynomial
from .enumerator import enumerate_maxlen
from .gf2poly import format_poly, parse_poly
from .primitivity import (
    enumerate_primitive,
    factorize_mersenne,
    is_irreducible,
    is_primitive,
    order_of_x,
)
from .tables import verify_all

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # One-line diagnostics on stderr, exit 2, no usage dump.
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="maxca", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="list all n-cell maximum-length rule vectors")
    p.add_argument("--n", type=int, required=True, help="cell count")
    p.add_argument("--format", choices=["paper", "tsv"], default="paper",
                   help="two-column table or TSV with header")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                   help="worker processes (output is identical regardless)")
    p.add_argument("--force", action="store_true",
                   help="allow n beyond the exhaustive-mode cap")

    p = sub.add_parser("charpoly", help="characteristic polynomial of a rule vector")
    p.add_argument("--rules", required=True, help="rule vector, e.g. 00000110")

    p = sub.add_parser("primitive", help="test a polynomial for primitivity")
    p.add_argument("--poly", required=True, help="MSB-first binary polynomial")

    p = sub.add_parser("cycle", help="cycle length from a seed state")
    p.add_argument("--rules", required=True)
    p.add_argument("--seed", help="seed state (default: unit seed, cell 0 set)")
    p.add_argument("--force", action="store_true",
                   help="allow n beyond the brute-force cap")

    p = sub.add_parser("stream", help="emit a pseudorandom bitstream")
    p.add_argument("--rules", required=True)
    p.add_argument("--bits", type=int, required=True, help="number of bits")
    p.add_argument("--tap", type=int, default=0, help="cell to read (default 0)")
    p.add_argument("--seed", help="seed state (default: unit seed)")
    p.add_argument("--ascii", action="store_true",
                   help="one '0'/'1' line per bit instead of packed bytes")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("verify-tables", help="re-verify the bundled reference table")
    p.add_argument("--n", type=int, help="restrict to one cell count")
    p.add_argument("--strict", action="store_true",
                   help="exit 1 if any row fails")
    p.add_argument("--errata", help="write failing rows to this file")

    p = sub.add_parser("primpoly-list", help="all primitive polynomials of degree n")
    p.add_argument("--n", type=int, required=True)

    return parser


def _cmd_enum(args) -> int:
    entries = enumerate_maxlen(args.n, jobs=args.jobs, force=args.force)
    if args.format == "tsv":
        print("n\tpolynomial\trule_vector")
        for e in entries:
            print(f"{e.n}\t{format_poly(e.polynomial)}\t{e.rule_vector}")
    else:
        for e in entries:
            print(f"{format_poly(e.polynomial)} {e.rule_vector}")
    return 0


def _cmd_charpoly(args) -> int:
    print(format_poly(characteristic_polynomial(RuleVector(args.rules))))
    return 0


def _cmd_primitive(args) -> int:
    p = parse_poly(args.poly)
    n = p.degree
    if n is None or n < 1:
        raise ValueError("polynomial must have degree >= 1")
    f = factorize_mersenne(n)
    irreducible = is_irreducible(p)
    primitive = is_primitive(p, f)
    print(f"polynomial: {format_poly(p)}")
    print(f"degree: {n}")
    print(f"irreducible: {'yes' if irreducible else 'no'}")
    if irreducible:
        print(f"order of x: {order_of_x(p, f)} of {f.value}")
    else:
        print(f"order of x: undefined (reducible), full order would be {f.value}")
    print(f"primitive: {'yes' if primitive else 'no'}")
    return 0


def _cmd_cycle(args) -> int:
    rv = RuleVector(args.rules)
    seed = CaState.from_string(args.seed) if args.seed else unit_seed(rv.n)
    t = cycle_length_from(rv, seed, force=args.force)
    print("none" if t is None else t)
    return 0


def _cmd_stream(args) -> int:
    rv = RuleVector(args.rules)
    seed = CaState.from_string(args.seed) if args.seed else unit_seed(rv.n)
    bits = stream_bits(rv, seed, args.bits, tap=args.tap)
    if args.ascii:
        text = "".join(f"{b}\n" for b in bits)
        if args.out:
            with open(args.out, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    else:
        packed = pack_bits(bits)
        if args.out:
            with open(args.out, "wb") as f:
                f.write(packed)
        else:
            sys.stdout.buffer.write(packed)
            sys.stdout.buffer.flush()
    return 0


def _cmd_verify_tables(args) -> int:
    report = verify_all(args.n)
    for line in report.errata_lines():
        print(f"FAIL {line}")
    print(f"rows: {report.total}")
    print(f"passed: {report.passed}")
    print(f"failed: {len(report.failures)}")
    if args.errata:
        report.write_errata(args.errata)
    if report.failures and args.strict:
        return 1
    return 0


def _cmd_primpoly_list(args) -> int:
    for p in enumerate_primitive(args.n):
        print(format_poly(p))
    return 0


_DISPATCH = {
    "enum": _cmd_enum,
    "charpoly": _cmd_charpoly,
    "primitive": _cmd_primitive,
    "cycle": _cmd_cycle,
    "stream": _cmd_stream,
    "verify-tables": _cmd_verify_tables,
    "primpoly-list": _cmd_primpoly_list,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"maxca {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # Downstream closed the pipe (e.g. `| head`); suppress the noise.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 1


if __name__ == "__main__":
    sys.exit(main())
