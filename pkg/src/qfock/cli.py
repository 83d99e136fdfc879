"""Command-line interface: ``qfock <command> --n N --l L --charge s1,...,sl ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from .canonical import matrix_Delta, verify_A_identity, verify_Delta_identity
from .charge import Multicharge, enumerate_multipartitions, precedes, tau, tau_inv
from .formats import (
    ParseError,
    format_charge,
    format_multipartition,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_latex,
    parse_charge,
    parse_multipartition,
    parse_partition,
)
from .jantzen import Ordering, matrix_J
from .wedge import matrix_A

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qfock", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_m=True, with_format=True):
        sp.add_argument("--n", type=_positive, required=True, help="modulus n")
        sp.add_argument("--l", type=_positive, required=True, help="level l")
        sp.add_argument("--charge", required=True, action="append",
                        help="multicharge as a comma list, e.g. 1,0")
        if with_m:
            sp.add_argument("--m", type=_nonneg, required=True, help="degree m")
        if with_format:
            sp.add_argument("--format", choices=("json", "csv", "latex"), default="json")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    for name, helptext in (("barmatrix", "bar-involution matrix A(q)"),
                           ("canonical", "canonical-basis matrix Delta(q)")):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.add_argument("--reversal", choices=("full", "stable"), default="full",
                        help="reversal length for the bar involution (default: |mu|)")

    sp = sub.add_parser("jantzen", help="Jantzen matrix J")
    common(sp)
    sp.add_argument("--ordering", choices=("prec", "dom"), required=True)

    sp = sub.add_parser("verify", help="check A'(1)=2J and Delta'(1)=J*Delta(1)")
    common(sp, with_format=False)
    sp.add_argument("--sweep", action="store_true",
                    help="check every degree 0..m for each --charge given")
    sp.add_argument("--reversal", choices=("full", "stable"), default="full")

    sp = sub.add_parser("tau", help="big partition <-> multipartition")
    common(sp, with_m=False, with_format=False)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition", help="partition such as [4,3,3,2,1]")
    g.add_argument("--multipartition", help="multipartition such as [[1,1],[1,1],[1]]")

    sp = sub.add_parser("order", help="list the multipartitions of m in display order")
    common(sp, with_format=False)
    sp.add_argument("--relations", action="store_true", help="also list all pairs a < b")
    return p


def _single_charge(args) -> Multicharge:
    if len(args.charge) != 1:
        raise InputError("--charge may be repeated only with verify --sweep")
    return _charge(args.charge[0], args.l)


def _charge(text: str, l: int) -> Multicharge:
    try:
        return parse_charge(text, l)
    except ParseError as exc:
        raise InputError(str(exc)) from None


def _params(args, mc) -> dict:
    return {"n": args.n, "l": args.l, "m": args.m, "charge": list(mc)}


def _emit_matrix(M, args, mc, out: TextIO, name: str) -> None:
    if args.format == "json":
        out.write(matrix_to_json(M, _params(args, mc)))
    elif args.format == "csv":
        out.write(matrix_to_csv(M))
    else:
        out.write(matrix_to_latex(M, name))


def _cmd_matrix(args, out: TextIO) -> int:
    mc = _single_charge(args)
    if args.command == "jantzen":
        M = matrix_J(Ordering(args.ordering), args.n, args.l, mc, args.m)
        name = r"J^{\prec}" if args.ordering == "prec" else r"J^{\lhd}"
    else:
        A = matrix_A(args.n, args.l, mc, args.m, length=args.reversal)
        M, name = (A, "A(q)") if args.command == "barmatrix" else (matrix_Delta(A), r"\Delta(q)")
    _emit_matrix(M, args, mc, out, name)
    return EXIT_OK


def _verify_one(n, l, mc, m, reversal, out: TextIO) -> bool:
    A = matrix_A(n, l, mc, m, length=reversal)
    J = matrix_J(Ordering.PREC, n, l, mc, m)
    reports = [verify_A_identity(n, l, mc, m, A=A, J=J), verify_Delta_identity(n, l, mc, m, A=A, J=J)]
    out.write("; ".join(str(r) for r in reports) + "\n")
    for r in reports:
        for v in r.violations:
            out.write(f"  {r.label}: {v}\n")
    return all(r.ok for r in reports)


def _cmd_verify(args, out: TextIO) -> int:
    charges = [_charge(c, args.l) for c in args.charge]
    if len(charges) > 1 and not args.sweep:
        raise InputError("--charge may be repeated only with --sweep")
    ok = True
    if args.sweep:
        for mc in charges:
            for m in range(args.m + 1):
                out.write(f"n={args.n} l={args.l} charge={format_charge(mc)} m={m}: ")
                ok &= _verify_one(args.n, args.l, mc, m, args.reversal, out)
    else:
        ok = _verify_one(args.n, args.l, charges[0], args.m, args.reversal, out)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_tau(args, out: TextIO) -> int:
    mc = _single_charge(args)
    try:
        if args.partition is not None:
            lam = parse_partition(args.partition)
            mp, got = tau(lam, mc.total(), args.n, args.l)
            if tuple(got) != tuple(mc):
                raise InputError(f"partition {args.partition} at charge {mc.total()} lies in the "
                                 f"component with multicharge {format_charge(got)}")
            out.write(format_multipartition(mp) + "\n")
        else:
            mp = parse_multipartition(args.multipartition, args.l)
            lam, _ = tau_inv(mp, mc, args.n)
            out.write(json.dumps(list(lam), separators=(",", ":")) + "\n")
    except ParseError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def _cmd_order(args, out: TextIO) -> int:
    mc = _single_charge(args)
    order = enumerate_multipartitions(args.l, args.m, mc, args.n)
    for mp in order:
        lam, _ = tau_inv(mp, mc, args.n)
        out.write(f"{format_multipartition(mp)}\t{json.dumps(list(lam), separators=(',', ':'))}\n")
    if args.relations:
        for a in order:
            for b in order:
                if precedes(a, b, mc, args.n):
                    out.write(f"{format_multipartition(a)} < {format_multipartition(b)}\n")
    return EXIT_OK


_COMMANDS = {
    "barmatrix": _cmd_matrix,
    "canonical": _cmd_matrix,
    "jantzen": _cmd_matrix,
    "verify": _cmd_verify,
    "tau": _cmd_tau,
    "order": _cmd_order,
}


def _glue_values(argv: List[str]) -> List[str]:
    # let "--charge -1,2" through: argparse takes a leading '-' for an option
    out: List[str] = []
    it = iter(argv)
    for a in it:
        if a == "--charge":
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"--charge={nxt}")
                continue
            out.append(a)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(a)
    return out


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    argv = _glue_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    handle = None
    try:
        if out is None:
            handle = open(args.output, "w", encoding="utf-8") if args.output else None
            out = handle or sys.stdout
        return _COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"qfock: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if handle is not None:
            handle.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
