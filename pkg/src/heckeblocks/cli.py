"""Command-line front end: block vertices, block tables, zero counts and verification.

Exit codes: 0 success, 1 a verification failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinat import BlockDescriptor, blocks_of, parse_partition
from .poincare import (
    block_vertex,
    field_for,
    is_ep_parabolic,
    sign_vertex,
    standard_max_ep_parabolic,
    zP,
    zP_by_division,
)
from .symgrp import is_fixed_point_free

__all__ = ["main", "build_parser", "UsageError", "VerificationError"]

PROJECTIVE = "projective (trivial vertex)"
MAX_TABLE_N = 40


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


def _field_params(e, p):
    if e < 2:
        raise UsageError(f"--e must be at least 2, got {e}")
    if p < 0 or (p and any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))) or p == 1:
        raise UsageError(f"--p must be 0 or a prime, got {p}")
    if p and e != p and e % p == 0:
        raise UsageError(f"p={p} divides e={e} but e != p: q would not have order e")


def _vertex_text(label):
    return PROJECTIVE if label.projective else str(label.left)


def _block_row(b: BlockDescriptor, p: int):
    """One checked row for block b; raises VerificationError on a broken invariant."""
    label = block_vertex(b, p)
    lam = label.left
    if label.right != lam or lam.n != b.n:
        raise VerificationError(f"vertex {lam} of block ({b.core}, {b.weight}) is malformed")
    if not is_ep_parabolic(lam, b.e, p):
        raise VerificationError(f"vertex {lam} of block ({b.core}, {b.weight}) is not e-p-parabolic")
    if b.weight and not is_fixed_point_free(lam, sum(b.core)):
        raise VerificationError(f"vertex {lam} has a non-trivial part inside the core")
    return {
        "n": b.n,
        "core": str(b.core),
        "weight": b.weight,
        "e": b.e,
        "p": p,
        "vertex": _vertex_text(label),
        "composition": str(lam),
    }


def _tsv(header, rows):
    lines = ["\t".join(header)]
    lines += ["\t".join(str(r[h]) for h in header) for r in rows]
    return "\n".join(lines)


def cmd_block_vertex(args):
    _field_params(args.e, args.p)
    if args.weight < 0:
        raise UsageError("--weight must be non-negative")
    try:
        core = parse_partition(args.core)
    except ValueError as ex:
        raise UsageError(f"--core: {ex}") from None
    try:
        b = BlockDescriptor(core, args.weight, args.e)
    except ValueError as ex:
        raise UsageError(str(ex)) from None
    row = _block_row(b, args.p)
    if args.format == "json":
        record = {"command": "block-vertex", "params": {"e": args.e, "p": args.p, "core": args.core, "weight": args.weight}, "rows": [row]}
        return json.dumps(record, sort_keys=True, ensure_ascii=False)
    return _tsv(["n", "core", "weight", "e", "p", "vertex"], [row])


def cmd_block_table(args):
    _field_params(args.e, args.p)
    if not 0 <= args.n <= MAX_TABLE_N:
        raise UsageError(f"--n must lie in 0..{MAX_TABLE_N}")
    rows = [_block_row(b, args.p) for b in blocks_of(args.n, args.e)]
    return _tsv(["n", "core", "weight", "e", "p", "vertex"], rows)


def cmd_zp_table(args):
    _field_params(args.e, args.p)
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    fs = field_for(args.e, args.p)
    rows, ok = [], True
    for n in range(args.n_max + 1):
        a, b = zP(n, args.e, args.p), zP_by_division(n, fs)
        ok &= a == b
        rows.append({"n": n, "formula": a, "oracle": b, "match": str(a == b).lower()})
    out = _tsv(["n", "formula", "oracle", "match"], rows)
    if not ok:
        raise VerificationError(out)
    return out


def cmd_sign_vertex(args):
    _field_params(args.e, args.p)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    lam = sign_vertex(args.n, args.e, args.p)
    if lam != standard_max_ep_parabolic(args.n, args.e, args.p) or not is_ep_parabolic(lam, args.e, args.p):
        raise VerificationError(f"sign vertex {lam} failed its recheck")
    return str(lam)


def cmd_verify(args):
    from .verify import SUITES, run_suite

    names = list(SUITES) + ["all"]
    if args.suite not in names:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(names)}")
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    results = run_suite(args.suite, args.max_n, args.seed)
    # timings vary between runs, so they stay out of the output
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        head = f"{r.number}. " if r.number else ""
        extra = f"\tfirst failure: {r.failures[0]}" if r.failures else ""
        lines.append(f"{status}\t{head}{r.title}\t{r.cases} cases{extra}")
    out = "\n".join(lines)
    if not all(r.passed for r in results):
        raise VerificationError(out)
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="heckeblocks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("block-vertex", help="vertex of the block with a given e-core and weight")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--core", required=True, help='comma-separated parts; "" for the empty partition')
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(fn=cmd_block_vertex)

    p = sub.add_parser("block-table", help="every block of H_n with its weight and vertex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=cmd_block_table)

    p = sub.add_parser("zp-table", help="z(P_n) by closed form and by division")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(fn=cmd_zp_table)

    p = sub.add_parser("sign-vertex", help="vertex of the sign module of H_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=cmd_sign_vertex)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.fn(args)
    except UsageError as ex:
        print(f"heckeblocks: error: {ex}", file=sys.stderr)
        return 2
    except VerificationError as ex:
        print(ex, file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
