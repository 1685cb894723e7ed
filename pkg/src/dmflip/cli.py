"""Command-line front end.

Exit status: 0 success / property holds, 1 property fails, 2 usage or
format error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .deltamatroid import DEFAULT_BUDGET, Representation, is_delta_matroid, is_vf_safe, vf_transport
from .errors import DmflipError, ParseError, PivotUndefinedError, StructuralError, UnsupportedRepresentationError
from .field import Automorphism, FieldKind
from .setsystem import FlipWord, normalize_word
from .subspace import bases_parity_check, bicycle_report, build_r_matrix, standardize
from .textio import (
    format_matrix,
    format_setsystem,
    format_subset,
    format_subspace,
    parse_subset,
    read_matrix,
    read_setsystem,
    write_text,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, output: Optional[str]) -> None:
    """Print a machine-readable block; with ``--output`` it goes to that file as well."""
    sys.stdout.write(text)
    if output:
        write_text(output, text)


def _default_alpha(kind: FieldKind, name: Optional[str]) -> Automorphism:
    if name is None:
        return Automorphism.inversion(kind) if kind is FieldKind.GF4 else Automorphism.identity(kind)
    return Automorphism.parse(kind, name)


def cmd_ppt(args) -> int:
    A = read_matrix(args.matrix)
    x = parse_subset(args.subset, A.ground)
    try:
        B = A.ppt(x)
    except PivotUndefinedError as exc:
        print(f"pivot undefined: {exc}")
        return EXIT_FALSE
    _emit(format_matrix(B), args.output)
    return EXIT_OK


def cmd_flip(args) -> int:
    M = read_setsystem(args.setsystem)
    _emit(format_setsystem(M.apply_word(FlipWord.parse(args.word))), args.output)
    return EXIT_OK


def cmd_normalize(args) -> int:
    word = FlipWord.parse(args.word)
    print(normalize_word(word))
    return EXIT_OK


def cmd_dm_check(args) -> int:
    M = read_setsystem(args.setsystem)
    w = is_delta_matroid(M)
    if w.verdict:
        print("delta-matroid")
        return EXIT_OK
    if w.counterexample is None:
        print("not a delta-matroid (empty family)")
    else:
        x, y, u = w.counterexample
        print(f"not a delta-matroid; witness X={format_subset(x)} Y={format_subset(y)} u={u}")
    return EXIT_FALSE


def cmd_vfsafe(args) -> int:
    M = read_setsystem(args.setsystem)
    if not M.proper:
        print("not a proper set system")
        return EXIT_FALSE
    res = is_vf_safe(M, args.budget)
    if res.status == "safe":
        print(f"safe (orbit of {res.explored} set systems)")
        return EXIT_OK
    if res.status == "exhausted":
        print(f"exhausted after {res.explored} set systems")
        return EXIT_BUDGET
    print("unsafe")
    print(f"witness: {res.witness}")
    if args.output:
        write_text(args.output, f"{res.witness}\n")
    return EXIT_FALSE


def cmd_represent(args) -> int:
    std = standardize(read_matrix(args.matrix))
    alpha = _default_alpha(std.kind, args.alpha)
    _emit(format_matrix(build_r_matrix(std, alpha)), args.output)
    print(f"offset: {format_subset(std.basis_labels)}")
    return EXIT_OK


def cmd_transport(args) -> int:
    A = read_matrix(args.matrix)
    alpha = _default_alpha(A.kind, args.alpha)
    rep = Representation(A, alpha, parse_subset(args.offset, A.ground))
    moved = vf_transport(rep, FlipWord.parse(args.word))
    _emit(format_matrix(moved.matrix), args.output)
    print(f"offset: {format_subset(moved.offset_labels)}")
    return EXIT_OK


def cmd_bicycle(args) -> int:
    rep = bicycle_report(read_matrix(args.matrix))
    print("# bicycle space")
    _emit(format_subspace(rep.space), args.output)
    print(f"dimension: {rep.dimension}")
    print("# matroid of the bicycle space")
    sys.stdout.write(format_setsystem(rep.bicycle_bases))
    print("# max(M+V)")
    sys.stdout.write(format_setsystem(rep.loop_complement_bases))
    print("EQUAL" if rep.equal else "UNEQUAL")
    return EXIT_OK if rep.equal else EXIT_FALSE


def cmd_parity(args) -> int:
    rep = bases_parity_check(read_matrix(args.matrix))
    print(rep)
    return EXIT_OK if rep.consistent else EXIT_FALSE


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all(args.seed, args.suite or None)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} suites passed (seed {args.seed})")
    return EXIT_OK if failed == 0 else EXIT_FALSE


def suite_names() -> List[str]:
    from .verify import ACCEPTANCE, INVARIANTS

    return sorted({**ACCEPTANCE, **INVARIANTS})


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dmflip", description="Delta-matroids, vertex flips and bicycle matroids over GF(2/3/4).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("ppt", cmd_ppt, "principal pivot transform A*X")
    sp.add_argument("matrix")
    sp.add_argument("subset", help="comma-separated labels, '-' for the empty set")
    sp.add_argument("-o", "--output")

    sp = add("flip", cmd_flip, "apply a flip word to a set system")
    sp.add_argument("setsystem")
    sp.add_argument("word", help="tokens *u, +u, du")
    sp.add_argument("-o", "--output")

    sp = add("normalize", cmd_normalize, "reduce a flip word to +Z1 *Z2 +Z3")
    sp.add_argument("word")

    sp = add("dm-check", cmd_dm_check, "symmetric exchange check")
    sp.add_argument("setsystem")

    sp = add("vfsafe", cmd_vfsafe, "search the vertex-flip orbit for a non-delta-matroid")
    sp.add_argument("setsystem")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("-o", "--output", help="write the witness word here")

    sp = add("represent", cmd_represent, "R(B, alpha) for a matroid representation B")
    sp.add_argument("matrix")
    sp.add_argument("--alpha", choices=["id", "inv"])
    sp.add_argument("-o", "--output")

    sp = add("transport", cmd_transport, "representation of (M_A * X) after a flip word")
    sp.add_argument("matrix")
    sp.add_argument("offset", help="comma-separated labels, '-' for the empty set")
    sp.add_argument("word")
    sp.add_argument("--alpha", choices=["id", "inv"])
    sp.add_argument("-o", "--output")

    sp = add("bicycle", cmd_bicycle, "bicycle space and bicycle matroid of a representation")
    sp.add_argument("matrix")
    sp.add_argument("-o", "--output", help="write the bicycle space here")

    sp = add("parity", cmd_parity, "basis-count parity versus bicycle dimension")
    sp.add_argument("matrix")

    sp = add("verify", cmd_verify, "run the seeded property suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--suite", action="append", choices=suite_names(), help="run only this suite (repeatable)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, StructuralError, UnsupportedRepresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DmflipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
