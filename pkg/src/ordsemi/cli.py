"""Command line interface.

Exit status: 0 on success (and all laws passing), 1 if some law fails,
2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus
from .biideals import build_biideal_semigroup
from .core import OrderedSemigroup, SemigroupError
from .greens import GreensMode, egg_box, greens_partitions
from .ideals import IdealKind, enumerate_family, regularity
from .laws import verify_instance, verify_transformation
from .osg import document_of, emit_osg, loads
from .render import render_eggbox, render_partition, render_table
from .transform import build_full_transformation


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if p.exists():
        return p.read_text(encoding="utf-8")
    stem = p.stem if p.suffix == ".osg" else p.name
    try:
        return corpus.bundled_text(stem)
    except (FileNotFoundError, OSError):
        raise InputError(f"no such file: {path}") from None


def _load(args) -> OrderedSemigroup:
    if args.tn is not None:
        if args.file is not None:
            raise InputError("give either a file or --tn, not both")
        return build_full_transformation(args.tn).ordered()
    if args.file is None:
        raise InputError("an input file or --tn is required")
    S = loads(_read(args.file))
    if not S.name:
        S = OrderedSemigroup(S.sgp, S.order, Path(args.file).stem, S.incompatibility)
    return S


def _target(args):
    """Green's partitions and display names, honouring --on and --mode."""
    S = _load(args)
    if args.on == "bsg":
        if args.mode == "ordered":
            raise InputError("B(S) carries no order; use --mode plain")
        B = build_biideal_semigroup(S)
        return greens_partitions(B.table, mode=GreensMode.PLAIN), B.names
    mode = GreensMode(args.mode or "ordered")
    return greens_partitions(S, mode=mode), S.names


def cmd_validate(args, out):
    S = _load(args)
    reg = regularity(S)
    out.write(f"ok: {S.name} has {S.n} elements and {len(S.order.pairs(strict=True))} "
              f"strict order pairs; regular={str(reg.regular).lower()} "
              f"intra_regular={str(reg.intra_regular).lower()}\n")
    return 0


def cmd_tn(args, out):
    T = build_full_transformation(args.n)
    S = T.ordered()
    if args.emit_osg:
        out.write(emit_osg(document_of(S, source=f"full transformation semigroup T{args.n}, natural order")))
        return 0
    out.write(render_table(S.names, S.table, "."))
    out.write("order:\n")
    for i, j in S.order.pairs(strict=True):
        out.write(f"{S.names[i]}<={S.names[j]}\n")
    return 0


def cmd_ideals(args, out):
    S = _load(args)
    for A in enumerate_family(S, IdealKind(args.kind)):
        out.write(S.format_set(A) + "\n")
    return 0


def cmd_bsg(args, out):
    S = _load(args)
    B = build_biideal_semigroup(S)
    for i in range(len(B)):
        out.write(B.describe(i) + "\n")
    if args.table:
        out.write("\n" + render_table(B.names, B.table.table))
    return 0


def cmd_greens(args, out):
    p, names = _target(args)
    for label in "LRJHD":
        out.write(f"{label}: {render_partition(getattr(p, label), names)}\n")
    out.write(f"D=J: {'yes' if p.d_equals_j else 'no'}\n")
    return 0


def cmd_eggbox(args, out):
    p, names = _target(args)
    out.write(render_eggbox(egg_box(p, names), args.format))
    return 0


def cmd_verify(args, out):
    if args.tn is not None and args.file is None:
        report = verify_transformation(args.tn)
    else:
        report = verify_instance(_load(args))
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        out.write(f"instance {report.instance}\n")
        for r in report.laws:
            out.write(f"law {r.id}: {r.verdict.value}  {r.statement}\n")
    return 0 if report.ok else 1


def _add_source(p):
    p.add_argument("file", nargs="?", help="OSG file ('-' for stdin)")
    p.add_argument("--tn", type=int, metavar="K", help="use (T_K, <=) instead of a file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ordsemi", description="Finite ordered semigroups and their bi-ideals.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an OSG file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate, tn=None)

    p = sub.add_parser("tn", help="full transformation semigroup T_n with its natural order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit-osg", action="store_true")
    p.set_defaults(func=cmd_tn)

    p = sub.add_parser("ideals", help="enumerate an ideal family")
    _add_source(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in IdealKind])
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("bsg", help="the semigroup of bi-ideals")
    _add_source(p)
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_bsg)

    for name, func in (("greens", cmd_greens), ("eggbox", cmd_eggbox)):
        p = sub.add_parser(name, help="Green's relations" if name == "greens" else "egg-box diagram")
        _add_source(p)
        p.add_argument("--on", choices=["base", "bsg"], default="base")
        p.add_argument("--mode", choices=["ordered", "plain"])
        if name == "eggbox":
            p.add_argument("--format", choices=["ascii", "dot"], default="ascii")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run the law suite")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (InputError, SemigroupError, KeyError) as exc:
        print(f"ordsemi: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
