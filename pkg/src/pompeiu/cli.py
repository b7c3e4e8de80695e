"""Command-line interface.

Exit codes: 0 success, 1 `witness` found no witness (the subset is Pompeiu),
2 parse error, 3 precondition violated, 4 internal consistency check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import engine, io, lattice, structure
from .errors import GroupError, GroupFileError, PompeiuError, PreconditionError
from .groups import Subset, make_group
from .io import fmt_complex, fmt_float


def load_group(arg: str):
    if os.path.exists(arg):
        return io.read_group(arg)
    try:
        return make_group(arg)
    except GroupError:
        raise GroupFileError(f"no such group file {arg!r}") from None


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise GroupFileError(f"subset must be comma-separated integers, got {text!r}") from None


def parse_subset(G, text: str) -> Subset:
    elems = parse_int_list(text)
    if len(set(elems)) != len(elems):
        raise PreconditionError(f"subset {text!r} has repeated elements")
    bad = [x for x in elems if not 0 <= x < G.order]
    if bad:
        raise PreconditionError(f"elements {bad} out of range 0..{G.order - 1}")
    K = Subset(G, tuple(sorted(elems)))
    return K.require_nonempty()


def cmd_check(args, out):
    G = load_group(args.group)
    v = engine.is_pompeiu_set(parse_subset(G, args.subset))
    if args.json:
        out(json.dumps(io.verdict_json(v), indent=2))
    else:
        out(io.verdict_text(v))
    return 0


def cmd_witness(args, out):
    G = load_group(args.group)
    v = engine.is_pompeiu_set(parse_subset(G, args.subset))
    if v.is_pompeiu:
        out(f"Pompeiu (rank {v.ideal_rank}/{G.order}): no witness")
        return 1
    if args.json:
        out(json.dumps({"witness_basis": [io.element_json(w) for w in v.witness_basis]}, indent=2))
    else:
        for w in v.witness_basis:
            out(io.format_witness(w))
    return 0


def cmd_classify(args, out):
    G = load_group(args.group)
    report = engine.classify_subsets(G, max_size=args.max_size, jobs=args.jobs)
    out(io.render_report(report, args.format).rstrip("\n"))
    return 0


def cmd_normal_subgroups(args, out):
    G = load_group(args.group)
    for N in structure.normal_subgroups(G):
        out(f"order {len(N)}: {{{','.join(map(str, N.elements))}}}")
    return 0


def cmd_center(args, out):
    G = load_group(args.group)
    dec = structure.conjugacy_classes(G)
    out(f"center dimension: {len(dec)}")
    for i, c in enumerate(dec.classes):
        out(f"class {i} (size {len(c)}): {{{','.join(map(str, c.elements))}}}")
    return 0


def cmd_lattice(args, out):
    K = parse_int_list(args.subset)
    if args.action == "check":
        verdict = lattice.is_pompeiu_subset_Z(K)
        out("Pompeiu in Z" if verdict else "NOT Pompeiu in Z (|K| > 1, a nonzero recurrence witness exists)")
        return 0
    w = lattice.recurrence_witness(K, args.window)
    if args.action == "witness":
        if args.json:
            out(json.dumps(io.witness_json(w), indent=2))
            return 0
        if w.exact:
            out(f"exact periodic witness, period {len(w.period)}: " + ", ".join(map(str, w.period)))
            out(f"residual: {w.residual}")
        else:
            out(f"numerical witness f(n) = r^n / scale, window {w.window}")
            out("roots: " + ", ".join(f"{fmt_complex(r)} (x{m})" for r, m in w.roots))
            out(f"residual: {fmt_float(w.residual)}")
        return 0
    profile = lattice.energy_profile(w)
    for N in range(0, w.window + 1, max(1, w.window // 10)):
        out(f"E({N}) = {profile[N] if w.exact else fmt_float(profile[N])}")
    return 0


def cmd_selftest(args, out):
    from .checks import run_selftest

    return 0 if run_selftest(out) else 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pompeiu", description="Two-sided Pompeiu sets in finite groups and in Z.")
    sub = p.add_subparsers(dest="command", required=True)

    def group_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--group", required=True, help="group file (or a built-in name such as S3, Z2xZ4)")
        sp.set_defaults(fn=fn)
        return sp

    sp = group_cmd("check", cmd_check, "decide one subset")
    sp.add_argument("--subset", required=True)
    sp.add_argument("--json", action="store_true")
    sp = group_cmd("witness", cmd_witness, "print the witness basis")
    sp.add_argument("--subset", required=True)
    sp.add_argument("--json", action="store_true")
    sp = group_cmd("classify", cmd_classify, "classify every subset")
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("md", "csv", "json"), default="md")
    group_cmd("normal-subgroups", cmd_normal_subgroups, "list normal subgroups")
    group_cmd("center", cmd_center, "conjugacy classes and center dimension")

    sp = sub.add_parser("lattice", help="subsets of Z")
    sp.add_argument("action", choices=("check", "witness", "energy"))
    sp.add_argument("--subset", required=True)
    sp.add_argument("--window", type=int, default=100)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_lattice)

    sp = sub.add_parser("selftest", help="run the invariant suite over the built-in fleet")
    sp.set_defaults(fn=cmd_selftest)
    return p


def main(argv=None, out=print) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except PompeiuError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
