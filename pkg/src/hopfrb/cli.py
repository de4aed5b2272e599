"""Command-line front door.

Subcommands:

    hopfrb groups-list
    hopfrb enumerate --group Z6 [--cap N] [--json out.json]
    hopfrb verify --group Z6 --op 0,2,4,0,2,4 [--stages derive,lemmas] [--json out.json]
    hopfrb sweep --max-order 6 [--cap N] [--jobs N] [--json out.json]

``--group`` accepts a catalog name or a path to a Cayley-table text file
(first line ``order n``, then n rows of indices). ``--op`` is either an index
into the lexicographic operator enumeration or an explicit comma-separated
image tuple. Exit codes: 0 all-pass, 1 identity failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .groups import (DEFAULT_ENUM_CAP, EnumerationCapError, GroupMap,
                     GroupTable, InvalidGroupError, catalog,
                     enumerate_group_rb, group_rb_check)
from .report import PHASE_ORDER, run_sweep, run_verification
from .serialize import load_cayley_table

CAP_ENV_VAR = "HOPFRB_ENUM_CAP"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}")


def _resolve_group(name: str) -> GroupTable:
    for g in catalog():
        if g.name == name:
            return g
    if os.path.exists(name):
        try:
            return load_cayley_table(name)
        except (InvalidGroupError, ValueError) as exc:
            raise InputError(f"invalid Cayley table {name}: {exc}")
    raise InputError(f"unknown group (not in catalog, not a file): {name}")


def _resolve_operator(g: GroupTable, spec: str, cap: int) -> tuple:
    if "," in spec:
        try:
            images = tuple(int(tok) for tok in spec.split(","))
        except ValueError:
            raise InputError(f"malformed image tuple: {spec}")
        if len(images) != g.order or any(not 0 <= v < g.order for v in images):
            raise InputError(
                f"image tuple must list {g.order} indices in [0, {g.order})")
        return images
    try:
        idx = int(spec)
    except ValueError:
        raise InputError(f"--op must be an index or an image tuple: {spec}")
    ops = enumerate_group_rb(g, cap=cap)
    if not 0 <= idx < len(ops):
        raise InputError(f"operator index {idx} out of range "
                         f"(group has {len(ops)} operators)")
    return ops[idx].images


def _write_json(doc: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def cmd_groups_list(args) -> int:
    print(f"{'name':<8} {'order':>5}  abelian")
    for g in catalog():
        print(f"{g.name:<8} {g.order:>5}  {'yes' if g.is_abelian() else 'no'}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = _resolve_group(args.group)
    cap = args.cap if args.cap is not None else _default_cap()
    try:
        ops = enumerate_group_rb(g, cap=cap)
    except EnumerationCapError as exc:
        raise InputError(str(exc))
    print(f"{g.name}: {len(ops)} operators")
    for f in ops:
        print(" ".join(str(v) for v in f.images))
    if args.json:
        _write_json({"group": g.name, "count": len(ops),
                     "operators": [list(f.images) for f in ops]}, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _resolve_group(args.group)
    cap = args.cap if args.cap is not None else _default_cap()
    images = _resolve_operator(g, args.op, cap)
    ok, wit = group_rb_check(GroupMap(g, images))
    if not ok:
        raise InputError(
            f"map is not a weight -1 operator on {g.name}: "
            f"defining identity fails at element pair {wit}")
    stages = args.stages.split(",") if args.stages else None
    if stages is not None:
        for s in stages:
            if s not in PHASE_ORDER:
                raise InputError(
                    f"unknown stage {s!r}; choose from {','.join(PHASE_ORDER)}")
    rep = run_verification(g, images, stages=stages)
    for s in rep.stages:
        mark = "skip" if s["skipped"] else ("pass" if s["passed"] else "FAIL")
        line = f"{mark:>4}  {s['name']}"
        if not s["skipped"] and not s["passed"] and s["witness"] is not None:
            line += f"  witness={s['witness']}"
        print(line)
    print(f"{g.name} {','.join(str(v) for v in images)}: "
          f"{'all identities hold' if rep.ok else 'FAILURE'}")
    if args.json:
        _write_json(rep.to_json(), args.json)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_sweep(args) -> int:
    cap = args.cap if args.cap is not None else _default_cap()
    if args.max_order > cap:
        raise InputError(f"--max-order {args.max_order} exceeds cap {cap}")
    doc = run_sweep(catalog(), args.max_order, cap, jobs=args.jobs)
    t = doc["totals"]
    for gd in doc["groups"]:
        print(f"{gd['group']:<8} {gd['operator_count']:>4} operators")
    print(f"total: {t['operators']} operators, "
          f"{t['identities_checked']} identities checked, "
          f"{t['failures']} failures")
    if args.json:
        _write_json(doc, args.json)
    return EXIT_OK if t["failures"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfrb",
        description="Exact verification of weight -1 Rota-Baxter operators "
                    "on finite group algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("groups-list", help="list catalog groups")

    pe = sub.add_parser("enumerate", help="enumerate operators on a group")
    pe.add_argument("--group", required=True)
    pe.add_argument("--cap", type=int, default=None)
    pe.add_argument("--json", default=None)

    pv = sub.add_parser("verify", help="run the verification pipeline")
    pv.add_argument("--group", required=True)
    pv.add_argument("--op", required=True,
                    help="operator index or comma-separated image tuple")
    pv.add_argument("--stages", default=None,
                    help=f"comma-separated subset of {','.join(PHASE_ORDER)}")
    pv.add_argument("--cap", type=int, default=None)
    pv.add_argument("--json", default=None)

    ps = sub.add_parser("sweep", help="verify every operator up to an order")
    ps.add_argument("--max-order", type=int, required=True)
    ps.add_argument("--cap", type=int, default=None)
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--json", default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"groups-list": cmd_groups_list, "enumerate": cmd_enumerate,
                "verify": cmd_verify, "sweep": cmd_sweep}
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
