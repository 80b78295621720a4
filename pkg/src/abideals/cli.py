"""Command-line interface.

Exit status: 0 when everything passes, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import export, ferrers
from .affine import format_word
from .checks import STANDARD_BATTERY, TypeReport, run_checks
from .fibers import FiberReport, fiber_reports
from .ideals import generators, poset
from .labels import (
    format_label,
    has_labels,
    resolve_root,
    root_of_pair,
)
from .rootsys import RootSystem, RootSystemError, build, format_root, parse_type
from .tables import render_tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _roots(xs) -> str:
    return "{" + ", ".join(format_root(x) for x in xs) + "}"


def _type(args) -> RootSystem:
    if not args.type:
        raise UsageError("--type is required")
    try:
        return build(parse_type(args.type))
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None


def _mu(rs: RootSystem, args) -> tuple[int, ...]:
    mode = "coords" if args.coords else "label" if args.label else None
    try:
        mu = resolve_root(rs, args.mu, mode)
    except RootSystemError as exc:  # includes AmbiguousRootError
        raise UsageError(str(exc)) from None
    if not rs.is_long(mu):
        raise UsageError(f"{format_root(mu)} is not a long root of {rs.lie_type}")
    return mu


# -- enumerate -------------------------------------------------------------------------


def cmd_enumerate(args) -> tuple[str, int]:
    rs = _type(args)
    p = poset(rs)
    if args.format == "json":
        return export.dumps(export.poset_to_dict(p)), EXIT_OK
    if args.format == "dot":
        return export.to_dot(p), EXIT_OK
    lines = []
    for k, I in enumerate(p.ideals):
        rootlet = format_root(I.rootlet) if I.rootlet is not None else "-"
        lines.append(
            f"[{k}] #I={len(I)} I={_roots(I.roots)} w={format_word(I.word)} "
            f"tau={rootlet} gens={_roots(generators(rs, I))}"
        )
    n = len(p)
    ok = n == 2 ** rs.rank
    lines.append(f"N = {n} = 2^{rs.rank}" if ok else f"N = {n} != 2^{rs.rank}")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


# -- fiber -----------------------------------------------------------------------------


def _fiber_text(rs: RootSystem, r: FiberReport) -> str:
    label = f" ({format_label(rs, r.mu)})" if has_labels(rs) else ""
    lines = [
        f"fibre over mu = {format_root(r.mu)}{label} in {rs.lie_type}",
        f"size: {r.size}",
        f"w_mu: {format_word(r.w_mu)}",
        f"min: #I={len(r.min_ideal)} {_roots(r.min_ideal.roots)} w={format_word(r.min_ideal.word)}",
        f"max: #I={len(r.max_ideal)} {_roots(r.max_ideal.roots)} w={format_word(r.max_ideal.word)}",
        "members:",
    ]
    for I in r.ideals:
        lines.append(f"  #I={len(I)} {_roots(I.roots)} w={format_word(I.word)}")
    lines.append("Gamma_mu nodes: " + (" ".join(map(str, r.gamma_nodes)) or "-"))
    lines.append(f"M_mu: {_roots(r.M_mu)}")
    lines.append("checks:")
    for k, v in sorted(r.checks.items()):
        lines.append(f"  {k}: {'pass' if v else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_fiber(args) -> tuple[str, int]:
    rs = _type(args)
    if args.mu is None:
        raise UsageError("fiber needs --mu")
    mu = _mu(rs, args)
    r = fiber_reports(poset(rs))[mu]
    status = EXIT_OK if all(r.checks.values()) else EXIT_FAIL
    if args.format == "json":
        return export.dumps(export.fiber_to_dict(r)), status
    if args.format == "dot":
        raise UsageError("fiber supports --format text or json")
    return _fiber_text(rs, r), status


# -- check -----------------------------------------------------------------------------


def _check_text(reports: list[TypeReport], timing: bool) -> str:
    lines = []
    for rep in reports:
        suffix = f" ({rep.seconds:.2f}s)" if timing else ""
        lines.append(f"== {rep.lie_type}: {'PASS' if rep.passed else 'FAIL'}{suffix}")
        for r in rep.results:
            detail = f"  [{r.detail}]" if r.detail else ""
            lines.append(f"  {'pass' if r.passed else 'FAIL'} {r.name}{detail}")
    lines.append("")
    lines.append("== verified computationally (no general proof known)")
    for rep in reports:
        for r in rep.computational:
            detail = f"  [{r.detail}]" if r.detail else ""
            lines.append(f"  {rep.lie_type}: {'pass' if r.passed else 'FINDING'} {r.name}{detail}")
    failed = [f"{rep.lie_type}:{f.name}" for rep in reports for f in rep.failures]
    lines.append("")
    lines.append(f"{len(reports)} types checked; " + (
        "all checks pass" if not failed else "failed: " + ", ".join(failed)
    ))
    return "\n".join(lines) + "\n"


def cmd_check(args) -> tuple[str, int]:
    if args.all:
        names = list(STANDARD_BATTERY)
    else:
        names = [str(_type(args).lie_type)]
    reports = [run_checks(name) for name in names]
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    if args.format == "json":
        data = [
            {
                "type": rep.lie_type,
                "passed": rep.passed,
                "checks": [vars(r) for r in rep.results],
                "verified_computationally": [vars(r) for r in rep.computational],
            }
            for rep in reports
        ]
        return export.dumps(data), status
    if args.format == "dot":
        raise UsageError("check supports --format text or json")
    return _check_text(reports, args.timing), status


# -- tables / hasse --------------------------------------------------------------------


def cmd_tables(args) -> tuple[str, int]:
    names = list(STANDARD_BATTERY) if args.all else [str(_type(args).lie_type)]
    if args.format != "text":
        raise UsageError("tables supports --format text only")
    return "\n".join(render_tables(build(n)) for n in names), EXIT_OK


def cmd_hasse(args) -> tuple[str, int]:
    rs = _type(args)
    p = poset(rs)
    if args.format == "json":
        return export.dumps(export.poset_to_dict(p)), EXIT_OK
    if args.format == "dot":
        return export.to_dot(p), EXIT_OK
    lines = []
    for k, I in enumerate(p.ideals):
        rootlet = format_root(I.rootlet) if I.rootlet is not None else "-"
        ups = sorted(e.upper for e in p.upper_covers(k))
        lines.append(f"[{k}] {len(I)}|{rootlet} -> {' '.join(map(str, ups)) or '(maximal)'}")
    return "\n".join(lines) + "\n", EXIT_OK


# -- ferrers ---------------------------------------------------------------------------


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if not pairs:
        raise UsageError(f"cannot read pairs from {text!r}; use e.g. \"(1,5) (2,7)\"")
    return [(int(a), int(b)) for a, b in pairs]


def _diagram_from_args(rs: RootSystem, args) -> list[ferrers.FerrersIdeal]:
    n = rs.rank + 1
    try:
        if args.rows:
            starts = tuple(int(x) for x in args.rows.replace(",", " ").split())
            return [ferrers.FerrersIdeal(n, starts)]
        if args.generators:
            gens = _parse_pairs(args.generators)
            for p, q in gens:
                root_of_pair(rs, p, q)
            depth = max(p for p, _ in gens)
            starts = tuple(min(q for p2, q in gens if p2 >= p) for p in range(1, depth + 1))
            f = ferrers.FerrersIdeal(n, starts)
            if sorted(f.corners) != sorted(gens):
                raise UsageError(f"{args.generators} are not the corners of an Abelian ideal")
            return [f]
        if args.mu:
            r = fiber_reports(poset(rs))[_mu(rs, args)]
            return [ferrers.from_ideal(rs, I) for I in r.ideals]
    except (ValueError, RootSystemError) as exc:
        raise UsageError(str(exc)) from None
    return [ferrers.from_ideal(rs, I) for I in poset(rs).nontrivial]


def cmd_ferrers(args) -> tuple[str, int]:
    rs = _type(args)
    if rs.lie_type.family != "A":
        raise UsageError("ferrers needs a type A root system")
    diagrams = _diagram_from_args(rs, args)
    if args.format == "json":
        data = [
            {
                "n": f.n,
                "row_starts": list(f.row_starts),
                "cells": [list(c) for c in f.cells],
                "hooks": [[list(c) for c in h.cells] for h in ferrers.hook_decompose(f)],
                "word": format_word(ferrers.fill_word(f)),
                "grouped": ferrers.format_grouped(f),
            }
            for f in diagrams
        ]
        return export.dumps(data), EXIT_OK
    if args.format == "dot":
        raise UsageError("ferrers supports --format text or json")
    blocks = []
    for f in diagrams:
        blocks.append(
            f"row starts {' '.join(map(str, f.row_starts))}: #I={len(f)} "
            f"w={ferrers.format_grouped(f)}\n" + ferrers.render(f, labels=args.cell_labels)
        )
    return "\n\n".join(blocks) + "\n", EXIT_OK


# -- entry point -----------------------------------------------------------------------

COMMANDS = {
    "enumerate": cmd_enumerate,
    "fiber": cmd_fiber,
    "check": cmd_check,
    "tables": cmd_tables,
    "hasse": cmd_hasse,
    "ferrers": cmd_ferrers,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abideals",
        description="Abelian ideals of a Borel subalgebra, minuscule elements and rootlets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("text", "json", "dot"), default="text"):
        p.add_argument("--type", help="Lie type such as A3, F4, E8")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output to this file instead of stdout")

    def mu_flags(p: argparse.ArgumentParser, required: bool = False):
        p.add_argument("--mu", required=required,
                       help="long positive root: coordinates (2431, '(2 4 3 1)') or a label (e1-e2, (1,3))")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--coords", action="store_true", help="read --mu as coordinates")
        g.add_argument("--label", action="store_true", help="read --mu as a classical label")

    p = sub.add_parser("enumerate", help="list all Abelian ideals")
    common(p)
    p = sub.add_parser("fiber", help="one fibre of the rootlet map")
    common(p, ("text", "json"))
    mu_flags(p, required=True)
    p = sub.add_parser("check", help="run the verification battery")
    common(p, ("text", "json"))
    p.add_argument("--all", action="store_true", help="run the standard battery of types")
    p.add_argument("--timing", action="store_true", help="show time per type")
    p = sub.add_parser("tables", help="print tables")
    common(p, ("text",))
    p.add_argument("--all", action="store_true", help="tables for the standard battery")
    p = sub.add_parser("hasse", help="Hasse diagram of the ideal poset")
    common(p, default="dot")
    p = sub.add_parser("ferrers", help="Ferrers diagrams and hook fillings in type A")
    common(p, ("text", "json"))
    mu_flags(p)
    p.add_argument("--rows", help="leftmost column of each row, e.g. 5,7,8,9")
    p.add_argument("--generators", help="generator pairs, e.g. \"(1,5) (2,7)\"")
    p.add_argument("--cell-labels", action="store_true",
                   help="write the reflection index of the hook filling in each cell")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    try:
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"abideals {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
