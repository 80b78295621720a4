"""JSON and Graphviz DOT serialisation of posets and fibres.

Roots are written as coordinate strings (``"2431"``), words as
``"s2 s3 s4 s0"``.  Output is deterministic: same input, same bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .affine import format_word
from .fibers import FiberReport
from .ideals import AbelianIdeal, IdealPoset, generators, hasse
from .rootsys import RootSystem, format_root


def _root_or_none(x) -> str | None:
    return None if x is None else format_root(x)


def ideal_record(rs: RootSystem, ideal: AbelianIdeal) -> dict[str, Any]:
    return {
        "roots": [format_root(g) for g in ideal.roots],
        "word": format_word(ideal.word),
        "rootlet": _root_or_none(ideal.rootlet),
        "generators": [format_root(g) for g in generators(rs, ideal)],
    }


def poset_to_dict(p: IdealPoset) -> dict[str, Any]:
    return {
        "type": str(p.rs.lie_type),
        "ideals": [ideal_record(p.rs, I) for I in p.ideals],
        "edges": sorted({(e.lower, e.upper) for e in p.edges}),
    }


def fiber_to_dict(report: FiberReport) -> dict[str, Any]:
    rs = report.poset.rs
    return {
        "mu": format_root(report.mu),
        "size": report.size,
        "min": ideal_record(rs, report.min_ideal),
        "max": ideal_record(rs, report.max_ideal),
        "members": [ideal_record(rs, I) for I in report.ideals],
        "w_mu": format_word(report.w_mu),
        "gamma_nodes": list(report.gamma_nodes),
        "M_mu": [format_root(g) for g in report.M_mu],
        "checks": dict(sorted(report.checks.items())),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def to_dot(p: IdealPoset) -> str:
    """One node per ideal labelled ``"dim|rootlet"``; edges point upward along covers."""
    h = hasse(p)
    lines = [f'digraph "Ab({h.lie_type})" {{', "  rankdir=BT;", "  node [shape=box];"]
    for node in h.nodes:
        rootlet = format_root(node.rootlet) if node.rootlet is not None else "-"
        lines.append(f'  n{node.index} [label="{node.size}|{rootlet}"];')
    for lo, hi in h.edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
