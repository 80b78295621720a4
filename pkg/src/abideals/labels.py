"""Classical labels for roots: ``(i, j)`` pairs in type A, epsilon forms in B, C, D.

These are a presentation layer only; all arithmetic stays in simple-root
coordinates.  Conventions:

* ``A_{n-1}``: ``alpha_k = (k, k+1)``, root ``(i, j) = alpha_i + ... + alpha_{j-1}``.
* ``B_n``: ``alpha_k = e_k - e_{k+1}``, ``alpha_n = e_n``.
* ``C_n``: ``alpha_k = e_k - e_{k+1}``, ``alpha_n = 2 e_n``.
* ``D_n``: ``alpha_k = e_k - e_{k+1}``, ``alpha_n = e_{n-1} + e_n``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .rootsys import Root, RootSystem, RootSystemError, parse_coords

EpsVector = tuple[int, ...]


class AmbiguousRootError(RootSystemError):
    """Both the coordinate reading and the label reading of a string are roots."""


def has_labels(rs: RootSystem) -> bool:
    return rs.lie_type.family in "ABCD"


# -- type A ---------------------------------------------------------------------


def pair_of(rs: RootSystem, root: Root) -> tuple[int, int]:
    """``(i, j)`` with ``root = alpha_i + ... + alpha_{j-1}`` (type A only)."""
    _require_family(rs, "A")
    if not rs.is_positive_root(root):
        raise RootSystemError(f"{root} is not a positive root")
    support = [k for k, c in enumerate(root) if c]
    return support[0] + 1, support[-1] + 2


def root_of_pair(rs: RootSystem, i: int, j: int) -> Root:
    _require_family(rs, "A")
    n = rs.rank + 1
    if not 1 <= i < j <= n:
        raise RootSystemError(f"({i},{j}) is not a positive root of sl_{n}")
    return tuple(int(i <= k + 1 < j) for k in range(rs.rank))


# -- epsilon forms ----------------------------------------------------------------


def _simple_eps(rs: RootSystem) -> list[EpsVector]:
    n, f = rs.rank, rs.lie_type.family
    out = []
    for k in range(n - 1):
        v = [0] * n
        v[k], v[k + 1] = 1, -1
        out.append(tuple(v))
    last = [0] * n
    if f == "B":
        last[n - 1] = 1
    elif f == "C":
        last[n - 1] = 2
    else:
        last[n - 2] = last[n - 1] = 1
    out.append(tuple(last))
    return out


def eps_vector(rs: RootSystem, root: Root) -> EpsVector:
    """Epsilon coordinates of a root of type B, C or D."""
    _require_family(rs, "BCD")
    basis = _simple_eps(rs)
    return tuple(sum(c * b[k] for c, b in zip(root, basis)) for k in range(rs.rank))


@lru_cache(maxsize=None)
def _eps_lookup(rs: RootSystem) -> dict[EpsVector, Root]:
    return {eps_vector(rs, r): r for r in rs.positive_roots}


def format_eps(v: EpsVector) -> str:
    """``(1, -1, 0)`` -> ``"e1-e2"``; ``(2, 0)`` -> ``"2e1"``."""
    parts = []
    for k, c in enumerate(v, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}e{k}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


_EPS_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:e|ε|eps)_?\{?(\d+)\}?")


def parse_eps(text: str, rank: int) -> EpsVector:
    body = text.replace(" ", "")
    if not body:
        raise RootSystemError("empty epsilon label")
    v = [0] * rank
    pos = 0
    for m in _EPS_TERM.finditer(body):
        if m.start() != pos or (pos and not m.group(1)):
            raise RootSystemError(f"cannot parse epsilon label {text!r}")
        k = int(m.group(3))
        if not 1 <= k <= rank:
            raise RootSystemError(f"index {k} out of range in {text!r}")
        c = int(m.group(2) or 1)
        v[k - 1] += -c if m.group(1) == "-" else c
        pos = m.end()
    if pos != len(body):
        raise RootSystemError(f"cannot parse epsilon label {text!r}")
    return tuple(v)


# -- generic entry points ---------------------------------------------------------


def format_label(rs: RootSystem, root: Root) -> str:
    """Classical label of a positive root; plain coordinates for exceptional types."""
    f = rs.lie_type.family
    if f == "A":
        return "({},{})".format(*pair_of(rs, root))
    if f in "BCD":
        return format_eps(eps_vector(rs, root))
    raise RootSystemError(f"no classical labels for type {rs.lie_type}")


def parse_label(rs: RootSystem, text: str) -> Root:
    f = rs.lie_type.family
    if f == "A":
        m = re.fullmatch(r"\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse pair label {text!r}")
        return root_of_pair(rs, int(m.group(1)), int(m.group(2)))
    if f in "BCD":
        v = parse_eps(text, rs.rank)
        root = _eps_lookup(rs).get(v)
        if root is None:
            raise RootSystemError(f"{text!r} is not a positive root of {rs.lie_type}")
        return root
    raise RootSystemError(f"no classical labels for type {rs.lie_type}")


def resolve_root(rs: RootSystem, text: str, mode: str | None = None) -> Root:
    """Read a positive root given as coordinates or as a classical label.

    ``mode`` is ``"coords"``, ``"label"`` or ``None`` (try both).  With ``None``,
    a string that reads as two different roots raises ``AmbiguousRootError``.
    """
    if mode not in (None, "coords", "label"):
        raise ValueError(f"unknown mode {mode!r}")
    readings: dict[str, Root] = {}
    errors = []
    if mode in (None, "coords"):
        try:
            c = parse_coords(text, rs.rank)
            if not rs.is_positive_root(c):
                raise RootSystemError(f"{text!r} is not a positive root of {rs.lie_type}")
            readings["coords"] = c
        except RootSystemError as exc:
            errors.append(str(exc))
    if mode in (None, "label") and has_labels(rs):
        try:
            readings["label"] = parse_label(rs, text)
        except RootSystemError as exc:
            errors.append(str(exc))
    elif mode == "label":
        errors.append(f"type {rs.lie_type} has no classical labels")
    values = set(readings.values())
    if len(values) > 1:
        raise AmbiguousRootError(
            f"{text!r} reads as coordinates {readings['coords']} and as a label for "
            f"{readings['label']}; pass --coords or --label"
        )
    if not values:
        raise RootSystemError("; ".join(errors) or f"cannot read root {text!r}")
    return values.pop()


def _require_family(rs: RootSystem, families: str) -> None:
    if rs.lie_type.family not in families:
        raise RootSystemError(f"operation needs type {'/'.join(families)}, got {rs.lie_type}")
