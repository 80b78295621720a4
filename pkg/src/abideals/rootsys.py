"""Finite root systems of the simple Lie algebras, in exact arithmetic.

Roots are integer tuples of coordinates over the simple roots.  Simple roots
are numbered as in Vinberg-Onishchik's tables, which for the exceptional
types differs from Bourbaki:

* ``F4``: alpha_1, alpha_2 short, alpha_3, alpha_4 long, theta = (2432).
* ``E6``: chain alpha_1 .. alpha_5, alpha_6 attached to alpha_3.
* ``E7``: chain alpha_1 .. alpha_6, alpha_7 attached to alpha_4.
* ``E8``: chain alpha_1 .. alpha_7, alpha_8 attached to alpha_5.
* ``G2``: alpha_1 short, alpha_2 long.

Classical types use the usual chain numbering (alpha_n is the special node).
``RootSystem.bourbaki`` maps these labels to Bourbaki's.

The invariant form is normalised so that long roots have squared length 2.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

Root = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# Vinberg-Onishchik label -> Bourbaki label (1-based)
_BOURBAKI = {
    ("E", 6): (1, 3, 4, 5, 6, 2),
    ("E", 7): (7, 6, 5, 4, 3, 1, 2),
    ("E", 8): (8, 7, 6, 5, 4, 3, 1, 2),
    ("F", 4): (4, 3, 2, 1),
}


class RootSystemError(ValueError):
    """Raised for invalid Lie types and for arguments that are not roots."""


class LieType(NamedTuple):
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def lie_type(family: str, rank: int) -> LieType:
    family = family.upper()
    if family not in _RANK_OK:
        raise RootSystemError(f"unknown family {family!r}")
    if not isinstance(rank, int) or not _RANK_OK[family](rank):
        raise RootSystemError(f"invalid rank {rank} for family {family}")
    return LieType(family, rank)


def parse_type(text: str) -> LieType:
    """Parse strings such as ``"F4"``, ``"a3"`` or ``"E_8"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
    if not m:
        raise RootSystemError(f"cannot parse Lie type {text!r}")
    return lie_type(m.group(1), int(m.group(2)))


def _dynkin(t: LieType) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of simple roots and the (0-based) edges of the diagram."""
    n, f = t.rank, t.family
    two, one = Fraction(2), Fraction(1)
    chain = [(i, i + 1) for i in range(n - 1)]
    if f == "A":
        return [two] * n, chain
    if f == "B":
        return [two] * (n - 1) + [one], chain
    if f == "C":
        return [one] * (n - 1) + [two], chain
    if f == "D":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if f == "E":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 4, n - 1)]
    if f == "F":
        return [one, one, two, two], chain
    if f == "G":
        return [Fraction(2, 3), two], chain
    raise RootSystemError(f"unknown family {f!r}")  # pragma: no cover


class RootSystem:
    """Positive roots, Cartan data and the invariant form for one simple type.

    Instances are immutable after construction.
    """

    def __init__(self, t: LieType):
        self.lie_type = t
        self.rank = n = t.rank
        lengths, edges = _dynkin(t)
        form = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            form[i][i] = lengths[i]
        for i, j in edges:
            form[i][j] = form[j][i] = -max(lengths[i], lengths[j]) / 2
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.symmetric_form: tuple[tuple[Fraction, ...], ...] = tuple(map(tuple, form))
        # integer Gram matrix: form * scale
        self._scale = math.lcm(*(f.denominator for row in form for f in row))
        self._gram = tuple(tuple(int(f * self._scale) for f in row) for row in form)
        # cartan[i][j] = <alpha_i, alpha_j^vee>
        cartan = []
        for i in range(n):
            row = []
            for j in range(n):
                c = 2 * form[i][j] / form[j][j]
                assert c.denominator == 1
                row.append(int(c))
            cartan.append(tuple(row))
        self.cartan: tuple[tuple[int, ...], ...] = tuple(cartan)
        self._cartan_cols = tuple(zip(*cartan))
        self.positive_roots: tuple[Root, ...] = self._generate()
        self._positive = frozenset(self.positive_roots)
        self._roots = self._positive | {tuple(-c for c in r) for r in self.positive_roots}
        self._index = {r: k for k, r in enumerate(self.positive_roots)}
        self.highest_root: Root = self.positive_roots[-1]
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        bourbaki = _BOURBAKI.get((t.family, t.rank), tuple(range(1, n + 1)))
        self.bourbaki: dict[int, int] = {i + 1: b for i, b in enumerate(bourbaki)}

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"

    def _generate(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        known = set(simple)
        layer = list(simple)
        while layer:
            nxt = set()
            for beta in layer:
                for i in range(n):
                    # alpha_i-string through beta: beta - q alpha_i, ..., beta + p alpha_i
                    q = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in known:
                            q += 1
                        else:
                            break
                    p = q - self.pairing(beta, i)
                    if p > 0:
                        up = list(beta)
                        up[i] += 1
                        nxt.add(tuple(up))
            known |= nxt
            layer = sorted(nxt)
        return tuple(sorted(known, key=lambda r: (sum(r), r)))

    # -- basic arithmetic -------------------------------------------------

    def pairing(self, x: Sequence[int], i: int) -> int:
        """``<x, alpha_i^vee>`` for 0-based simple index ``i``."""
        return sum(map(operator.mul, x, self._cartan_cols[i]))

    def _inner_scaled(self, x: Sequence[int], y: Sequence[int]) -> int:
        total = 0
        for i, a in enumerate(x):
            if a:
                row = self._gram[i]
                total += a * sum(row[j] * b for j, b in enumerate(y) if b)
        return total

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """The invariant form, with (theta, theta) = 2."""
        return Fraction(self._inner_scaled(x, y), self._scale)

    def norm2(self, x: Sequence[int]) -> Fraction:
        return self.inner(x, x)

    def is_root(self, x: Sequence[int]) -> bool:
        return tuple(x) in self._roots

    def is_positive_root(self, x: Sequence[int]) -> bool:
        return tuple(x) in self._positive

    def index(self, root: Root) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[root]

    def _require_root(self, x: Sequence[int]) -> Root:
        x = tuple(x)
        if len(x) != self.rank or not self.is_root(x):
            raise RootSystemError(f"{x} is not a root of {self.lie_type}")
        return x

    def coroot_pairing(self, x: Sequence[int], mu: Sequence[int]) -> Fraction:
        """``(x, mu^vee) = 2 (x, mu) / (mu, mu)``."""
        mu = self._require_root(mu)
        return Fraction(2 * self._inner_scaled(x, mu), self._inner_scaled(mu, mu))

    def coroot_coefficients(self, mu: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients of ``mu^vee`` over the simple coroots."""
        mu = self._require_root(mu)
        m2 = self.norm2(mu)
        return tuple(c * self.symmetric_form[i][i] / m2 for i, c in enumerate(mu))

    def rho_pairing(self, mu: Sequence[int]) -> Fraction:
        """``(rho, mu^vee)``: the sum of the coroot coefficients of ``mu``."""
        return sum(self.coroot_coefficients(mu), Fraction(0))

    def is_long(self, x: Sequence[int]) -> bool:
        x = self._require_root(x)
        return self.norm2(x) == 2

    def leq(self, mu: Sequence[int], nu: Sequence[int]) -> bool:
        """``mu <= nu`` iff ``nu - mu`` is a nonnegative combination of simple roots."""
        return all(b >= a for a, b in zip(mu, nu))

    def simple_reflection(self, i: int, x: Sequence[int]) -> Root:
        """Apply ``s_i`` (1-based ``i``) to a root-lattice element."""
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")
        c = self.pairing(x, i - 1)
        y = list(x)
        y[i - 1] -= c
        return tuple(y)

    # -- derived data -------------------------------------------------------

    @cached_property
    def long_positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if self.norm2(r) == 2)

    @cached_property
    def long_simple_indices(self) -> tuple[int, ...]:
        """1-based indices of the long simple roots."""
        return tuple(i + 1 for i in range(self.rank) if self.symmetric_form[i][i] == 2)

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(Fraction(sum(r[i] for r in self.positive_roots), 2) for i in range(n))

    def height(self, x: Sequence[int]) -> int:
        return sum(x)

    def add(self, x: Sequence[int], y: Sequence[int]) -> Root:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Sequence[int], y: Sequence[int]) -> Root:
        return tuple(a - b for a, b in zip(x, y))

    @property
    def zero(self) -> Root:
        return (0,) * self.rank


_CACHE: dict[LieType, RootSystem] = {}


def build(t: LieType | str) -> RootSystem:
    """Root system for a Lie type; cached since instances are immutable."""
    if isinstance(t, str):
        t = parse_type(t)
    else:
        t = lie_type(*t)
    if t not in _CACHE:
        _CACHE[t] = RootSystem(t)
    return _CACHE[t]


def format_root(x: Sequence[int]) -> str:
    """``(2,4,3,1)`` -> ``"2431"``; comma-separated when a digit would be ambiguous."""
    if len(x) <= 9 and all(0 <= c <= 9 for c in x):
        return "".join(str(c) for c in x)
    return ",".join(str(c) for c in x)


def parse_coords(text: str, rank: int) -> Root:
    """Parse ``"2431"``, ``"(2 4 3 1)"`` or ``"2,4,3,1"`` into a coordinate tuple."""
    body = text.strip().strip("()").strip()
    parts = [p for p in re.split(r"[\s,]+", body) if p]
    if len(parts) == 1 and len(parts[0]) == rank and parts[0].isdigit():
        parts = list(parts[0])
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise RootSystemError(f"cannot parse coordinates {text!r}") from None
    if len(coords) != rank:
        raise RootSystemError(f"expected {rank} coordinates, got {text!r}")
    return coords
