"""Ferrers diagrams of Abelian ideals in type A and their hook fillings.

In ``sl_n`` the positive root ``(p, q)`` is a cell in row ``p``, column ``q``.
An Abelian ideal is a right-aligned diagram with nested rows whose row count
plus column count is at most ``n``.  Peeling off north-east hooks and filling
each one gives the minuscule word of the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .affine import Word
from .ideals import AbelianIdeal, is_minuscule
from .labels import pair_of, root_of_pair
from .rootsys import RootSystem, RootSystemError, build, lie_type

Cell = tuple[int, int]


@dataclass(frozen=True)
class FerrersIdeal:
    """``row_starts[p-1]`` is the leftmost column of row ``p``; rows end at column ``n``."""

    n: int
    row_starts: tuple[int, ...]

    def __post_init__(self) -> None:
        starts = self.row_starts
        if self.n < 2:
            raise ValueError("need n >= 2")
        if any(a > b for a, b in zip(starts, starts[1:])):
            raise ValueError(f"row starts {starts} are not weakly increasing")
        if starts and not starts[-1] <= self.n:
            raise ValueError(f"row starts {starts} exceed column {self.n}")
        if starts and len(starts) >= starts[0]:
            raise ValueError(f"rows + columns exceed {self.n} for row starts {starts}")

    @property
    def rows(self) -> int:
        return len(self.row_starts)

    @property
    def columns(self) -> int:
        return self.n - self.row_starts[0] + 1 if self.row_starts else 0

    @property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            (p, q) for p, j in enumerate(self.row_starts, start=1) for q in range(j, self.n + 1)
        )

    def __len__(self) -> int:
        return sum(self.n - j + 1 for j in self.row_starts)

    @property
    def corners(self) -> tuple[Cell, ...]:
        """South-west corners: cells with nothing below and nothing to the left."""
        cells = set(self.cells)
        return tuple(
            (p, q) for p, q in self.cells if (p + 1, q) not in cells and (p, q - 1) not in cells
        )


def _sl(n: int) -> RootSystem:
    return build(lie_type("A", n - 1))


def from_cells(n: int, cells) -> FerrersIdeal:
    rows: dict[int, int] = {}
    for p, q in cells:
        rows[p] = min(rows.get(p, q), q)
    if sorted(rows) != list(range(1, len(rows) + 1)):
        raise ValueError("rows of the diagram are not 1..R")
    f = FerrersIdeal(n, tuple(rows[p] for p in range(1, len(rows) + 1)))
    if set(f.cells) != set(cells):
        raise ValueError("cells are not a right-aligned diagram")
    return f


def from_ideal(rs: RootSystem, ideal: AbelianIdeal) -> FerrersIdeal:
    if rs.lie_type.family != "A":
        raise RootSystemError(f"Ferrers diagrams need type A, got {rs.lie_type}")
    return from_cells(rs.rank + 1, [pair_of(rs, g) for g in ideal.roots])


def to_ideal(f: FerrersIdeal) -> AbelianIdeal:
    """The ideal of the diagram, built from its filling word."""
    rs = _sl(f.n)
    ideal = is_minuscule(rs, fill_word(f))
    expected = {root_of_pair(rs, p, q) for p, q in f.cells}
    if ideal is None or ideal.root_set != expected:
        raise AssertionError(f"filling word does not reproduce the diagram {f}")
    return ideal


def max_ideal_cells(n: int, i: int, j: int) -> FerrersIdeal:
    """The rectangle with lower-left corner ``(i, j)``."""
    _check_pair(n, i, j)
    return FerrersIdeal(n, (j,) * i)


def min_ideal_cells(n: int, i: int, j: int) -> FerrersIdeal:
    """The north-east hook inside that rectangle."""
    _check_pair(n, i, j)
    return FerrersIdeal(n, (j,) + (n,) * (i - 1))


def fiber_size_formula(n: int, i: int, j: int) -> int:
    """Number of Abelian ideals of ``sl_n`` with rootlet ``(i, j)``."""
    _check_pair(n, i, j)
    return comb(n + i - j - 1, i - 1)


def _check_pair(n: int, i: int, j: int) -> None:
    if not 1 <= i < j <= n:
        raise ValueError(f"({i},{j}) is not a positive root of sl_{n}")


# -- hooks -------------------------------------------------------------------------


@dataclass(frozen=True)
class Hook:
    """A north-east hook: corner ``(top, right)``, arm to column ``left``, leg to row ``bottom``."""

    top: int
    bottom: int
    left: int
    right: int

    @property
    def cells(self) -> tuple[Cell, ...]:
        arm = [(self.top, q) for q in range(self.left, self.right + 1)]
        leg = [(p, self.right) for p in range(self.top + 1, self.bottom + 1)]
        return tuple(arm + leg)

    def __len__(self) -> int:
        return (self.right - self.left + 1) + (self.bottom - self.top)

    def translated(self, n: int) -> tuple[int, int]:
        """``(i', j')``: the hook moved so its corner sits at ``(1, n)`` is ``I(i', j')_min``."""
        return self.bottom - self.top + 1, self.left + (n - self.right)


def hook_decompose(f: FerrersIdeal) -> list[Hook]:
    """Peel first row plus last column repeatedly; innermost hook first."""
    hooks = []
    starts = list(f.row_starts)
    top, right = 1, f.n
    while starts:
        hooks.append(Hook(top, top + len(starts) - 1, starts[0], right))
        # what remains: later rows without their last cell
        starts = [j for j in starts[1:] if j < right]
        top, right = top + 1, right - 1
    return hooks[::-1]


def hook_factors(n: int, hook: Hook) -> tuple[Word, Word]:
    """Leg ``s_{i'-1} ... s_1`` and arm ``s_{j'} ... s_{n-1}``."""
    i, j = hook.translated(n)
    return tuple(range(i - 1, 0, -1)), tuple(range(j, n))


def fill_word(f: FerrersIdeal) -> Word:
    word: list[int] = []
    for hook in hook_decompose(f):
        leg, arm = hook_factors(f.n, hook)
        word.extend((*leg, *arm, 0))
    return tuple(word)


def format_grouped(f: FerrersIdeal) -> str:
    """Filling word with leg and arm factors parenthesised, e.g. ``s0(s2s1)(s8s9)s0``."""
    out = []
    for hook in hook_decompose(f):
        for factor in hook_factors(f.n, hook):
            if factor:
                out.append("(" + "".join(f"s{i}" for i in factor) + ")")
        out.append("s0")
    return "".join(out)


def cell_labels(f: FerrersIdeal) -> dict[Cell, int]:
    """Reflection index written in each cell by the hook filling."""
    labels = {}
    for hook in hook_decompose(f):
        dq = f.n - hook.right
        for p, q in hook.cells:
            if (p, q) == (hook.top, hook.right):
                labels[p, q] = 0
            elif p == hook.top:
                labels[p, q] = q + dq
            else:
                labels[p, q] = p - hook.top
    return labels


def render(f: FerrersIdeal, labels: bool = True) -> str:
    """ASCII picture of the diagram, one text row per matrix row."""
    if not f.row_starts:
        return "(empty diagram)"
    marks = cell_labels(f) if labels else {}
    first = f.row_starts[0]
    width = max(3, len(str(f.n)) + 1, *(len(f"s{v}") for v in marks.values()))
    cols = range(first, f.n + 1)
    head = " " * 4 + " ".join(str(q).rjust(width) for q in cols)
    lines = [head]
    cells = set(f.cells)
    for p in range(1, f.rows + 1):
        row = []
        for q in cols:
            if (p, q) not in cells:
                row.append(".".rjust(width))
            elif labels:
                row.append(f"s{marks[p, q]}".rjust(width))
            else:
                row.append("#".rjust(width))
        lines.append(f"{p:>3} " + " ".join(row))
    return "\n".join(lines)
