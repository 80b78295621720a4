"""Reference values for the exceptional types, kept as plain data.

Roots are coordinate strings in the numbering of ``rootsys``.  The checks in
``checks`` compare computed results against these values; nothing here is
used to compute anything.
"""

from __future__ import annotations

from typing import Callable, NamedTuple


class ReferenceRow(NamedTuple):
    """One nonzero ideal of F4.

    ``unions`` lists ``(earlier row name, added root)`` descriptions (the first
    row uses ``None``); ``words`` are alternative words in which a token
    ``w<suffix>`` stands for the word of row ``I<suffix>``.
    """

    name: str
    size: int
    unions: tuple[tuple[str | None, str], ...]
    words: tuple[str, ...]
    rootlet: str


F4_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow("I1", 1, ((None, "2432"),), ("s0",), "2432"),
    ReferenceRow("I2", 2, (("I1", "2431"),), ("s4 s0",), "2431"),
    ReferenceRow("I3", 3, (("I2", "2421"),), ("s3 s4 s0",), "2421"),
    ReferenceRow("I4", 4, (("I3", "2321"),), ("s2 s3 s4 s0",), "2221"),
    ReferenceRow("I'5", 5, (("I4", "2221"),), ("s3 s2 s3 s4 s0",), "2211"),
    ReferenceRow("I''5", 5, (("I4", "1321"),), ("s1 s2 s3 s4 s0",), "0221"),
    ReferenceRow("I'6", 6, (("I'5", "2211"),), ("s4 s3 s2 s3 s4 s0",), "2210"),
    ReferenceRow("I''6", 6, (("I'5", "1321"), ("I''5", "2221")), ("s1 s3 s2 s3 s4 s0",), "0211"),
    ReferenceRow("I'7", 7, (("I'6", "2210"),), ("s0 w'6",), "2210"),
    ReferenceRow("I''7", 7, (("I'6", "1321"), ("I''6", "2211")), ("s1 w'6", "s4 w''6"), "0210"),
    ReferenceRow("I'''7", 7, (("I''6", "1221"),), ("s2 w''6",), "0011"),
    ReferenceRow("I'8", 8, (("I'7", "1321"), ("I''7", "2210")), ("s1 w'7", "s0 w''7"), "0210"),
    ReferenceRow("I''8", 8, (("I''7", "1221"), ("I'''7", "2211")), ("s2 w''7", "s4 w'''7"), "0010"),
    ReferenceRow("I'''8", 8, (("I'''7", "0221"),), ("s3 w'''7",), "0001"),
    ReferenceRow("I9", 9, (("I'8", "1221"), ("I''8", "2210")), ("s2 w'8", "s0 w''8"), "0010"),
)

F4_MAXIMAL = ("I'''8", "I9")

# G2 with alpha_1 short, alpha_2 long: (roots, word, rootlet) for each nonzero ideal.
# Replacing 21 by 01 in the third ideal gives a set that is not
# upward closed (01 + 10 = 11 is a root) and s1 s2 s0 inverts delta - 21.
G2_ROWS: tuple[tuple[tuple[str, ...], str, str], ...] = (
    (("32",), "s0", "32"),
    (("32", "31"), "s2 s0", "31"),
    (("32", "31", "21"), "s1 s2 s0", "01"),
)
G2_NOT_AN_IDEAL = ("32", "31", "01")

# fibre size i -> number m_i of long positive roots whose fibre has i ideals
E_HISTOGRAMS: dict[str, dict[int, int]] = {
    "E6": {1: 21, 2: 9, 3: 4, 6: 2},
    "E7": {1: 33, 2: 15, 3: 8, 4: 4, 6: 2, 12: 1},
    "E8": {1: 57, 2: 27, 3: 16, 4: 10, 5: 6, 6: 3, 8: 1},
}

Predicate = Callable[[tuple[int, ...]], bool]


def _c(root: tuple[int, ...], k: int) -> int:
    return root[k - 1]


def _zero(root: tuple[int, ...], *ks: int) -> bool:
    return all(root[k - 1] == 0 for k in ks)


def _members(*roots: str) -> Predicate:
    wanted = {tuple(int(ch) for ch in r) for r in roots}
    return lambda root: tuple(root) in wanted


# fibre size i -> membership test for the set of roots with that fibre size
E_FIBER_CLASSES: dict[str, dict[int, Predicate]] = {
    "E6": {
        1: lambda c: _c(c, 6) > 0,
        2: lambda c: _zero(c, 6) and _c(c, 3) > 0,
        3: _members("110000", "010000", "000110", "000100"),
        6: _members("100000", "000010"),
    },
    "E7": {
        1: lambda c: _c(c, 6) > 0,
        2: lambda c: _zero(c, 6) and _c(c, 5) > 0,
        3: lambda c: _zero(c, 6, 5) and _c(c, 4) > 0,
        4: lambda c: _zero(c, 6, 5, 4) and (_c(c, 7) > 0 or _c(c, 3) > 0),
        6: _members("0100000", "1100000"),
        12: _members("1000000"),
    },
    "E8": {
        1: lambda c: _c(c, 1) > 0,
        2: lambda c: _zero(c, 1) and _c(c, 2) > 0,
        3: lambda c: _zero(c, 1, 2) and _c(c, 3) > 0,
        4: lambda c: _zero(c, 1, 2, 3) and _c(c, 4) > 0,
        5: lambda c: _zero(c, 1, 2, 3, 4) and _c(c, 5) > 0,
        6: _members("00000001", "00000100", "00000110"),
        8: _members("00000010"),
    },
}
