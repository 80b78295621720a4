"""Abelian ideals of a Borel subalgebra, as sets of positive roots.

Each ideal carries the minuscule word of the affine Weyl group that produces
it.  Enumeration proceeds by elementary extensions: ``I_w | {gamma}`` is an
Abelian ideal iff ``w(delta - gamma)`` is an affine simple root ``alpha_i``,
and then its word is ``s_i w``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .affine import (
    Word,
    apply,
    canonical_element,
    minuscule_roots,
    simple_affine_root,
)
from .rootsys import Root, RootSystem, RootSystemError

BRUTE_FORCE_BOUND = 16


def root_key(rs: RootSystem, roots: Iterable[Root]) -> tuple[Root, ...]:
    """Canonical ordering of a root set: by (height, coordinates)."""
    return tuple(sorted(roots, key=rs.index))


@dataclass(frozen=True)
class AbelianIdeal:
    roots: tuple[Root, ...]
    word: Word
    rootlet: Root | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, gamma: object) -> bool:
        return gamma in self.root_set

    @property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    def issubset(self, other: "AbelianIdeal") -> bool:
        return self.root_set <= other.root_set


@dataclass(frozen=True)
class CoverEdge:
    lower: int
    upper: int
    letter: int
    gamma: Root


@dataclass
class IdealPoset:
    rs: RootSystem
    ideals: list[AbelianIdeal]
    edges: list[CoverEdge]
    index: dict[frozenset[Root], int]

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def find(self, roots: Iterable[Root]) -> AbelianIdeal | None:
        k = self.index.get(frozenset(roots))
        return None if k is None else self.ideals[k]

    @property
    def nontrivial(self) -> list[AbelianIdeal]:
        return [I for I in self.ideals if I.roots]

    def upper_covers(self, k: int) -> list[CoverEdge]:
        return [e for e in self.edges if e.lower == k]

    @property
    def maximal(self) -> list[AbelianIdeal]:
        has_up = {e.lower for e in self.edges}
        return [I for k, I in enumerate(self.ideals) if k not in has_up]


# -- validation ---------------------------------------------------------------


def _check_positive(rs: RootSystem, roots: Iterable[Root]) -> frozenset[Root]:
    roots = frozenset(tuple(r) for r in roots)
    for r in roots:
        if not rs.is_positive_root(r):
            raise RootSystemError(f"{r} is not a positive root of {rs.lie_type}")
    return roots


@lru_cache(maxsize=None)
def _sum_table(rs: RootSystem) -> dict[Root, tuple[frozenset[Root], frozenset[Root]]]:
    """For each positive root: the positive roots it sums with, and those sums."""
    table = {}
    for g in rs.positive_roots:
        partners = [nu for nu in rs.positive_roots if rs.is_root(rs.add(g, nu))]
        table[g] = frozenset(partners), frozenset(rs.add(g, nu) for nu in partners)
    return table


def is_abelian_subalgebra(rs: RootSystem, roots: Iterable[Root]) -> bool:
    """Condition (a) only: no two elements sum to a root."""
    roots = _check_positive(rs, roots)
    table = _sum_table(rs)
    return all(table[g][0].isdisjoint(roots) for g in roots)


def validate(rs: RootSystem, roots: Iterable[Root]) -> bool:
    """Abelian (no two elements sum to a root) and an ideal (closed under adding positive roots)."""
    roots = _check_positive(rs, roots)
    table = _sum_table(rs)
    return all(table[g][0].isdisjoint(roots) and table[g][1] <= roots for g in roots)


# -- minuscule words ----------------------------------------------------------


def _images(rs: RootSystem, word: Word) -> np.ndarray:
    """``w(delta - gamma)`` for every positive root, as rows ``(finite..., level)``."""
    lin = np.array(
        [[*v.finite, v.level] for v in (apply(rs, word, simple_affine_root(rs, i))
                                         for i in range(1, rs.rank + 1))],
        dtype=np.int64,
    )
    pos = np.array(rs.positive_roots, dtype=np.int64)
    out = -(pos @ lin)
    out[:, -1] += 1
    return out


def _simple_lookup(rs: RootSystem) -> dict[tuple[int, ...], int]:
    table = {}
    for i in range(rs.rank + 1):
        a = simple_affine_root(rs, i)
        table[(*a.finite, a.level)] = i
    return table


def rootlet_of_word(rs: RootSystem, word: Word) -> Root:
    """``w(alpha_0) + delta``, required to be a long positive root."""
    v = apply(rs, word, simple_affine_root(rs, 0))
    if v.level != -1 or not rs.is_positive_root(v.finite) or not rs.is_long(v.finite):
        raise AssertionError(f"rootlet of {word} is {v}, not a long positive root")
    return v.finite


def is_minuscule(rs: RootSystem, word: Word) -> AbelianIdeal | None:
    """The ideal of a minuscule word, or ``None``.

    The returned root set is checked to be an Abelian ideal.
    """
    roots = minuscule_roots(rs, word)
    if roots is None:
        return None
    if not validate(rs, roots):
        raise AssertionError(f"minuscule word {word} gave a non-ideal {sorted(roots)}")
    rootlet = rootlet_of_word(rs, word) if roots else None
    return AbelianIdeal(root_key(rs, roots), tuple(word), rootlet)


def make_ideal(rs: RootSystem, roots: Iterable[Root], word: Word) -> AbelianIdeal:
    key = root_key(rs, roots)
    return AbelianIdeal(key, tuple(word), rootlet_of_word(rs, word) if key else None)


def elementary_extensions(rs: RootSystem, ideal: AbelianIdeal) -> list[tuple[Root, AbelianIdeal]]:
    """All ``(gamma, I | {gamma})`` that are again Abelian ideals, sorted by gamma."""
    images = _images(rs, ideal.word)
    lookup = _simple_lookup(rs)
    have = ideal.root_set
    out = []
    for k, gamma in enumerate(rs.positive_roots):
        if gamma in have:
            continue
        i = lookup.get(tuple(int(c) for c in images[k]))
        if i is not None:
            out.append((gamma, make_ideal(rs, have | {gamma}, (i, *ideal.word))))
    return out


def generators(rs: RootSystem, ideal: AbelianIdeal) -> tuple[Root, ...]:
    """Roots ``gamma`` of the ideal with ``gamma - alpha`` outside it for every positive ``alpha``.

    Cross-checked against the word criterion ``w(delta - gamma) in -Pi_hat``.
    """
    have = ideal.root_set
    combinatorial = tuple(
        g for g in ideal.roots
        if not any(rs.sub(g, a) in have for a in rs.positive_roots)
    )
    by_word = generators_by_word(rs, ideal)
    if combinatorial != by_word:
        raise AssertionError(
            f"generator mismatch for {ideal.roots}: {combinatorial} vs {by_word}"
        )
    return combinatorial


def generators_by_word(rs: RootSystem, ideal: AbelianIdeal) -> tuple[Root, ...]:
    images = _images(rs, ideal.word)
    neg_simple = {tuple(-c for c in key) for key in _simple_lookup(rs)}
    return tuple(
        g for g in ideal.roots
        if tuple(int(c) for c in images[rs.index(g)]) in neg_simple
    )


# -- enumeration --------------------------------------------------------------


def enumerate_ideals(rs: RootSystem) -> IdealPoset:
    """Breadth-first closure from the empty ideal under elementary extensions.

    Duplicate discoveries are checked to give the same group element, and the
    total is checked against ``2**rank``.
    """
    empty = AbelianIdeal((), ())
    ideals = [empty]
    index = {frozenset(): 0}
    keys = {0: canonical_element(rs, ())}
    edges = []
    layer = [0]
    while layer:
        nxt = []
        for k in layer:
            for gamma, J in elementary_extensions(rs, ideals[k]):
                key = J.root_set
                if key in index:
                    j = index[key]
                    if canonical_element(rs, J.word) != keys[j]:
                        raise AssertionError(
                            f"two different group elements for ideal {J.roots}"
                        )
                else:
                    j = len(ideals)
                    ideals.append(J)
                    index[key] = j
                    keys[j] = canonical_element(rs, J.word)
                    nxt.append(j)
                edges.append(CoverEdge(k, j, J.word[0], gamma))
        layer = sorted(nxt, key=lambda j: tuple(rs.index(r) for r in ideals[j].roots))
    if len(ideals) != 2 ** rs.rank:
        raise AssertionError(
            f"{rs.lie_type}: found {len(ideals)} Abelian ideals, expected {2 ** rs.rank}"
        )
    # deterministic order: (cardinality, canonical root-set key)
    order = sorted(range(len(ideals)),
                   key=lambda j: (len(ideals[j]), tuple(rs.index(r) for r in ideals[j].roots)))
    renum = {old: new for new, old in enumerate(order)}
    ideals = [ideals[j] for j in order]
    edges = sorted(
        (CoverEdge(renum[e.lower], renum[e.upper], e.letter, e.gamma) for e in edges),
        key=lambda e: (e.lower, e.upper),
    )
    index = {I.root_set: k for k, I in enumerate(ideals)}
    return IdealPoset(rs, ideals, edges, index)


_POSET_CACHE: dict[object, IdealPoset] = {}


def poset(rs: RootSystem) -> IdealPoset:
    """Cached ``enumerate_ideals``."""
    if rs.lie_type not in _POSET_CACHE:
        _POSET_CACHE[rs.lie_type] = enumerate_ideals(rs)
    return _POSET_CACHE[rs.lie_type]


def brute_force_enumerate(rs: RootSystem, bound: int = BRUTE_FORCE_BOUND) -> set[frozenset[Root]]:
    """All Abelian ideals by filtering every subset of the positive roots."""
    roots = rs.positive_roots
    n = len(roots)
    if n > bound:
        raise ValueError(f"{rs.lie_type} has {n} positive roots; exhaustive bound is {bound}")
    idx = {r: k for k, r in enumerate(roots)}
    need = [0] * n      # roots forced by condition (b)
    clash = [0] * n     # roots whose sum with this one is a root
    for a, g in enumerate(roots):
        for b, nu in enumerate(roots):
            s = rs.add(g, nu)
            if rs.is_root(s):
                need[a] |= 1 << idx[s]
                clash[a] |= 1 << b
    found = set()
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            a = low.bit_length() - 1
            if need[a] & ~mask or clash[a] & mask:
                ok = False
                break
            m ^= low
        if ok:
            found.add(frozenset(roots[a] for a in range(n) if mask >> a & 1))
    return found


def saturation_holds(rs: RootSystem, ideal_sets: set[frozenset[Root]]) -> bool:
    """Ranked-poset check on a bare family of root sets.

    For ``I`` strictly inside ``J`` some single root of ``J - I`` extends ``I``
    inside the family.  Also checks the maximal-element extension rule: a maximal
    root of the complement that does not sum to a root with ``I`` extends it.
    """
    for I in ideal_sets:
        for J in ideal_sets:
            if I < J and not any(I | {g} in ideal_sets for g in J - I):
                return False
        for kappa in rs.positive_roots:
            if kappa in I:
                continue
            above = (rs.add(kappa, a) for a in rs.positive_roots)
            maximal = all(s in I for s in above if rs.is_root(s))
            disjoint = not any(rs.is_root(rs.add(kappa, g)) for g in I)
            if maximal and disjoint and I | {kappa} not in ideal_sets:
                return False
    return True


# -- Hasse diagram --------------------------------------------------------------


@dataclass(frozen=True)
class HasseNode:
    index: int
    size: int
    roots: tuple[Root, ...]
    generators: tuple[Root, ...]
    rootlet: Root | None
    word: Word


@dataclass(frozen=True)
class Hasse:
    lie_type: str
    nodes: tuple[HasseNode, ...]
    edges: tuple[tuple[int, int], ...]


def hasse(p: IdealPoset) -> Hasse:
    nodes = tuple(
        HasseNode(k, len(I), I.roots, generators(p.rs, I), I.rootlet, I.word)
        for k, I in enumerate(p.ideals)
    )
    edges = tuple(sorted({(e.lower, e.upper) for e in p.edges}))
    return Hasse(str(p.rs.lie_type), nodes, edges)


def cover_path_exists(p: IdealPoset, lo: int, hi: int) -> bool:
    """Some chain of cover edges leads from ideal ``lo`` to ideal ``hi``."""
    target = p.ideals[hi].root_set
    frontier = {lo}
    while frontier:
        if hi in frontier:
            return True
        frontier = {
            e.upper for e in p.edges
            if e.lower in frontier and p.ideals[e.upper].root_set <= target
        }
    return False

