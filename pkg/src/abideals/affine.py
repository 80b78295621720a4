"""Real affine roots and words in the affine Weyl group.

An affine vector ``x + k*delta`` is stored as ``AffineVector(x, k)``.  The
lambda-component of the extended space is never needed and is dropped.

A word is a tuple of reflection indices in ``0..rank`` (0 is the affine
reflection ``s_0`` in ``alpha_0 = delta - theta``).  Words act right to left:
``(2, 3, 4, 0)`` is ``s_2 s_3 s_4 s_0`` and applies ``s_0`` first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple, Sequence

from .rootsys import Root, RootSystem, RootSystemError

Word = tuple[int, ...]


class AffineVector(NamedTuple):
    finite: Root
    level: int

    def __neg__(self) -> "AffineVector":
        return AffineVector(tuple(-c for c in self.finite), -self.level)

    def shift(self, k: int) -> "AffineVector":
        return AffineVector(self.finite, self.level + k)


def _sign(x: Root) -> int:
    if any(c > 0 for c in x):
        return 1
    if any(c < 0 for c in x):
        return -1
    return 0


def is_positive(v: AffineVector) -> bool:
    """Positivity for real affine roots: level >= 1, or level 0 with a positive finite part."""
    return v.level >= 1 or (v.level == 0 and _sign(v.finite) > 0)


def is_negative(v: AffineVector) -> bool:
    return is_positive(-v)


def delta_minus(rs: RootSystem, gamma: Root, k: int = 1) -> AffineVector:
    """``k*delta - gamma``."""
    return AffineVector(tuple(-c for c in gamma), k)


def simple_affine_root(rs: RootSystem, i: int) -> AffineVector:
    if i == 0:
        return delta_minus(rs, rs.highest_root)
    return AffineVector(rs.simple_roots[i - 1], 0)


def affine_inner(rs: RootSystem, v1: AffineVector, v2: AffineVector) -> Fraction:
    """delta is isotropic and orthogonal to the finite part."""
    return rs.inner(v1.finite, v2.finite)


def affine_reflect(rs: RootSystem, i: int, v: AffineVector) -> AffineVector:
    if i == 0:
        theta = rs.highest_root
        # (x + k delta, alpha_0^vee) = -(x, theta^vee); theta^vee = theta as (theta, theta) = 2
        c = rs.inner(v.finite, theta)
        assert c.denominator == 1
        c = int(c)
        return AffineVector(tuple(a - c * t for a, t in zip(v.finite, theta)), v.level + c)
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"reflection index {i} out of range 0..{rs.rank}")
    return AffineVector(rs.simple_reflection(i, v.finite), v.level)


def apply(rs: RootSystem, word: Sequence[int], v: AffineVector) -> AffineVector:
    """Apply a word to ``v``, rightmost letter first."""
    for i in reversed(word):
        v = affine_reflect(rs, i, v)
    return v


def apply_inverse(rs: RootSystem, word: Sequence[int], v: AffineVector) -> AffineVector:
    return apply(rs, tuple(reversed(word)), v)


def apply_finite(rs: RootSystem, word: Sequence[int], x: Root) -> Root:
    """Action of a word of finite letters on a root-lattice element."""
    v = apply(rs, word, AffineVector(tuple(x), 0))
    if v.level != 0:
        raise ValueError("word does not preserve the finite part")
    return v.finite


def canonical_element(rs: RootSystem, word: Sequence[int]) -> tuple[AffineVector, ...]:
    """Images of ``alpha_0, ..., alpha_p``; equal keys iff equal group elements."""
    return tuple(apply(rs, word, simple_affine_root(rs, i)) for i in range(rs.rank + 1))


def same_element(rs: RootSystem, w1: Sequence[int], w2: Sequence[int]) -> bool:
    return canonical_element(rs, w1) == canonical_element(rs, w2)


def in_finite_weyl_group(rs: RootSystem, word: Sequence[int]) -> bool:
    """True iff the group element lies in the finite Weyl group W."""
    return all(v.level == 0 for v in canonical_element(rs, word)[1:])


def _linear_images(rs: RootSystem, word: Sequence[int]) -> tuple[AffineVector, ...]:
    return tuple(apply(rs, word, simple_affine_root(rs, i)) for i in range(1, rs.rank + 1))


def inversion_set(rs: RootSystem, word: Sequence[int]) -> frozenset[AffineVector]:
    """The full inversion set ``{a > 0 : w(a) < 0}``, computed exactly.

    ``w(x + k*delta) = w(x) + k*delta``; for each finite root ``x`` the levels
    ``k`` with ``x + k*delta`` positive and its image negative form a finite
    interval, so the set is enumerated without any depth cutoff.
    """
    images = _linear_images(rs, word)
    out = set()
    for pos in rs.positive_roots:
        for x in (pos, tuple(-c for c in pos)):
            fin = [0] * rs.rank
            lev = 0
            for c, img in zip(x, images):
                if c:
                    lev += c * img.level
                    for j, a in enumerate(img.finite):
                        fin[j] += c * a
            k_min = 0 if x is pos else 1
            # image level is lev + k; negative iff lev + k <= -1, or == 0 with negative finite part
            k_max = -lev if _sign(tuple(fin)) < 0 else -lev - 1
            for k in range(k_min, k_max + 1):
                out.add(AffineVector(x, k))
    return frozenset(out)


def length(rs: RootSystem, word: Sequence[int]) -> int:
    """Coxeter length of the group element, as the size of its inversion set."""
    return len(inversion_set(rs, word))


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    return length(rs, word) == len(word)


def minuscule_roots(rs: RootSystem, word: Sequence[int]) -> frozenset[Root] | None:
    """``{gamma : delta - gamma in N(w)}`` if ``w`` is minuscule, else ``None``."""
    inv = inversion_set(rs, word)
    if any(v.level != 1 for v in inv):
        return None
    return frozenset(tuple(-c for c in v.finite) for v in inv)


def format_word(word: Sequence[int]) -> str:
    """``(2, 3, 4, 0)`` -> ``"s2 s3 s4 s0"``; the identity is ``"1"``."""
    return " ".join(f"s{i}" for i in word) if word else "1"


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1", "e"):
        return ()
    letters = re.findall(r"s_?\{?(\d+)\}?", text)
    if not letters or re.sub(r"[\s()·*]|s_?\{?\d+\}?", "", text):
        raise ValueError(f"cannot parse word {text!r}")
    return tuple(int(i) for i in letters)
