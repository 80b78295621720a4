"""Abelian ideals of a Borel subalgebra, minuscule affine Weyl group elements and rootlets."""

from .rootsys import LieType, RootSystem, RootSystemError, build, format_root, lie_type, parse_type
from .affine import AffineVector, canonical_element, format_word, inversion_set, parse_word
from .ideals import AbelianIdeal, IdealPoset, enumerate_ideals, generators, is_minuscule, poset
from .fibers import FiberReport, fiber_reports, min_ideal, shortest_to

__all__ = [
    "AbelianIdeal",
    "AffineVector",
    "FiberReport",
    "IdealPoset",
    "LieType",
    "RootSystem",
    "RootSystemError",
    "build",
    "canonical_element",
    "enumerate_ideals",
    "fiber_reports",
    "format_root",
    "format_word",
    "generators",
    "inversion_set",
    "is_minuscule",
    "lie_type",
    "min_ideal",
    "parse_type",
    "parse_word",
    "poset",
    "shortest_to",
]
