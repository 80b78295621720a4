"""The verification battery: every structural statement, checked per Lie type.

``run_checks`` returns a ``TypeReport`` with two groups of results.  ``results``
holds statements with proofs; a failure there is a bug.  ``computational``
holds statements verified only by exhaustive computation (the ``M_mu``
description of the largest ideal in each fibre); a failure there is a finding
and names the offending roots.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import ferrers, reference
from .affine import parse_word, same_element
from .fibers import (
    FiberReport,
    classify_min_ideals,
    compose_law,
    elem_ext_rootlet_law,
    fiber_reports,
    min_ideal,
    min_ideal_generators,
    min_ideal_order_check,
    not_max_checks,
    ranked_check,
)
from .ideals import (
    IdealPoset,
    brute_force_enumerate,
    generators,
    is_minuscule,
    poset,
    saturation_holds,
    validate,
    BRUTE_FORCE_BOUND,
)
from .labels import eps_vector, format_label, pair_of, root_of_pair
from .rootsys import LieType, RootSystem, build, format_root, parse_type

STANDARD_BATTERY = (
    "A1 A2 A3 A4 A5 A6 A7 A8 B2 B3 B4 C2 C3 C4 D4 D5 D6 E6 E7 E8 F4 G2".split()
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class TypeReport:
    lie_type: str
    results: list[CheckResult] = field(default_factory=list)
    computational: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results + self.computational)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results + self.computational if not r.passed]


def _run(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> CheckResult:
    try:
        out = fn()
    except (AssertionError, ValueError, KeyError) as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    ok, detail = out if isinstance(out, tuple) else (out, "")
    return CheckResult(name, bool(ok), detail)


def _failed_keys(flags: dict[str, bool]) -> str:
    bad = [k for k, v in flags.items() if not v]
    return "failed: " + ", ".join(bad) if bad else ""


# -- checks valid in every type ------------------------------------------------------


def peterson_count(p: IdealPoset) -> tuple[bool, str]:
    n = len(p)
    return n == 2 ** p.rs.rank, f"{n} ideals, 2^{p.rs.rank} = {2 ** p.rs.rank}"


def oracle_equivalence(p: IdealPoset) -> tuple[bool, str]:
    oracle = brute_force_enumerate(p.rs)
    mine = set(p.index)
    return mine == oracle and saturation_holds(p.rs, oracle), f"{len(oracle)} subsets pass the filter"


def word_consistency(p: IdealPoset) -> bool:
    for I in p.ideals:
        J = is_minuscule(p.rs, I.word)
        if J is None or J.root_set != I.root_set:
            return False
    return True


def generator_duality(p: IdealPoset) -> bool:
    rs = p.rs
    for I in p.ideals:
        gens = set(generators(rs, I))
        for g in I.roots:
            if validate(rs, I.root_set - {g}) != (g in gens):
                return False
    return True


def intersection_closure(p: IdealPoset) -> bool:
    sets = list(p.index)
    return all(a & b in p.index for k, a in enumerate(sets) for b in sets[k + 1:])


def min_ideal_dimension(rs: RootSystem) -> bool:
    theta = rs.highest_root
    return all(
        len(min_ideal(rs, mu)) == 1 + rs.rho_pairing(theta) - rs.rho_pairing(mu)
        for mu in rs.long_positive_roots
    )


def cardinality_criteria(reports: dict) -> tuple[bool, str]:
    bad = [
        f"{format_root(mu)}:{k}"
        for mu, r in reports.items()
        for k in ("cardinal_i", "cardinal_ii", "ge3", "chain")
        if not r.checks[k]
    ]
    return not bad, ", ".join(bad)


def heisenberg_characterisation(p: IdealPoset) -> tuple[bool, str]:
    rs = p.rs
    records = classify_min_ideals(p)
    agree = all(r.agree for r in records)
    count = sum(r.is_min for r in records)
    n_long = len(rs.long_positive_roots)
    order = min_ideal_order_check(rs)
    return agree and count == n_long and order, (
        f"{count} minimal ideals, {n_long} long positive roots; "
        f"three tests agree: {agree}; order reversed: {order}"
    )


def generator_formulas(p: IdealPoset) -> bool:
    rs = p.rs
    for I in p.ideals:
        generators(rs, I)  # raises on disagreement with the word test
    for mu in rs.long_positive_roots:
        if mu != rs.highest_root:
            min_ideal_generators(rs, mu)
    return True


def rootlet_laws(p: IdealPoset) -> tuple[bool, str]:
    flags = elem_ext_rootlet_law(p)
    return all(flags.values()), _failed_keys(flags)


def maximal_ideals(p: IdealPoset) -> tuple[bool, str]:
    flags = not_max_checks(p)
    return all(flags.values()), f"{len(p.maximal)} maximal ideals; " + _failed_keys(flags)


# -- type-specific closed forms --------------------------------------------------------


def _resolve_word(text: str, words: dict[str, tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for token in text.split():
        if token.startswith("w"):
            out.extend(words["I" + token[1:]])
        else:
            out.extend(parse_word(token))
    return tuple(out)


def f4_table(p: IdealPoset) -> tuple[bool, str]:
    rs = p.rs
    sets: dict[str, frozenset] = {}
    words: dict[str, tuple[int, ...]] = {}
    problems = []
    for row in reference.F4_ROWS:
        candidates = set()
        for base, added in row.unions:
            prev = sets[base] if base else frozenset()
            candidates.add(prev | {tuple(int(ch) for ch in added)})
        if len(candidates) != 1:
            problems.append(f"{row.name}: union descriptions disagree")
            continue
        roots = candidates.pop()
        sets[row.name] = roots
        I = p.find(roots)
        if I is None or len(roots) != row.size:
            problems.append(f"{row.name}: not an ideal of size {row.size}")
            continue
        if format_root(I.rootlet) != row.rootlet:
            problems.append(f"{row.name}: rootlet {format_root(I.rootlet)} != {row.rootlet}")
        for text in row.words:
            w = _resolve_word(text, words)
            J = is_minuscule(rs, w)
            if J is None or J.root_set != roots or not same_element(rs, w, I.word):
                problems.append(f"{row.name}: word {text} does not give the ideal")
        words[row.name] = _resolve_word(row.words[0], words)
    if len(p.nontrivial) != len(reference.F4_ROWS):
        problems.append(f"{len(p.nontrivial)} nonzero ideals, expected {len(reference.F4_ROWS)}")
    maximal = {I.root_set for I in p.maximal}
    if maximal != {sets.get(name) for name in reference.F4_MAXIMAL}:
        problems.append("maximal ideals differ")
    return not problems, "; ".join(problems) or f"{len(reference.F4_ROWS)} rows reproduced"


def g2_list(p: IdealPoset) -> tuple[bool, str]:
    rs = p.rs
    problems = []
    for roots, word, tau in reference.G2_ROWS:
        I = p.find(tuple(int(ch) for ch in r) for r in roots)
        if I is None:
            problems.append(f"{roots} is not an ideal")
            continue
        if format_root(I.rootlet) != tau or not same_element(rs, parse_word(word), I.word):
            problems.append(f"row {roots} differs")
    if len(p.nontrivial) != len(reference.G2_ROWS):
        problems.append("wrong number of ideals")
    return not problems, "; ".join(problems)


def fiber_histogram(reports: dict[tuple, FiberReport]) -> dict[int, int]:
    """``i -> m_i``: how many long positive roots have a fibre of size ``i``."""
    return dict(sorted(Counter(r.size for r in reports.values()).items()))


def e_histogram(p: IdealPoset, reports) -> tuple[bool, str]:
    t = str(p.rs.lie_type)
    hist = fiber_histogram(reports)
    control = sum(i * m for i, m in hist.items())
    ok = hist == reference.E_HISTOGRAMS[t] and control == 2 ** p.rs.rank - 1
    return ok, f"m_i = {hist}; sum i*m_i = {control}"


def e_fiber_classes(p: IdealPoset, reports) -> tuple[bool, str]:
    t = str(p.rs.lie_type)
    preds = reference.E_FIBER_CLASSES[t]
    bad = []
    for mu, r in reports.items():
        hits = [i for i, pred in preds.items() if pred(mu)]
        if hits != [r.size]:
            bad.append(f"{format_root(mu)} (size {r.size}, predicted {hits})")
    return not bad, ", ".join(bad)


def type_a_formulas(p: IdealPoset, reports) -> tuple[bool, str]:
    rs = p.rs
    n = rs.rank + 1
    problems = []
    for mu, r in reports.items():
        i, j = pair_of(rs, mu)
        if r.size != ferrers.fiber_size_formula(n, i, j):
            problems.append(f"#fibre({i},{j}) = {r.size}")
        lo = ferrers.from_ideal(rs, r.min_ideal)
        hi = ferrers.from_ideal(rs, r.max_ideal)
        if lo != ferrers.min_ideal_cells(n, i, j) or hi != ferrers.max_ideal_cells(n, i, j):
            problems.append(f"min/max diagrams for ({i},{j})")
        if len(hi) != i * (n + 1 - j) or len(lo) != n + i - j:
            problems.append(f"min/max sizes for ({i},{j})")
        if (len(hi) == len(lo)) != (i == 1 or j == n):
            problems.append(f"size coincidence for ({i},{j})")
    total = sum(ferrers.fiber_size_formula(n, i, j) for i in range(1, n) for j in range(i + 1, n + 1))
    if total != 2 ** (n - 1) - 1:
        problems.append(f"formula total {total}")
    return not problems, "; ".join(problems)


def type_a_filling(p: IdealPoset) -> tuple[bool, str]:
    rs = p.rs
    bad = 0
    for I in p.ideals:
        f = ferrers.from_ideal(rs, I)
        w = ferrers.fill_word(f)
        J = is_minuscule(rs, w)
        ok = (
            J is not None
            and J.root_set == I.root_set
            and same_element(rs, w, I.word)
            and ferrers.to_ideal(f).root_set == I.root_set
            and {root_of_pair(rs, *c) for c in f.corners} == set(generators(rs, I))
        )
        bad += not ok
    return not bad, f"{len(p)} diagrams filled, {bad} mismatches"


def type_c_formulas(p: IdealPoset, reports) -> tuple[bool, str]:
    rs = p.rs
    n = rs.rank
    problems = []

    def e(a: int, b: int) -> tuple[int, ...]:
        out = [0] * n
        out[a - 1] += 1
        out[b - 1] += 1
        return tuple(out)

    for mu, r in reports.items():
        v = eps_vector(rs, mu)
        i = v.index(2) + 1
        if r.size != 2 ** (i - 1):
            problems.append(f"#fibre(2e{i}) = {r.size}")
        lo = {eps_vector(rs, g) for g in r.min_ideal.roots}
        hi = {eps_vector(rs, g) for g in r.max_ideal.roots}
        if lo != {e(1, k) for k in range(1, i + 1)}:
            problems.append(f"minimal ideal for 2e{i}")
        if hi != {e(k, j) for j in range(1, i + 1) for k in range(1, j + 1)}:
            problems.append(f"maximal ideal for 2e{i}")
        if [eps_vector(rs, g) for g in generators(rs, r.max_ideal)] != [v]:
            problems.append(f"generator of the maximal ideal for 2e{i}")
        if [eps_vector(rs, g) for g in generators(rs, r.min_ideal)] != [e(1, i)]:
            problems.append(f"generator of the minimal ideal for 2e{i}")
        word = (*range(i - 1, 0, -1), 0)
        if not same_element(rs, word, r.min_ideal.word):
            problems.append(f"word of the minimal ideal for 2e{i}")
    return not problems, "; ".join(problems)


def orthogonal_formulas(p: IdealPoset, reports) -> tuple[bool, str]:
    """Fibre sizes over ``e_i +- e_j`` in types B and D, and the ``alpha_{n-2}`` fibre in D."""
    rs = p.rs
    n = rs.rank
    problems = []
    for mu, r in reports.items():
        v = eps_vector(rs, mu)
        i = next(k for k, c in enumerate(v, start=1) if c)
        if i <= 2 and v != _e_minus(n, 1, 2):
            expected = 1
        elif i <= 2:
            expected = 2
        else:
            expected = 2 ** (i - 2)
        if r.size != expected:
            problems.append(f"#fibre({format_label(rs, mu)}) = {r.size}, expected {expected}")
    if rs.lie_type.family == "D" and n >= 6:
        mu = rs.simple_roots[n - 3]
        r = reports[mu]
        if len(r.max_ideal) * 2 != n * n - 3 * n + 6:
            problems.append(f"dim I_max(alpha_{n - 2}) = {len(r.max_ideal)}")
        if len(r.M_mu) * 2 != (n - 3) * (n - 4):
            problems.append(f"#M_mu = {len(r.M_mu)}")
        if r.size != 2 ** (n - 4):
            problems.append(f"#fibre(alpha_{n - 2}) = {r.size}")
    return not problems, "; ".join(problems)


def _e_minus(n: int, a: int, b: int) -> tuple[int, ...]:
    out = [0] * n
    out[a - 1], out[b - 1] = 1, -1
    return tuple(out)


# -- computational verification --------------------------------------------------------


def max_description(reports) -> tuple[bool, str]:
    bad = [format_root(mu) for mu, r in reports.items() if not r.checks["max_conjecture"]]
    if bad:
        return False, "description fails for mu = " + ", ".join(bad)
    return True, f"holds for all {len(reports)} long positive roots"


def chain_full(reports) -> tuple[bool, str]:
    bad = [format_root(mu) for mu, r in reports.items() if not r.checks["chain_full"]]
    return not bad, ", ".join(bad)


# -- driver --------------------------------------------------------------------------------


def run_checks(t: LieType | str) -> TypeReport:
    start = time.perf_counter()
    rs = build(t)
    report = TypeReport(str(rs.lie_type))
    add = report.results.append
    try:
        p = poset(rs)
    except AssertionError as exc:
        add(CheckResult("enumeration", False, str(exc)))
        report.seconds = time.perf_counter() - start
        return report
    add(_run("peterson_count", lambda: peterson_count(p)))
    if len(rs.positive_roots) <= BRUTE_FORCE_BOUND:
        add(_run("oracle_equivalence", lambda: oracle_equivalence(p)))
    add(_run("word_consistency", lambda: word_consistency(p)))
    add(_run("generator_duality", lambda: generator_duality(p)))
    add(_run("intersection_closure", lambda: intersection_closure(p)))
    add(_run("saturation", lambda: ranked_check(p)))
    add(_run("generator_formulas", lambda: generator_formulas(p)))
    add(_run("min_ideal_dimension", lambda: min_ideal_dimension(rs)))

    holder: dict = {}

    def structure() -> tuple[bool, str]:
        holder["reports"] = fiber_reports(p)
        total = sum(r.size for r in holder["reports"].values())
        return total == 2 ** rs.rank - 1, f"fibre sizes sum to {total}"

    add(_run("fiber_partition_and_structure", structure))
    reports = holder.get("reports")
    if reports is None:
        report.seconds = time.perf_counter() - start
        return report
    add(_run("maximal_ideals", lambda: maximal_ideals(p)))
    add(_run("cardinality_criteria", lambda: cardinality_criteria(reports)))
    add(_run("heisenberg_characterisation", lambda: heisenberg_characterisation(p)))
    add(_run("rootlet_edge_law", lambda: rootlet_laws(p)))
    add(_run("compose_law", lambda: compose_law(p)))

    family, name = rs.lie_type.family, str(rs.lie_type)
    if family == "A":
        add(_run("type_a_formulas", lambda: type_a_formulas(p, reports)))
        add(_run("type_a_filling", lambda: type_a_filling(p)))
    elif family == "C":
        add(_run("type_c_formulas", lambda: type_c_formulas(p, reports)))
    elif family in "BD":
        add(_run("orthogonal_formulas", lambda: orthogonal_formulas(p, reports)))
    elif name == "F4":
        add(_run("f4_table", lambda: f4_table(p)))
    elif name == "G2":
        add(_run("g2_list", lambda: g2_list(p)))
    if name in reference.E_HISTOGRAMS:
        add(_run("e_histogram", lambda: e_histogram(p, reports)))
        add(_run("e_fiber_classes", lambda: e_fiber_classes(p, reports)))

    report.computational.append(_run("max_ideal_description", lambda: max_description(reports)))
    report.computational.append(_run("chain_through_last_node", lambda: chain_full(reports)))
    report.seconds = time.perf_counter() - start
    return report


def run_battery(types=STANDARD_BATTERY) -> list[TypeReport]:
    return [run_checks(parse_type(t) if isinstance(t, str) else t) for t in types]
