"""Plain-text tables: ideals with words and rootlets, fibre-size statistics.

Every function returns a string whose bytes depend only on the Lie type.
"""

from __future__ import annotations

from .affine import format_word
from .checks import fiber_histogram
from .ferrers import fiber_size_formula
from .fibers import fiber_reports
from .ideals import IdealPoset, poset
from .labels import format_label, has_labels, pair_of
from .rootsys import RootSystem, build, format_root


def _grid(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(r[k]) for r in [header, *rows]) for k in range(len(header))]

    def line(cells: list[str]) -> str:
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    rule = "-+-".join("-" * w for w in widths)
    return "\n".join([line(header), rule, *map(line, rows)])


def ideal_table(p: IdealPoset) -> str:
    """Nonzero ideals in (size, roots) order, each described through its lower covers."""
    number = {k: n for n, k in enumerate((k for k, I in enumerate(p.ideals) if I.roots), start=1)}
    below: dict[int, list] = {}
    for e in p.edges:
        below.setdefault(e.upper, []).append(e)
    rows = []
    for k, n in number.items():
        I = p.ideals[k]
        parts = []
        for e in sorted(below[k], key=lambda e: e.lower):
            base = f"#{number[e.lower]} + " if e.lower in number else ""
            parts.append(f"{base}{{{format_root(e.gamma)}}}")
        rows.append([str(n), str(len(I)), " = ".join(parts), format_word(I.word), format_root(I.rootlet)])
    return _grid(rows, ["No.", "#I", "I", "w<I>", "tau(I)"])


def fiber_table(rs: RootSystem) -> str:
    """One row per long positive root: fibre size, minimum and maximum sizes."""
    reports = fiber_reports(poset(rs))
    labelled = has_labels(rs)
    rows = []
    for mu, r in reports.items():
        row = [format_root(mu)]
        if labelled:
            row.append(format_label(rs, mu))
        row += [str(r.size), str(len(r.min_ideal)), str(len(r.max_ideal)), format_word(r.w_mu)]
        rows.append(row)
    header = ["mu"] + (["label"] if labelled else []) + ["#fibre", "#min", "#max", "w_mu"]
    return _grid(rows, header)


def histogram_table(rs: RootSystem) -> str:
    """``m_i`` for the fibre sizes that occur, with the control sum ``2^rank - 1``."""
    hist = fiber_histogram(fiber_reports(poset(rs)))
    sizes = sorted(hist)
    control = sum(i * m for i, m in hist.items())
    header = [""] + [f"m_{i}" for i in sizes] + ["sum i*m_i"]
    row = [str(rs.lie_type)] + [str(hist[i]) for i in sizes] + [f"{control} = 2^{rs.rank}-1"]
    return _grid([row], header)


def fiber_class_table(rs: RootSystem) -> str:
    """The long positive roots grouped by fibre size."""
    reports = fiber_reports(poset(rs))
    groups: dict[int, list[str]] = {}
    for mu, r in reports.items():
        groups.setdefault(r.size, []).append(format_root(mu))
    rows = [[str(i), str(len(g)), " ".join(g)] for i, g in sorted(groups.items())]
    return _grid(rows, ["#fibre", "count", "roots"])


def pascal_grid(rs: RootSystem) -> str:
    """Type A: fibre size over the root ``(i, j)``, in row ``i`` and column ``j``."""
    n = rs.rank + 1
    reports = fiber_reports(poset(rs))
    sizes = {pair_of(rs, mu): r.size for mu, r in reports.items()}
    header = ["i\\j"] + [str(j) for j in range(2, n + 1)]
    rows = []
    for i in range(1, n):
        row = [str(i)]
        for j in range(2, n + 1):
            row.append(str(sizes[i, j]) if j > i else ".")
        rows.append(row)
    agree = all(s == fiber_size_formula(n, i, j) for (i, j), s in sizes.items())
    note = f"binomial C(n+i-j-1, i-1) agrees: {'yes' if agree else 'NO'}"
    return _grid(rows, header) + "\n" + note


def render_tables(rs: RootSystem) -> str:
    """All tables that apply to the type, separated by titled sections."""
    p = poset(rs)
    t = str(rs.lie_type)
    sections = [(f"Abelian ideals of {t}", ideal_table(p) if p.nontrivial else "(none)")]
    sections.append((f"Fibres of the rootlet map for {t}", fiber_table(rs)))
    sections.append((f"Fibre sizes for {t}", histogram_table(rs)))
    if rs.lie_type.family == "E":
        sections.append((f"Long positive roots by fibre size for {t}", fiber_class_table(rs)))
    if rs.lie_type.family == "A":
        sections.append((f"Fibre sizes over (i,j) for {t}", pascal_grid(rs)))
    out = []
    for title, body in sections:
        out += [f"== {title} ==", body, ""]
    return "\n".join(out)


def tables_for(name: str) -> str:
    return render_tables(build(name))
