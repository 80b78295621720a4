import pytest
from hypothesis import given, settings, strategies as st

from abideals.affine import same_element
from abideals.fibers import fiber_reports, min_ideal
from abideals.ferrers import (
    FerrersIdeal,
    Hook,
    cell_labels,
    fiber_size_formula,
    fill_word,
    format_grouped,
    from_cells,
    from_ideal,
    hook_decompose,
    max_ideal_cells,
    min_ideal_cells,
    render,
    to_ideal,
)
from abideals.ideals import generators, poset
from abideals.labels import pair_of, root_of_pair
from abideals.rootsys import RootSystemError, build

SL10_ROWS = (5, 7, 8, 9)
SL10_WORD = "s0(s2s1)(s8s9)s0(s3s2s1)(s5s6s7s8s9)s0"


def _sl(n):
    return build(f"A{n - 1}")


def test_sl10_example():
    f = FerrersIdeal(10, SL10_ROWS)
    assert len(f) == 15
    assert [len(h) for h in hook_decompose(f)] == [1, 5, 9]
    assert format_grouped(f) == SL10_WORD
    assert fill_word(f) == (0, 2, 1, 8, 9, 0, 3, 2, 1, 5, 6, 7, 8, 9, 0)
    assert set(f.corners) == {(1, 5), (2, 7), (3, 8), (4, 9)}
    ideal = to_ideal(f)
    rs = _sl(10)
    assert {pair_of(rs, g) for g in generators(rs, ideal)} == set(f.corners)
    assert from_ideal(rs, ideal) == f


def test_hook_cells_partition_the_diagram():
    f = FerrersIdeal(10, SL10_ROWS)
    hooks = hook_decompose(f)
    cells = [c for h in hooks for c in h.cells]
    assert sorted(cells) == sorted(f.cells)
    assert hooks[-1] == Hook(1, 4, 5, 10)
    assert hooks[-1].translated(10) == (4, 5)


def test_single_cell_and_rectangles():
    f = FerrersIdeal(4, (4,))
    assert hook_decompose(f) == [Hook(1, 1, 4, 4)]
    assert fill_word(f) == (0,)
    for n in range(3, 8):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                rect = max_ideal_cells(n, i, j)
                assert (rect.rows, rect.columns) == (i, n + 1 - j)
                hook = min_ideal_cells(n, i, j)
                assert len(hook_decompose(hook)) == 1
                assert len(hook) == n + i - j


def test_validation():
    with pytest.raises(ValueError):
        FerrersIdeal(5, (4, 3))
    with pytest.raises(ValueError):
        FerrersIdeal(5, (2, 3))  # 2 rows + 4 columns > 5
    with pytest.raises(ValueError):
        FerrersIdeal(5, (6,))
    with pytest.raises(ValueError):
        from_cells(5, [(1, 5), (1, 3)])
    with pytest.raises(ValueError):
        fiber_size_formula(5, 3, 3)
    with pytest.raises(RootSystemError):
        from_ideal(build("B3"), poset(build("B3")).ideals[1])


def test_cell_labels_match_word_letters():
    f = FerrersIdeal(10, SL10_ROWS)
    labels = cell_labels(f)
    assert sorted(labels.values()) == sorted(fill_word(f))
    assert labels[1, 10] == 0
    assert labels[2, 10] == 1 and labels[4, 10] == 3
    assert labels[1, 5] == 5


def test_render():
    f = FerrersIdeal(4, (3, 4))
    assert render(f, labels=False).splitlines() == [
        "      3   4",
        "  1   #   #",
        "  2   .   #",
    ]
    assert render(f).splitlines()[1:] == ["  1  s3  s0", "  2   .  s1"]
    assert render(FerrersIdeal(4, ())) == "(empty diagram)"


@pytest.mark.parametrize("n", range(2, 9))
def test_fill_word_agrees_with_enumeration(n):
    rs = _sl(n)
    for I in poset(rs).ideals:
        f = from_ideal(rs, I)
        assert same_element(rs, fill_word(f), I.word)
        assert to_ideal(f).root_set == I.root_set
        assert {pair_of(rs, g) for g in generators(rs, I)} == set(f.corners)


@pytest.mark.parametrize("n", range(2, 9))
def test_closed_forms(n):
    rs = _sl(n)
    reports = fiber_reports(poset(rs))
    for mu, r in reports.items():
        i, j = pair_of(rs, mu)
        assert r.size == fiber_size_formula(n, i, j)
        assert from_ideal(rs, r.max_ideal) == max_ideal_cells(n, i, j)
        assert from_ideal(rs, min_ideal(rs, mu)) == min_ideal_cells(n, i, j)


@st.composite
def diagrams(draw):
    n = draw(st.integers(2, 12))
    rows = draw(st.integers(0, n - 1))
    if rows == 0:
        return FerrersIdeal(n, ())
    first = draw(st.integers(rows + 1, n))
    rest = sorted(draw(st.lists(st.integers(first, n), min_size=rows - 1, max_size=rows - 1)))
    return FerrersIdeal(n, (first, *rest))


@settings(max_examples=120, deadline=None)
@given(diagrams())
def test_random_diagrams_round_trip(f):
    ideal = to_ideal(f)
    assert len(ideal) == len(f) == len(fill_word(f))
    assert from_cells(f.n, f.cells) == f if f.cells else True
    rs = _sl(f.n)
    if f.cells:
        assert from_ideal(rs, ideal) == f
        assert {pair_of(rs, g) for g in generators(rs, ideal)} == set(f.corners)
    assert {root_of_pair(rs, p, q) for p, q in f.cells} == ideal.root_set
