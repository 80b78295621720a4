import pytest
from hypothesis import given, settings, strategies as st

from abideals.labels import (
    AmbiguousRootError,
    eps_vector,
    format_eps,
    format_label,
    has_labels,
    pair_of,
    parse_eps,
    parse_label,
    resolve_root,
    root_of_pair,
)
from abideals.rootsys import RootSystemError, build


def test_pairs():
    rs = build("A4")
    assert root_of_pair(rs, 1, 5) == rs.highest_root
    assert root_of_pair(rs, 2, 4) == (0, 1, 1, 0)
    assert pair_of(rs, (0, 1, 1, 0)) == (2, 4)
    with pytest.raises(RootSystemError):
        root_of_pair(rs, 3, 3)
    with pytest.raises(RootSystemError):
        pair_of(build("B3"), (1, 0, 0))


@pytest.mark.parametrize("name,theta", [("B4", "e1+e2"), ("C4", "2e1"), ("D5", "e1+e2")])
def test_highest_root_labels(name, theta):
    rs = build(name)
    assert format_label(rs, rs.highest_root) == theta
    assert parse_label(rs, theta) == rs.highest_root


def test_eps_formatting():
    assert format_eps((1, -1, 0)) == "e1-e2"
    assert format_eps((0, 0, 2)) == "2e3"
    assert format_eps((0, -1, 1)) == "-e2+e3"
    assert parse_eps("e1 - e2", 3) == (1, -1, 0)
    assert parse_eps("ε_1+ε_3", 3) == (1, 0, 1)
    assert parse_eps("2eps2", 3) == (0, 2, 0)
    for bad in ["", "e4", "e1e2", "x1", "e1+"]:
        with pytest.raises(RootSystemError):
            parse_eps(bad, 3)


def test_simple_roots_in_each_family():
    assert eps_vector(build("B3"), (0, 0, 1)) == (0, 0, 1)
    assert eps_vector(build("C3"), (0, 0, 1)) == (0, 0, 2)
    assert eps_vector(build("D4"), (0, 0, 0, 1)) == (0, 0, 1, 1)
    assert eps_vector(build("D4"), (0, 0, 1, 0)) == (0, 0, 1, -1)


@pytest.mark.parametrize("name", ["A5", "B4", "C4", "D5", "B2", "C2", "D4"])
def test_every_root_round_trips(name):
    rs = build(name)
    labels = [format_label(rs, r) for r in rs.positive_roots]
    assert len(set(labels)) == len(labels)
    for r, text in zip(rs.positive_roots, labels):
        assert parse_label(rs, text) == r
        assert resolve_root(rs, text) == r
        assert resolve_root(rs, text, "label") == r
        assert resolve_root(rs, ",".join(map(str, r)), "coords") == r


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5", "A8", "B8", "C8", "D8"])
def test_no_string_reads_as_two_roots(name):
    rs = build(name)
    for r in rs.positive_roots:
        for text in (format_label(rs, r), ",".join(map(str, r))):
            resolve_root(rs, text)


def test_resolve_errors():
    a2 = build("A2")
    with pytest.raises(RootSystemError):
        resolve_root(a2, "(2,2)")
    with pytest.raises(RootSystemError):
        resolve_root(a2, "(1,2)", "coords")
    with pytest.raises(ValueError):
        resolve_root(a2, "11", "other")
    f4 = build("F4")
    assert not has_labels(f4)
    assert resolve_root(f4, "0210") == (0, 2, 1, 0)
    with pytest.raises(RootSystemError):
        resolve_root(f4, "0210", "label")
    assert issubclass(AmbiguousRootError, RootSystemError)


@settings(max_examples=60, deadline=None)
@given(name=st.sampled_from(["B5", "C5", "D6"]), data=st.data())
def test_inner_product_in_eps_coordinates(name, data):
    rs = build(name)
    x = data.draw(st.sampled_from(rs.positive_roots))
    y = data.draw(st.sampled_from(rs.positive_roots))
    ex, ey = eps_vector(rs, x), eps_vector(rs, y)
    dot = sum(a * b for a, b in zip(ex, ey))
    # the standard dot product is a fixed multiple of the normalised form
    scale = {"B": 1, "C": 2, "D": 1}[rs.lie_type.family]
    assert dot == rs.inner(x, y) * scale
