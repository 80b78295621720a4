import pytest
from hypothesis import given, settings, strategies as st

from abideals.affine import (
    AffineVector,
    affine_inner,
    affine_reflect,
    apply,
    canonical_element,
    delta_minus,
    format_word,
    in_finite_weyl_group,
    inversion_set,
    is_negative,
    is_positive,
    is_reduced,
    length,
    minuscule_roots,
    parse_word,
    same_element,
    simple_affine_root,
)
from abideals.ideals import is_minuscule, poset
from abideals.rootsys import RootSystemError, build

F4 = build("F4")
G2 = build("G2")
A2 = build("A2")


def _v(rs, coords, level):
    return AffineVector(tuple(coords), level)


def test_affine_inner_examples():
    rs = F4
    a0 = simple_affine_root(rs, 0)
    assert affine_inner(rs, a0, a0) == 2
    for g in rs.positive_roots:
        assert affine_inner(rs, delta_minus(rs, g), a0) == rs.inner(g, rs.highest_root)
    delta = AffineVector(rs.zero, 1)
    assert affine_inner(rs, delta, a0) == 0


def test_s0_examples():
    rs = F4
    a0 = simple_affine_root(rs, 0)
    assert affine_reflect(rs, 0, a0) == -a0
    theta = rs.highest_root
    for g in rs.positive_roots:
        image = affine_reflect(rs, 0, delta_minus(rs, g))
        if rs.coroot_pairing(g, theta) == 1:
            assert image == AffineVector(rs.sub(theta, g), 0)
        if rs.inner(g, theta) == 0:
            assert image == delta_minus(rs, g)
    with pytest.raises(RootSystemError):
        affine_reflect(rs, 5, a0)


def test_apply_examples():
    a0 = simple_affine_root(G2, 0)
    assert apply(G2, (), a0) == a0
    tau = apply(G2, (0,), a0).shift(1)
    assert tau == AffineVector(G2.highest_root, 0)
    tau = apply(G2, (2, 0), a0).shift(1)
    assert tau == _v(G2, (3, 1), 0)


def test_inversion_set_examples():
    a0 = simple_affine_root(F4, 0)
    assert inversion_set(F4, (0,)) == {a0}
    assert inversion_set(F4, ()) == frozenset()
    # alpha short, beta long; the third root of the largest ideal is 2 alpha + beta
    got = inversion_set(G2, (1, 2, 0))
    assert got == {_v(G2, (-3, -2), 1), _v(G2, (-3, -1), 1), _v(G2, (-2, -1), 1)}
    # the set {3a+2b, 3a+b, b} is not upward closed: b + a is a root
    assert G2.is_root(G2.add((0, 1), (1, 0)))


def test_is_minuscule_examples():
    assert is_minuscule(F4, (0,)).roots == (F4.highest_root,)
    assert is_minuscule(F4, (1,)) is None
    I4 = is_minuscule(F4, (2, 3, 4, 0))
    assert set(I4.roots) == {(2, 4, 3, 2), (2, 4, 3, 1), (2, 4, 2, 1), (2, 3, 2, 1)}
    assert I4.rootlet == (2, 2, 2, 1)
    # s0 s0 is the identity: not reduced, inversion set empty
    assert minuscule_roots(F4, (0, 0)) == frozenset()
    # level-2 inversion: not minuscule
    assert minuscule_roots(A2, (0, 1, 2, 0)) is None


def test_canonical_element_examples():
    assert same_element(A2, (1, 2, 1), (2, 1, 2))
    assert canonical_element(A2, (0,)) != canonical_element(A2, (1,))
    w6p = (4, 3, 2, 3, 4, 0)
    w6pp = (1, 3, 2, 3, 4, 0)
    assert same_element(F4, (1, *w6p), (4, *w6pp))
    assert in_finite_weyl_group(F4, (1, 2, 3))
    assert not in_finite_weyl_group(F4, (1, 0))


def test_positivity():
    assert is_positive(AffineVector((1, 0), 0))
    assert is_positive(AffineVector((-1, -1), 1))
    assert is_negative(AffineVector((-1, 0), 0))
    assert is_negative(AffineVector((1, 1), -1))


def test_word_formatting():
    assert format_word((2, 3, 4, 0)) == "s2 s3 s4 s0"
    assert format_word(()) == "1"
    assert parse_word("s2 s3 s4 s0") == (2, 3, 4, 0)
    assert parse_word("s_1 s_{10}") == (1, 10)
    assert parse_word("1") == ()
    with pytest.raises(ValueError):
        parse_word("t2")


def _bounded_domain_inversions(rs, word):
    """Inversions tested only on positive roots, delta - gamma and 2 delta - theta."""
    out = set()
    domain = [AffineVector(g, 0) for g in rs.positive_roots]
    domain += [delta_minus(rs, g) for g in rs.positive_roots]
    domain.append(delta_minus(rs, rs.highest_root, 2))
    for v in domain:
        if is_negative(apply(rs, word, v)):
            out.add(v)
    return out


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_minuscule_words_properties(name):
    rs = build(name)
    for I in poset(rs).ideals:
        w = I.word
        inv = inversion_set(rs, w)
        assert inv == _bounded_domain_inversions(rs, w)
        assert len(inv) == len(w) == len(I)
        assert is_reduced(rs, w)
        for i in range(1, rs.rank + 1):
            assert is_positive(apply(rs, w, simple_affine_root(rs, i)))
        for g in rs.positive_roots:
            assert is_positive(apply(rs, w, delta_minus(rs, g, 2)))


@settings(max_examples=80, deadline=None)
@given(name=st.sampled_from(["A3", "B3", "C3", "G2", "F4"]), data=st.data())
def test_reflections_preserve_form_and_length_changes_by_one(name, data):
    rs = build(name)
    word = tuple(data.draw(st.lists(st.integers(0, rs.rank), max_size=7)))
    i = data.draw(st.integers(0, rs.rank))
    v = AffineVector(data.draw(st.sampled_from(rs.positive_roots)), data.draw(st.integers(-2, 2)))
    u = AffineVector(data.draw(st.sampled_from(rs.positive_roots)), data.draw(st.integers(-2, 2)))
    assert affine_inner(rs, affine_reflect(rs, i, v), affine_reflect(rs, i, u)) == affine_inner(rs, v, u)
    n = length(rs, word)
    assert n <= len(word) and (len(word) - n) % 2 == 0
    assert abs(length(rs, (i, *word)) - n) == 1


@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_inversion_count_matches_reduced_length_in_a2(data):
    # A2 affine: brute-force length by breadth-first search over the group
    rs = A2
    word = tuple(data.draw(st.lists(st.integers(0, 2), max_size=6)))
    target = canonical_element(rs, word)
    seen = {canonical_element(rs, ()): 0}
    layer = [()]
    d = 0
    while target not in seen:
        d += 1
        nxt = []
        for w in layer:
            for i in range(3):
                w2 = (i, *w)
                key = canonical_element(rs, w2)
                if key not in seen:
                    seen[key] = d
                    nxt.append(w2)
        layer = nxt
    assert length(rs, word) == seen[target]
