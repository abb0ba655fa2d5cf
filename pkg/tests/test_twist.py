import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weyltwist import linalg
from weyltwist.twist import (
    AutomorphismError,
    compose,
    compute_M_theta,
    delta0,
    dimension_formula,
    flip,
    identity_automorphism,
    is_twisted_involution,
    make_automorphism,
    rank_one_minus_wtheta,
    resolve_automorphism,
    triality,
    twist_element,
    twisted_classes,
    w0_translation_check,
    random_twist_check,
    closure_check,
)
from weyltwist.weyl import WeylElement, length, longest_element, simple_reflection, word_to_element

from oracles import group, matrix_closure, random_unimodular, rootsys, twisted_orbits_brute


def test_make_automorphism():
    d4 = rootsys("D4")
    th = make_automorphism(d4, {1: 3, 3: 4, 4: 1})
    assert th.perm == (3, 2, 4, 1)
    assert th.order() == 3
    assert identity_automorphism(d4).order() == 1
    with pytest.raises(AutomorphismError, match=r"\(i, j\)"):
        make_automorphism(rootsys("A3"), [2, 1, 3])
    with pytest.raises(AutomorphismError):
        make_automorphism(d4, [1, 1, 2, 3])
    with pytest.raises(AutomorphismError):
        make_automorphism(rootsys("B3"), [3, 2, 1])


def test_delta0_examples():
    assert delta0(rootsys("D4")).is_identity()
    assert delta0(rootsys("A2")).perm == (2, 1)
    assert delta0(rootsys("E6")).perm == (6, 2, 5, 4, 3, 1)
    assert delta0(rootsys("D5")).perm == (1, 2, 3, 5, 4)
    assert delta0(rootsys("D6")).is_identity()
    for name in ["B3", "C4", "F4", "G2", "E7"]:
        assert delta0(rootsys(name)).is_identity()


def test_selectors():
    d4 = rootsys("D4")
    assert flip(d4).perm == (1, 2, 4, 3)
    assert triality(d4, inverse=True).perm == (4, 2, 1, 3)
    assert compose(triality(d4), triality(d4, inverse=True)).is_identity()
    assert resolve_automorphism(d4, "perm=1:3,3:4,4:1").perm == (3, 2, 4, 1)
    assert resolve_automorphism(rootsys("A5"), "flip") == delta0(rootsys("A5"))
    with pytest.raises(AutomorphismError):
        resolve_automorphism(rootsys("A5"), "triality")
    with pytest.raises(AutomorphismError):
        resolve_automorphism(rootsys("B3"), "flip")
    with pytest.raises(AutomorphismError):
        resolve_automorphism(d4, "perm=1-3")
    with pytest.raises(AutomorphismError):
        resolve_automorphism(d4, "nonsense")


def test_twist_element():
    d4 = rootsys("D4")
    th = triality(d4)
    w = word_to_element(d4, [1, 2, 4])
    assert twist_element(identity_automorphism(d4), w) == w
    assert twist_element(th, simple_reflection(d4, 1)) == simple_reflection(d4, 3)
    for i in range(1, 5):
        assert twist_element(th, simple_reflection(d4, i)) == simple_reflection(d4, th(i))
    # P w P^{-1} by explicit matrices
    p = th.matrix
    pinv = linalg.inverse_integer(p)
    assert twist_element(th, w).matrix == tuple(map(tuple, linalg.matmul(linalg.matmul(p, w.matrix), pinv)))
    for name, sel in [("E6", "delta0"), ("D4", "triality"), ("A4", "delta0")]:
        rs = rootsys(name)
        w0 = longest_element(rs)
        assert twist_element(resolve_automorphism(rs, sel), w0) == w0


def test_delta0_acts_as_w0_conjugation():
    rs = rootsys("E6")
    d0 = delta0(rs)
    w0 = longest_element(rs)
    for word in ([1], [2, 4], [1, 3, 4, 5, 6], [6, 5, 2]):
        w = word_to_element(rs, word)
        assert twist_element(d0, w) == w0 * w * w0


# frozen from twisted_orbits_brute (full-group action on matrix-closure elements)
FROZEN = {
    ("A2", "delta0"): ([1, 2, 3], [3]),
    ("D4", "triality"): ([8, 8, 16, 16, 48, 48, 48], [11, 12]),
    ("A3", "delta0"): ([1, 3, 6, 6, 8], [4, 6]),
    ("B3", "id"): ([1, 1, 3, 3, 6, 6, 6, 6, 8, 8], [0, 5, 7, 8, 9]),
    ("G2", "id"): ([1, 1, 2, 2, 3, 3], [0, 5, 5, 6]),
}


@pytest.mark.parametrize("name,sel", list(FROZEN))
def test_partition_matches_brute_force(name, sel):
    rs = rootsys(name)
    th = resolve_automorphism(rs, sel)
    g = group(name)
    part = twisted_classes(rs, th, g)
    sizes, mlens = FROZEN[(name, sel)]
    assert sorted(part.sizes.tolist()) == sizes
    assert sorted(e.length for e in compute_M_theta(part).entries) == mlens

    brute = twisted_orbits_brute(rs, th, matrix_closure(rs))
    assert sorted(len(o) for o in brute) == sizes
    ours = [frozenset(g.element(int(k)) for k in cls) for cls in part.classes()]
    assert set(ours) == {frozenset(o) for o in brute}


def test_a1_identity_classes():
    rs = rootsys("A1")
    part = twisted_classes(rs, identity_automorphism(rs), group("A1"))
    assert [c.tolist() for c in part.classes()] == [[0], [1]]


@pytest.mark.parametrize(
    "name,sel,expected",
    [
        ("D4", "triality", [[], [2]]),
        ("A2", "delta0", [[]]),
        ("A3", "delta0", [[], [1, 3]]),
    ],
)
def test_mtheta_examples(name, sel, expected):
    from weyltwist.weyl import parabolic_longest

    rs = rootsys(name)
    th = resolve_automorphism(rs, sel)
    ms = compute_M_theta(twisted_classes(rs, th, group(name)))
    w0 = longest_element(rs)
    assert set(ms.elements) == {w0 * parabolic_longest(rs, s) for s in expected}


@pytest.mark.parametrize("name,sel", [("D4", "triality"), ("E6", "delta0"), ("D5", "delta0"), ("A4", "delta0"), ("B3", "id")])
def test_partition_integrity(name, sel):
    rs = rootsys(name)
    th = resolve_automorphism(rs, sel)
    g = group(name)
    part = twisted_classes(rs, th, g)
    assert part.sizes.sum() == len(g)
    assert closure_check(part)
    assert random_twist_check(part, samples=60, seed=3)
    assert w0_translation_check(rs, th, g)
    labels = np.concatenate(part.classes())
    assert sorted(labels.tolist()) == list(range(len(g)))
    mins = [int(c.min()) for c in part.classes()]
    assert mins == sorted(mins)


def test_mtheta_uniqueness_is_strict():
    rs = rootsys("G2")
    part = twisted_classes(rs, identity_automorphism(rs), group("G2"))
    ms = compute_M_theta(part)
    tied = [c for c in range(part.num_classes) if part.n_at_max[c] > 1]
    assert tied
    assert len(ms) == part.num_classes - len(tied)


def test_rank_term_examples():
    d4 = rootsys("D4")
    th = triality(d4)
    w0 = longest_element(d4)
    w0s2 = w0 * simple_reflection(d4, 2)
    assert rank_one_minus_wtheta(d4, WeylElement.identity(4), identity_automorphism(d4)) == 0
    assert rank_one_minus_wtheta(d4, w0, th) == 4
    assert rank_one_minus_wtheta(d4, w0s2, th) == 3
    assert dimension_formula(d4, th, w0s2) == 14
    assert dimension_formula(d4, th, w0) == 16
    a1 = rootsys("A1")
    assert dimension_formula(a1, identity_automorphism(a1), longest_element(a1)) == 2


def test_twisted_involution_examples():
    a2 = rootsys("A2")
    idt = identity_automorphism(a2)
    assert is_twisted_involution(idt, WeylElement.identity(2))
    assert not is_twisted_involution(idt, word_to_element(a2, [1, 2]))
    d4 = rootsys("D4")
    th = triality(d4)
    for m in compute_M_theta(twisted_classes(d4, th, group("D4"))).elements:
        assert is_twisted_involution(th, m)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("D4", "triality"), ("E6", "delta0"), ("A5", "delta0"), ("B3", "id"), ("D5", "flip")]),
       st.integers(0, 10**6), st.integers(0, 2**32))
def test_rank_term_unimodular_invariance(case, k, seed):
    name, sel = case
    rs = rootsys(name)
    th = resolve_automorphism(rs, sel)
    g = group(name)
    w = g.element(k % len(g))
    m = linalg.matmul(w.matrix, th.matrix)
    n = rs.rank
    expected = rank_one_minus_wtheta(rs, w, th)
    u, uinv = random_unimodular(n, random.Random(seed))
    conj = linalg.matmul(linalg.matmul(uinv, m), u)
    assert linalg.rank([[int(i == j) - conj[i][j] for j in range(n)] for i in range(n)]) == expected
    assert 0 <= expected <= n
