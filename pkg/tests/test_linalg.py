import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from weyltwist import linalg

small_int = st.integers(-7, 7)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_elementary_divisors_match_sympy(m):
    s = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
    expected = sorted(abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0)
    got = linalg.elementary_divisors(m)
    assert sorted(got) == expected
    assert all(b % a == 0 for a, b in zip(got, got[1:]))


def test_rank_examples():
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 3


def test_lattice_index():
    assert linalg.lattice_index([(1, 0), (0, 1), (1, 3), (2, 3)], 2) == 1
    assert linalg.lattice_index([(2, 0), (0, 3)], 2) == 6
    assert linalg.lattice_index([(1, 1), (2, 2)], 2) is None
    with pytest.raises(ValueError):
        linalg.lattice_index([(1, 1, 1)], 2)


def test_inverse_integer():
    m = [[0, -1], [-1, 0]]
    assert linalg.matmul(m, linalg.inverse_integer(m)) == linalg.identity(2)
    with pytest.raises(ValueError):
        linalg.inverse_integer([[2, 0], [0, 1]])
