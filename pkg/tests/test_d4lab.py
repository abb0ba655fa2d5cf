import itertools

import pytest
import sympy

from weyltwist import d4lab
from weyltwist.weyl import longest_element


@pytest.fixture(scope="module")
def lab():
    return d4lab.build_labeled_d4()


def test_labels_cover_positive_roots(lab):
    assert sorted(lab.labels.values()) == sorted(lab.rs.positive_roots)
    assert lab.root(12) == lab.rs.positive_roots[-1]


def test_orbits(lab):
    assert d4lab.theta_orbits_on_positive(lab) == [(1, 3, 4), (2,), (5, 6, 7), (8, 9, 10), (11,), (12,)]


def test_quadruples(lab):
    for quad in d4lab.STRONGLY_ORTHOGONAL_QUADS:
        assert d4lab.strongly_orthogonal_check(lab, quad)
    assert not d4lab.strongly_orthogonal_check(lab, (1, 2))


def test_factorizations(lab):
    w0 = longest_element(lab.rs)
    assert all(w == w0 for w in d4lab.factorization_products(lab).values())
    assert d4lab.w0_factorizations(lab)


def test_lambda_table(lab):
    assert d4lab.lambda_exponent_table(lab) == {
        1: (1, 0), 2: (0, 1), 5: (1, 3), 8: (2, 3), 11: (1, 1), 12: (1, 2),
    }


def test_subset_divisors_against_sympy(lab):
    from sympy.matrices.normalforms import smith_normal_form

    table = d4lab.lambda_exponent_table(lab)
    vecs = [table[j] for j in d4lab.CHARACTER_LABELS]
    for sub in itertools.combinations(vecs, 4):
        snf = smith_normal_form(sympy.Matrix(sub), domain=sympy.ZZ)
        assert [abs(snf[i, i]) for i in range(2)] == [1, 1]
    ca = d4lab.case_analysis(lab)
    assert len(ca.subset_divisors) == 15
    assert ca.all_subsets_unimodular
    quad = tuple(ca.subset_divisors)[0]
    assert quad == (1, 2, 5, 8)


def test_torsion_oracle_never_four_or_five(lab):
    # Characters of the rank-2 torus evaluated at points of order up to 12:
    # count how many of the six are trivial. Case 1 gives six; otherwise at most three.
    table = d4lab.lambda_exponent_table(lab)
    vecs = list(table.values())
    seen = set()
    for n in range(1, 13):
        for a in range(n):
            for b in range(n):
                trivial = sum((a * x + b * y) % n == 0 for x, y in vecs)
                seen.add(trivial)
    assert 6 in seen
    assert not seen & {4, 5}
    assert max(seen - {6}) == 3


def test_case_analysis(lab):
    ca = d4lab.case_analysis(lab)
    assert ca.fixed_dim == 2
    assert (ca.w0_length, ca.w0_rank_term, ca.w0_formula_value) == (12, 4, 16)
    assert (ca.w0s2_length, ca.w0s2_rank_term) == (11, 3)
    assert ca.case1_dim_class == ca.case1_formula_value == 14
    assert ca.case2_max_n == 3
    assert ca.case2_dim_lower_bound == 20
    assert ca.ok
    assert all(d4lab.NOT_MACHINE_CHECKED in c for c in ca.unchecked_claims)


def test_decompose_rejects():
    with pytest.raises(ValueError):
        d4lab._decompose((1, 0, 0, 0))
