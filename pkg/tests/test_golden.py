import pytest

from weyltwist.golden import diff_itheta, load_golden


def closed_form(family, rank, auto):
    if family == "A":
        sets = [()]
        if rank % 2 == 1:
            sets.append(tuple(range(1, rank + 1, 2)))
        return sets
    if family == "D" and auto in ("flip", "delta0"):
        return [()] + [tuple(range(j, rank + 1)) for j in range(2, rank, 2)]
    if family == "D" and rank == 4:
        return [(), (2,)]
    raise KeyError((family, rank, auto))


def test_version_and_shape():
    version, cases = load_golden()
    assert version == 1
    assert len(cases) == 13
    assert len({c.name for c in cases}) == len(cases)
    assert all(() in c.itheta for c in cases)


@pytest.mark.parametrize("case", [c for c in load_golden()[1] if c.family != "E"], ids=lambda c: c.name)
def test_golden_matches_family_formulas(case):
    assert case.itheta == frozenset(closed_form(case.family, case.rank, case.auto))


def test_e6_entry_is_the_published_one():
    (e6,) = [c for c in load_golden()[1] if c.family == "E"]
    assert e6.itheta == frozenset({(), (3, 4, 5)})


def test_diff():
    assert diff_itheta([(), (3, 4, 5)], [(), (5, 4, 3, 2)]) == ([(3, 4, 5)], [(2, 3, 4, 5)])
    assert diff_itheta([()], [()]) == ([], [])
