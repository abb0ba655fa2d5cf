"""Simple root systems in the simple-root basis.

Everything is exact: roots are integer tuples of coefficients with respect to
the simple roots, and the invariant pairing is the symmetrized Cartan matrix.
Labels follow Bourbaki, so for D4 the central node is alpha_2 and for E6 the
node hanging off the chain is alpha_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

Root = tuple[int, ...]

# Smallest admissible rank per family; E has an explicit set.
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "F": 4, "G": 2}
_E_RANKS = (6, 7, 8)


class RootSystemError(ValueError):
    """Raised for inadmissible type/rank pairs or malformed root data."""


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        check_admissible(fam, self.rank)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        """Parse strings like ``"D4"`` or ``"e6"``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise RootSystemError(f"cannot parse root system name {text!r}")
        return cls(text[0], int(text[1:]))


def check_admissible(family: str, rank: int) -> None:
    if family not in "ABCDEFG" or len(family) != 1:
        raise RootSystemError(f"unknown family {family!r}; expected one of A,B,C,D,E,F,G")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise RootSystemError(f"rank must be an integer, got {rank!r}")
    if family == "E":
        if rank not in _E_RANKS:
            raise RootSystemError(f"E{rank} is not admissible: E requires rank in {{6, 7, 8}}")
    elif family == "F":
        if rank != 4:
            raise RootSystemError(f"F{rank} is not admissible: F requires rank = 4")
    elif family == "G":
        if rank != 2:
            raise RootSystemError(f"G{rank} is not admissible: G requires rank = 2")
    elif rank < _MIN_RANK[family]:
        raise RootSystemError(
            f"{family}{rank} is not admissible: {family} requires rank >= {_MIN_RANK[family]}"
        )


def cartan_matrix(family: str, n: int) -> list[list[int]]:
    """Cartan matrix with ``a[i][j] = <alpha_i^vee, alpha_j>`` (0-based indices)."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        # 1-based node labels
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if family in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if family == "B":
            bond(n - 1, n, -1, -2)
        elif family == "C":
            bond(n - 1, n, -2, -1)
    elif family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif family == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif family == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif family == "G":
        bond(1, 2, -3, -1)
    return a


def symmetrizer(family: str, n: int) -> tuple[int, ...]:
    """Squared root lengths d_i, normalized so the shortest root has d = 1."""
    if family == "B":
        return (2,) * (n - 1) + (1,)
    if family == "C":
        return (1,) * (n - 1) + (2,)
    if family == "F":
        return (2, 2, 1, 1)
    if family == "G":
        return (1, 3)
    return (1,) * n


def expected_positive_root_count(family: str, n: int) -> int:
    if family == "A":
        return n * (n + 1) // 2
    if family in "BC":
        return n * n
    if family == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(family, n)]


def weyl_group_order(family: str, n: int) -> int:
    if family == "A":
        return factorial(n + 1)
    if family in "BC":
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("G", 2): 12,
    }[(family, n)]


def _height(r: Root) -> int:
    return sum(r)


def _root_order(r: Root):
    # height first, then lexicographically descending so alpha_1 precedes alpha_2
    return (_height(r), tuple(-c for c in r))


@dataclass(frozen=True)
class RootSystem:
    spec: RootSystemSpec
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    _index: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Symmetrized Cartan matrix ``d_i * a[i][j]``."""
        d = self.symmetrizer
        return tuple(tuple(d[i] * x for x in row) for i, row in enumerate(self.cartan))

    def simple(self, i: int) -> Root:
        """The 1-based simple root alpha_i."""
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple root index {i} out of range 1..{self.rank}")
        return self.positive_roots[i - 1]

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self._index or tuple(-c for c in v) in self._index

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self._index

    def root_index(self, v) -> int:
        """0-based position of a positive root in ``positive_roots``."""
        return self._index[tuple(v)]

    def rho2(self) -> Root:
        """Sum of the positive roots (twice the Weyl vector)."""
        return tuple(sum(col) for col in zip(*self.positive_roots))

    def __str__(self):
        return self.spec.name


def _closure(cartan, n) -> list[Root]:
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
                c = sum(cartan[i][j] * beta[j] for j in range(n))
                if c >= 0:
                    continue
                gamma = list(beta)
                gamma[i] -= c
                gamma = tuple(gamma)
                if gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(found, key=_root_order)


def build_root_system(spec: RootSystemSpec | str) -> RootSystem:
    """Build the root system for an admissible (family, rank)."""
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    fam, n = spec.family, spec.rank
    cartan = cartan_matrix(fam, n)
    roots = _closure(cartan, n)
    expected = expected_positive_root_count(fam, n)
    if len(roots) != expected:
        raise RootSystemError(f"{spec.name}: closure produced {len(roots)} roots, expected {expected}")
    index = {r: k for k, r in enumerate(roots)}
    return RootSystem(
        spec=spec,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=symmetrizer(fam, n),
        positive_roots=tuple(roots),
        _index=index,
    )


def inner_product(rs: RootSystem, x, y) -> int:
    """W-invariant pairing ``sum_ij x_i y_j d_i a_ij``.

    With the integer symmetrizer table the value is always an integer.
    """
    n = rs.rank
    if len(x) != n or len(y) != n:
        raise RootSystemError(f"dimension mismatch: expected vectors of length {n}")
    g = rs.gram
    return sum(x[i] * g[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j])


def reflect(rs: RootSystem, mirror, v) -> Root:
    """Reflection of ``v`` in the hyperplane orthogonal to the root ``mirror``."""
    if not rs.is_root(mirror):
        raise RootSystemError(f"{tuple(mirror)} is not a root of {rs}")
    coef = Fraction(2 * inner_product(rs, v, mirror), inner_product(rs, mirror, mirror))
    if coef.denominator != 1:
        raise RootSystemError(f"non-integral reflection coefficient {coef}")
    c = int(coef)
    return tuple(vi - c * mi for vi, mi in zip(v, mirror))
