"""Lattice-level checks for D4 with the triality twist.

Positive roots carry the labels alpha_1 .. alpha_12, with 1..4 simple and
alpha_2 the central node. The torus characters lambda_1 = alpha_1 + alpha_3 +
alpha_4 and lambda_2 = alpha_2 span the theta-invariant part of the root
lattice that matters here, and the six characters attached to the labels
{1, 2, 5, 8, 11, 12} are written as exponent pairs in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import linalg
from .rootsys import RootSystem, build_root_system, reflect
from .twist import (
    DiagramAutomorphism,
    dimension_formula,
    fixed_space_dim,
    rank_one_minus_wtheta,
    triality,
)
from .weyl import WeylElement, length, longest_element, simple_reflection

# coefficients in the simple-root basis
LABELS = {
    1: (1, 0, 0, 0),
    2: (0, 1, 0, 0),
    3: (0, 0, 1, 0),
    4: (0, 0, 0, 1),
    5: (1, 1, 0, 0),
    6: (0, 1, 1, 0),
    7: (0, 1, 0, 1),
    8: (1, 1, 1, 0),
    9: (0, 1, 1, 1),
    10: (1, 1, 0, 1),
    11: (1, 1, 1, 1),
    12: (1, 2, 1, 1),
}

STRONGLY_ORTHOGONAL_QUADS = ((1, 3, 4, 12), (5, 6, 7, 11), (8, 9, 10, 2))

ORBIT_SUM_LABELS = (1, 5, 8)
FIXED_LABELS = (2, 11, 12)
CHARACTER_LABELS = (1, 2, 5, 8, 11, 12)

LAMBDA1 = (1, 0, 1, 1)
LAMBDA2 = (0, 1, 0, 0)

# Pinned constants of the adjoint group, echoed rather than derived.
DIM_G = 28
DIM_G_THETA = 14  # fixed subalgebra of type G2

NOT_MACHINE_CHECKED = "asserted group-level claim, not machine-checked"


class LabelError(AssertionError):
    """A labeled vector is not the root it is supposed to be."""


@dataclass(frozen=True)
class LabeledD4:
    rs: RootSystem
    theta: DiagramAutomorphism
    labels: dict[int, tuple[int, ...]]

    def root(self, j: int) -> tuple[int, ...]:
        return self.labels[j]

    def label_of(self, v) -> int:
        v = tuple(v)
        for j, r in self.labels.items():
            if r == v:
                return j
        raise KeyError(v)

    def theta_root(self, v) -> tuple[int, ...]:
        return self.theta.apply_vector(v)


def build_labeled_d4() -> LabeledD4:
    rs = build_root_system("D4")
    theta = triality(rs)
    for j, r in LABELS.items():
        if not rs.is_positive_root(r):
            raise LabelError(f"alpha_{j} = {r} is not a positive root of D4")
    if set(LABELS.values()) != set(rs.positive_roots):
        raise LabelError("labels do not cover the positive roots exactly")
    for j in range(1, 5):
        if LABELS[j] != rs.simple(j):
            raise LabelError(f"alpha_{j} is not the simple root alpha_{j}")
    if theta.order() != 3:
        raise LabelError("triality must have order 3")
    return LabeledD4(rs, theta, dict(LABELS))


def theta_orbits_on_positive(lab: LabeledD4) -> list[tuple[int, ...]]:
    """Orbits of theta on the positive roots, as sorted label tuples."""
    seen = set()
    orbits = []
    for j in sorted(lab.labels):
        if j in seen:
            continue
        orbit = []
        v = lab.root(j)
        while lab.label_of(v) not in orbit:
            orbit.append(lab.label_of(v))
            v = lab.theta_root(v)
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits


def strongly_orthogonal_check(lab: LabeledD4, quad) -> bool:
    """No sum or difference of two distinct members is a root."""
    for a, b in combinations(quad, 2):
        x, y = lab.root(a), lab.root(b)
        if lab.rs.is_root(tuple(p + q for p, q in zip(x, y))):
            return False
        if lab.rs.is_root(tuple(p - q for p, q in zip(x, y))):
            return False
    return True


def root_reflection(lab: LabeledD4, j: int) -> WeylElement:
    """Matrix of the reflection in alpha_j, built column by column."""
    beta = lab.root(j)
    cols = [reflect(lab.rs, beta, lab.rs.simple(i)) for i in range(1, 5)]
    return WeylElement.from_rows(list(zip(*cols)))


def factorization_products(lab: LabeledD4) -> dict[tuple[int, ...], WeylElement]:
    out = {}
    for quad in STRONGLY_ORTHOGONAL_QUADS:
        w = WeylElement.identity(4)
        for j in quad:
            w = w * root_reflection(lab, j)
        out[quad] = w
    return out


def w0_factorizations(lab: LabeledD4) -> bool:
    w0 = longest_element(lab.rs)
    minus_one = WeylElement.from_rows([[-int(i == j) for j in range(4)] for i in range(4)])
    return w0 == minus_one and all(w == w0 for w in factorization_products(lab).values())


def _decompose(v) -> tuple[int, int]:
    a, b = v[0], v[1]
    if tuple(a * x + b * y for x, y in zip(LAMBDA1, LAMBDA2)) != tuple(v):
        raise ValueError(f"{tuple(v)} is not an integer combination of lambda_1 and lambda_2")
    return a, b


def lambda_exponent_table(lab: LabeledD4) -> dict[int, tuple[int, int]]:
    table = {}
    for j in CHARACTER_LABELS:
        v = lab.root(j)
        if j in ORBIT_SUM_LABELS:
            t1 = lab.theta_root(v)
            t2 = lab.theta_root(t1)
            v = tuple(p + q + r for p, q, r in zip(v, t1, t2))
        table[j] = _decompose(v)
    return table


@dataclass
class CaseAnalysis:
    fixed_dim: int
    w0_length: int
    w0_rank_term: int
    w0s2_length: int
    w0s2_rank_term: int
    case1_n: int
    case1_dim_stabilizer: int
    case1_dim_class: int
    case1_formula_value: int
    subset_divisors: dict[tuple[int, ...], list[int]]
    case2_max_n: int
    case2_dim_lower_bound: int
    unchecked_claims: list[str] = field(default_factory=list)

    @property
    def w0_formula_value(self) -> int:
        return self.w0_length + self.w0_rank_term

    @property
    def all_subsets_unimodular(self) -> bool:
        return all(d == [1, 1] for d in self.subset_divisors.values())

    @property
    def ok(self) -> bool:
        return (
            self.fixed_dim == 2
            and self.case1_dim_class == self.case1_formula_value == 14
            and self.w0s2_length + self.w0s2_rank_term < self.w0_formula_value
            and self.all_subsets_unimodular
            and self.case2_dim_lower_bound == 20
        )


def stabilizer_dim(n_trivial: int) -> int:
    """dim of the stabilizer subalgebra when ``n_trivial`` characters are 1."""
    return 2 + 2 * n_trivial


def case_analysis(lab: LabeledD4) -> CaseAnalysis:
    rs, theta = lab.rs, lab.theta
    w0 = longest_element(rs)
    w0s2 = w0 * simple_reflection(rs, 2)
    table = lambda_exponent_table(lab)
    vectors = [table[j] for j in CHARACTER_LABELS]

    divisors = {}
    for sub in combinations(range(len(vectors)), 4):
        key = tuple(CHARACTER_LABELS[k] for k in sub)
        divisors[key] = linalg.elementary_divisors([list(vectors[k]) for k in sub])

    # Unimodular 4-subsets: four trivial characters force lambda_1 = lambda_2 = 1,
    # hence all six trivial. Off case 1 some character is nontrivial, so n <= 5,
    # and n in {4, 5} is impossible.
    unimodular = all(d == [1, 1] for d in divisors.values())
    case2_max_n = 3 if unimodular else 5

    case1_n = len(CHARACTER_LABELS)

    return CaseAnalysis(
        fixed_dim=fixed_space_dim(rs, theta),
        w0_length=length(rs, w0),
        w0_rank_term=rank_one_minus_wtheta(rs, w0, theta),
        w0s2_length=length(rs, w0s2),
        w0s2_rank_term=rank_one_minus_wtheta(rs, w0s2, theta),
        case1_n=case1_n,
        case1_dim_stabilizer=stabilizer_dim(case1_n),
        case1_dim_class=DIM_G - stabilizer_dim(case1_n),
        case1_formula_value=dimension_formula(rs, theta, w0s2),
        subset_divisors=divisors,
        case2_max_n=case2_max_n,
        case2_dim_lower_bound=DIM_G - stabilizer_dim(case2_max_n),
        unchecked_claims=[
            f"C_h spherical with m_C = w0 s2 when lambda_1(h) = lambda_2(h) = 1 ({NOT_MACHINE_CHECKED})",
            f"m_C = w0 otherwise, via root-subgroup products ({NOT_MACHINE_CHECKED})",
            f"fixed subalgebra of theta has type G2, dimension {DIM_G_THETA} ({NOT_MACHINE_CHECKED})",
            f"dim stabilizer = 2 + 2n from root-space pairing ({NOT_MACHINE_CHECKED})",
        ],
    )
