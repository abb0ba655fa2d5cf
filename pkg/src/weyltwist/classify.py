"""Properties (1) and (2) of simple-root subsets, I_theta, and the map m -> I_m.

``verify_classification`` brute-forces M_theta and checks it against the
subsets, recording raw evidence instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import RootSystem, inner_product
from .twist import (
    DiagramAutomorphism,
    MThetaSet,
    closure_check,
    compose,
    compute_M_theta,
    delta0,
    is_twisted_involution,
    random_twist_check,
    twist_element,
    twisted_classes,
    w0_translation_check,
)
from .weyl import WeylElement, WeylGroup, length, parabolic_longest

MAX_SCAN_RANK = 24

SimpleSubset = tuple[int, ...]


def compute_I_m(rs: RootSystem, theta: DiagramAutomorphism, m: WeylElement) -> SimpleSubset:
    """Indices i with ``m(theta(alpha_i)) = alpha_i``."""
    out = []
    for i in range(1, rs.rank + 1):
        if m.column(theta(i) - 1) == rs.simple(i):
            out.append(i)
    return tuple(out)


def _invariant(perm: DiagramAutomorphism, subset) -> bool:
    s = set(subset)
    return {perm(i) for i in s} == s


def has_property1(rs: RootSystem, theta: DiagramAutomorphism, subset) -> bool:
    subset = tuple(sorted(set(subset)))
    d0 = delta0(rs)
    if not (_invariant(d0, subset) and _invariant(theta, subset)):
        return False
    if not subset:
        return True
    d0theta = compose(d0, theta)
    w0i = parabolic_longest(rs, subset)
    for i in subset:
        lhs = rs.simple(d0theta(i))
        rhs = tuple(-c for c in w0i(rs.simple(i)))
        if lhs != rhs:
            return False
    return True


def isolated(rs: RootSystem, subset) -> list[int]:
    subset = sorted(set(subset))
    return [
        a
        for a in subset
        if all(inner_product(rs, rs.simple(a), rs.simple(b)) == 0 for b in subset if b != a)
    ]


def property2_witness(rs: RootSystem, theta: DiagramAutomorphism, subset):
    """First ``(alpha, beta)`` violating Property (2), or ``None``."""
    subset = sorted(set(subset))
    d0theta = compose(delta0(rs), theta)
    for a in isolated(rs, subset):
        alpha = rs.simple(a)
        rest = [b for b in subset if b != a]
        for bi in range(1, rs.rank + 1):
            if bi == a:
                continue
            beta = rs.simple(bi)
            same_len = inner_product(rs, alpha, alpha) == inner_product(rs, beta, beta)
            linked = inner_product(rs, beta, alpha) != 0
            if not (same_len and linked):
                continue
            if any(inner_product(rs, beta, rs.simple(b)) != 0 for b in rest):
                continue
            if d0theta(bi) == bi:
                return a, bi
    return None


def has_property2(rs: RootSystem, theta: DiagramAutomorphism, subset) -> bool:
    return property2_witness(rs, theta, subset) is None


def enumerate_I_theta(rs: RootSystem, theta: DiagramAutomorphism) -> list[SimpleSubset]:
    """All subsets with Properties (1) and (2), in increasing bitmask order."""
    n = rs.rank
    if n > MAX_SCAN_RANK:
        raise ValueError(f"rank {n} is too large for an exhaustive subset scan (max {MAX_SCAN_RANK})")
    d0 = delta0(rs)
    out = []
    for mask in range(2**n):
        subset = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if not (_invariant(d0, subset) and _invariant(theta, subset)):
            continue
        if has_property1(rs, theta, subset) and has_property2(rs, theta, subset):
            out.append(subset)
    return out


def subsystem_positive_count(rs: RootSystem, subset) -> int:
    """Number of positive roots supported on the simple indices in ``subset``."""
    allowed = {i - 1 for i in subset}
    return sum(1 for r in rs.positive_roots if all(c == 0 or k in allowed for k, c in enumerate(r)))


@dataclass
class ElementRecord:
    element: WeylElement
    index: int
    length: int
    class_size: int
    I_m: SimpleSubset
    lemma_m0: bool
    corollary_involution: bool
    lemma_le_m: bool
    has_properties: bool
    length_identity: bool


@dataclass
class ClassificationReport:
    rs: RootSystem
    theta: DiagramAutomorphism
    weyl_order: int
    num_twisted_classes: int
    mtheta: list[ElementRecord]
    itheta: list[SimpleSubset]
    psi_injective: bool
    theorem_equality: bool
    theorem_asserted: bool
    itheta_property1_recheck: bool
    partition_checks: dict[str, bool]
    property2_failures: list[tuple[SimpleSubset, int, int]] = field(default_factory=list)

    @property
    def theorem_holds(self) -> bool | None:
        """The literal set equality; ``None`` when theta is the identity."""
        return self.theorem_equality if self.theorem_asserted else None

    def lemma_flags(self) -> dict[str, bool]:
        recs = self.mtheta
        return {
            "lemma_m0": all(r.lemma_m0 for r in recs),
            "corollary_involution": all(r.corollary_involution for r in recs),
            "lemma_le_m": all(r.lemma_le_m for r in recs),
            "im_has_properties": all(r.has_properties for r in recs),
            "length_identity": all(r.length_identity for r in recs),
        }

    @property
    def ok(self) -> bool:
        """All checks that the source results assert for this (type, theta)."""
        flags = self.lemma_flags()
        return (
            all(flags.values())
            and self.psi_injective
            and self.itheta_property1_recheck
            and all(self.partition_checks.values())
            and self.theorem_holds is not False
        )


def verify_classification(
    rs: RootSystem,
    theta: DiagramAutomorphism,
    group: WeylGroup,
    random_samples: int = 100,
    seed: int = 0,
) -> ClassificationReport:
    partition = twisted_classes(rs, theta, group)
    mset: MThetaSet = compute_M_theta(partition)
    itheta = enumerate_I_theta(rs, theta)
    itheta_set = set(itheta)
    w0 = group.element(group.w0_index)
    npos = len(rs.positive_roots)

    records = []
    for e in mset.entries:
        m = e.element
        im = compute_I_m(rs, theta, m)
        w0i = parabolic_longest(rs, im)
        records.append(
            ElementRecord(
                element=m,
                index=e.index,
                length=e.length,
                class_size=e.class_size,
                I_m=im,
                lemma_m0=twist_element(theta, m) == m and w0 * m * w0 == m,
                corollary_involution=(m * m).is_identity() and is_twisted_involution(theta, m),
                lemma_le_m=w0 * m == m * w0 == w0i,
                has_properties=im in itheta_set
                and has_property1(rs, theta, im)
                and has_property2(rs, theta, im),
                length_identity=length(rs, m) == npos - subsystem_positive_count(rs, im),
            )
        )

    predicted = {w0 * parabolic_longest(rs, subset) for subset in itheta}
    d0 = delta0(rs)
    recheck = all(_invariant(d0, s) and _invariant(theta, s) for s in itheta) and () in itheta_set

    failures = []
    for mask in range(2**rs.rank):
        subset = tuple(i + 1 for i in range(rs.rank) if mask >> i & 1)
        if has_property1(rs, theta, subset):
            wit = property2_witness(rs, theta, subset)
            if wit is not None:
                failures.append((subset, *wit))

    return ClassificationReport(
        rs=rs,
        theta=theta,
        weyl_order=len(group),
        num_twisted_classes=partition.num_classes,
        mtheta=records,
        itheta=itheta,
        psi_injective=len({r.I_m for r in records}) == len(records),
        theorem_equality={r.element for r in records} == predicted,
        theorem_asserted=not theta.is_identity(),
        itheta_property1_recheck=recheck,
        partition_checks={
            "sizes_sum": int(partition.sizes.sum()) == len(group),
            "closed_under_simple_twists": closure_check(partition),
            "random_full_group_twists": random_twist_check(partition, random_samples, seed),
            "w0_translation_bijection": w0_translation_check(rs, theta, group),
        },
        property2_failures=failures,
    )
