"""Diagram automorphisms and twisted conjugation on the Weyl group.

A diagram automorphism ``theta`` acts on W by ``theta(w) = P w P^{-1}``, where
``P`` permutes the simple roots. The twisted action is ``u . v = u v theta(u)^{-1}``;
its orbits are the theta-twisted conjugacy classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import kernels, linalg
from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup, length, longest_element, simple_reflection


class AutomorphismError(ValueError):
    """A permutation that does not preserve the Cartan matrix, or a bad selector."""


@dataclass(frozen=True)
class DiagramAutomorphism:
    """``perm[i - 1]`` is the image of the simple index ``i`` (1-based)."""

    perm: tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        m = [[0] * n for _ in range(n)]
        for i, j in enumerate(self.perm):
            m[j - 1][i] = 1
        return tuple(tuple(r) for r in m)

    @property
    def zero_based(self) -> np.ndarray:
        return np.array(self.perm, dtype=np.int32) - 1

    def is_identity(self) -> bool:
        return all(p == i + 1 for i, p in enumerate(self.perm))

    def apply_vector(self, v) -> tuple[int, ...]:
        out = [0] * self.rank
        for i, c in enumerate(v):
            out[self.perm[i] - 1] = c
        return tuple(out)

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = compose(self, p)
            k += 1
        return k

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * self.rank
        for i, j in enumerate(self.perm):
            inv[j - 1] = i + 1
        return DiagramAutomorphism(tuple(inv))

    def orbits(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.rank + 1):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self(j)
            out.append(tuple(sorted(orb)))
        return out


def compose(a: DiagramAutomorphism, b: DiagramAutomorphism) -> DiagramAutomorphism:
    """``a`` after ``b``."""
    return DiagramAutomorphism(tuple(a(b(i)) for i in range(1, b.rank + 1)))


def make_automorphism(rs: RootSystem, perm, name: str = "") -> DiagramAutomorphism:
    """Validate a permutation of simple indices against the Cartan matrix.

    ``perm`` is a sequence of 1-based images or a mapping ``{i: image}``
    (unlisted indices are fixed).
    """
    n = rs.rank
    if isinstance(perm, dict):
        images = [perm.get(i, i) for i in range(1, n + 1)]
    else:
        images = list(perm)
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise AutomorphismError(f"{images} is not a permutation of 1..{n}")
    a = rs.cartan
    for i in range(n):
        for j in range(n):
            if a[images[i] - 1][images[j] - 1] != a[i][j]:
                raise AutomorphismError(
                    f"permutation {images} does not preserve the Cartan matrix of {rs} "
                    f"at (i, j) = ({i + 1}, {j + 1})"
                )
    return DiagramAutomorphism(tuple(images), name)


def identity_automorphism(rs: RootSystem) -> DiagramAutomorphism:
    return DiagramAutomorphism(tuple(range(1, rs.rank + 1)), "id")


def delta0(rs: RootSystem) -> DiagramAutomorphism:
    """The automorphism ``alpha -> -w0(alpha)`` of the simple roots."""
    w0 = longest_element(rs)
    images = []
    for i in range(rs.rank):
        col = tuple(-c for c in w0.column(i))
        if sorted(col) != [0] * (rs.rank - 1) + [1]:
            raise AssertionError("-w0 does not permute the simple roots")
        images.append(col.index(1) + 1)
    return make_automorphism(rs, images, "delta0")


def flip(rs: RootSystem) -> DiagramAutomorphism:
    """The standard order-2 diagram automorphism.

    For D4, where three of them exist, this is the swap of alpha_3 and alpha_4.
    """
    fam, n = rs.spec.family, rs.rank
    if fam == "A" and n >= 2:
        images = list(range(n, 0, -1))
    elif fam == "D":
        images = list(range(1, n - 1)) + [n, n - 1]
    elif fam == "E" and n == 6:
        images = [6, 2, 5, 4, 3, 1]
    else:
        raise AutomorphismError(f"{rs} has no nontrivial order-2 diagram automorphism")
    return make_automorphism(rs, images, "flip")


def triality(rs: RootSystem, inverse: bool = False) -> DiagramAutomorphism:
    """D4 triality alpha_1 -> alpha_3 -> alpha_4 -> alpha_1, alpha_2 fixed."""
    if rs.spec.name != "D4":
        raise AutomorphismError(f"triality exists only for D4, not {rs}")
    th = make_automorphism(rs, [3, 2, 4, 1], "triality")
    if inverse:
        return DiagramAutomorphism(th.inverse().perm, "triality-inv")
    return th


def resolve_automorphism(rs: RootSystem, selector: str) -> DiagramAutomorphism:
    """Named selectors: ``id``, ``delta0``, ``flip``, ``triality``,
    ``triality-inv`` or ``perm=i1:j1,i2:j2,...``."""
    sel = selector.strip()
    if sel in ("id", "identity"):
        return identity_automorphism(rs)
    if sel == "delta0":
        return delta0(rs)
    if sel == "flip":
        return flip(rs)
    if sel == "triality":
        return triality(rs)
    if sel == "triality-inv":
        return triality(rs, inverse=True)
    if sel.startswith("perm="):
        mapping = {}
        try:
            for part in filter(None, sel[5:].split(",")):
                i, j = part.split(":")
                mapping[int(i)] = int(j)
        except ValueError:
            raise AutomorphismError(f"malformed permutation selector {selector!r}") from None
        return make_automorphism(rs, mapping, sel)
    raise AutomorphismError(f"unknown automorphism selector {selector!r}")


def twist_element(theta: DiagramAutomorphism, w: WeylElement) -> WeylElement:
    """``P w P^{-1}``: entry (i, j) of w moves to (theta(i), theta(j))."""
    n = w.rank
    if theta.rank != n:
        raise ValueError("automorphism and element have different ranks")
    out = [[0] * n for _ in range(n)]
    for i, row in enumerate(w.matrix):
        ti = theta.perm[i] - 1
        for j, x in enumerate(row):
            out[ti][theta.perm[j] - 1] = x
    return WeylElement.from_rows(out)


def rank_one_minus_wtheta(rs: RootSystem, w: WeylElement, theta: DiagramAutomorphism) -> int:
    """Rank over Q of ``1 - w theta`` acting on the span of the roots."""
    m = linalg.matmul(w.matrix, theta.matrix)
    n = rs.rank
    return linalg.rank([[int(i == j) - m[i][j] for j in range(n)] for i in range(n)])


def is_twisted_involution(theta: DiagramAutomorphism, w: WeylElement) -> bool:
    return (twist_element(theta, w) * w).is_identity()


def dimension_formula(rs: RootSystem, theta: DiagramAutomorphism, m: WeylElement) -> int:
    """``l(m) + rk(1 - m theta)``."""
    return length(rs, m) + rank_one_minus_wtheta(rs, m, theta)


def fixed_space_dim(rs: RootSystem, theta: DiagramAutomorphism) -> int:
    return rs.rank - rank_one_minus_wtheta(rs, WeylElement.identity(rs.rank), theta)


@dataclass
class TwistedClassPartition:
    """Orbit labels of the twisted action plus per-class length statistics."""

    group: WeylGroup
    theta: DiagramAutomorphism
    labels: np.ndarray
    sizes: np.ndarray
    max_length: np.ndarray
    n_at_max: np.ndarray
    argmax: np.ndarray

    @property
    def num_classes(self) -> int:
        return len(self.sizes)

    def classes(self) -> list[np.ndarray]:
        order = np.argsort(self.labels, kind="stable")
        bounds = np.cumsum(self.sizes)[:-1]
        return np.split(order, bounds)

    def class_of(self, idx: int) -> int:
        return int(self.labels[idx])


def twisted_classes(rs: RootSystem, theta: DiagramAutomorphism, group: WeylGroup) -> TwistedClassPartition:
    if group.rs.spec != rs.spec:
        raise ValueError("group was enumerated for a different root system")
    labels, nclasses = kernels.twisted_orbit_labels(group.left, group.right, theta.zero_based)
    sizes, maxlen, nmax, argmax = kernels.class_statistics(labels, group.lengths, nclasses)
    return TwistedClassPartition(group, theta, labels, sizes, maxlen, nmax, argmax)


@dataclass
class MThetaEntry:
    index: int
    element: WeylElement
    length: int
    class_size: int
    I_m: tuple[int, ...] | None = None


@dataclass
class MThetaSet:
    theta: DiagramAutomorphism
    entries: list[MThetaEntry]

    @property
    def elements(self) -> list[WeylElement]:
        return [e.element for e in self.entries]

    def __len__(self):
        return len(self.entries)


def compute_M_theta(partition: TwistedClassPartition) -> MThetaSet:
    """Keep each class whose maximal length is attained exactly once."""
    g = partition.group
    entries = []
    for c in np.nonzero(partition.n_at_max == 1)[0]:
        k = int(partition.argmax[c])
        entries.append(
            MThetaEntry(
                index=k,
                element=g.element(k),
                length=int(g.lengths[k]),
                class_size=int(partition.sizes[c]),
            )
        )
    return MThetaSet(partition.theta, entries)


# -- independent re-checks ---------------------------------------------------


def random_twist_check(partition: TwistedClassPartition, samples: int = 200, seed: int = 0) -> bool:
    """Re-check class membership with full-group twists ``u w theta(u)^{-1}``."""
    g = partition.group
    rng = random.Random(seed)
    n = len(g)
    for _ in range(samples):
        u = g.element(rng.randrange(n))
        k = rng.randrange(n)
        w = g.element(k)
        image = u * w * twist_element(partition.theta, u).inverse()
        if partition.labels[g.index(image)] != partition.labels[k]:
            return False
    return True


def closure_check(partition: TwistedClassPartition) -> bool:
    """Every class is closed under ``v -> s_i v theta(s_i)`` for all i."""
    g = partition.group
    lab = partition.labels
    for i, ti in enumerate(partition.theta.zero_based):
        moved = g.left[i][g.right[ti]]
        if not np.array_equal(lab[moved], lab):
            return False
    return True


def w0_translation_check(
    rs: RootSystem, theta: DiagramAutomorphism, group: WeylGroup
) -> bool:
    """``w -> w w0`` maps theta-classes bijectively onto (delta0 theta)-classes."""
    delta = compose(delta0(rs), theta)
    p_theta = twisted_classes(rs, theta, group)
    p_delta = twisted_classes(rs, delta, group)
    if p_theta.num_classes != p_delta.num_classes:
        return False
    image = p_delta.labels[group.right_w0]
    mapping = np.full(p_theta.num_classes, -1, dtype=np.int64)
    mapping[p_theta.labels] = image
    # well defined: every element of a class lands in the same image class
    if not np.array_equal(mapping[p_theta.labels], image):
        return False
    return len(np.unique(mapping)) == p_theta.num_classes and np.array_equal(
        p_theta.sizes, p_delta.sizes[mapping]
    )


def simple_twist_image(rs: RootSystem, theta: DiagramAutomorphism, i: int) -> WeylElement:
    """``theta(s_i)``, which equals ``s_theta(i)``."""
    return twist_element(theta, simple_reflection(rs, i))
