"""Weyl group elements as integer matrices on the root lattice.

Column ``j`` of an element's matrix is the image of alpha_{j+1} written in the
simple-root basis, and products compose as ``(a * b)(v) = a(b(v))``.
Simple-root indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .rootsys import RootSystem, RootSystemError, weyl_group_order

DEFAULT_CAP = 10**6

Matrix = tuple[tuple[int, ...], ...]


class CapExceeded(RuntimeError):
    """Enumeration refused because the group is larger than the cap."""

    def __init__(self, name, predicted, cap):
        self.predicted = predicted
        self.cap = cap
        super().__init__(
            f"W({name}) has {predicted} elements, which exceeds the enumeration cap {cap}; "
            f"raise the cap to proceed"
        )


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix

    @classmethod
    def from_rows(cls, rows) -> "WeylElement":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls.from_rows(linalg.identity(n))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __call__(self, v) -> tuple[int, ...]:
        if len(v) != self.rank:
            raise ValueError(f"vector length {len(v)} does not match rank {self.rank}")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def inverse(self) -> "WeylElement":
        return WeylElement.from_rows(linalg.inverse_integer(self.matrix))

    def transpose(self) -> Matrix:
        return tuple(zip(*self.matrix))

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row))

    def column(self, j: int) -> tuple[int, ...]:
        """Image of the 0-based simple root ``j``."""
        return tuple(row[j] for row in self.matrix)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return WeylElement.from_rows(linalg.matmul(a.matrix, b.matrix))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """Matrix of s_i: alpha_j -> alpha_j - a_ij alpha_i."""
    n = rs.rank
    if not 1 <= i <= n:
        raise RootSystemError(f"simple reflection index {i} out of range 1..{n}")
    m = linalg.identity(n)
    m[i - 1] = [m[i - 1][j] - rs.cartan[i - 1][j] for j in range(n)]
    return WeylElement.from_rows(m)


def word_to_element(rs: RootSystem, word) -> WeylElement:
    w = WeylElement.identity(rs.rank)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


def _is_negative(v) -> bool:
    for c in v:
        if c:
            return c < 0
    return False


def length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for beta in rs.positive_roots if _is_negative(w(beta)))


def _longest_in(rs: RootSystem, gens) -> WeylElement:
    # w s_i > w iff w(alpha_i) > 0; climb until no ascent remains
    w = WeylElement.identity(rs.rank)
    changed = True
    while changed:
        changed = False
        for i in gens:
            if not _is_negative(w.column(i - 1)):
                w = w * simple_reflection(rs, i)
                changed = True
    return w


def longest_element(rs: RootSystem) -> WeylElement:
    return _longest_in(rs, range(1, rs.rank + 1))


def parabolic_longest(rs: RootSystem, subset) -> WeylElement:
    """Longest element of the standard parabolic subgroup W_I."""
    subset = sorted(set(subset))
    for i in subset:
        if not 1 <= i <= rs.rank:
            raise RootSystemError(f"simple index {i} out of range 1..{rs.rank}")
    return _longest_in(rs, subset)


def reduced_word(rs: RootSystem, w: WeylElement) -> tuple[int, ...]:
    """Greedy left descent: always strip the smallest s_i with l(s_i w) < l(w).

    ``w`` equals the product of the returned letters, left to right.
    """
    letters = []
    n = rs.rank
    # s_i w < w iff w^{-1}(alpha_i) < 0; track w^{-1} to avoid recomputing lengths
    winv = w.inverse()
    while not winv.is_identity():
        for i in range(1, n + 1):
            if _is_negative(winv.column(i - 1)):
                letters.append(i)
                winv = winv * simple_reflection(rs, i)
                break
        else:  # pragma: no cover - an element with no descent is the identity
            raise AssertionError("no left descent found for a non-identity element")
    return tuple(letters)


class WeylGroup:
    """The fully enumerated Weyl group with index-based lookup tables.

    Elements are numbered in breadth-first order from the identity, with the
    generators tried in index order, so element 0 is the identity and
    ``lengths`` equals the BFS depth. Each element is keyed by its image of
    the regular vector 2*rho, which determines it uniquely.
    """

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_CAP):
        predicted = weyl_group_order(rs.spec.family, rs.rank)
        if predicted > cap:
            raise CapExceeded(rs.spec.name, predicted, cap)
        self.rs = rs
        self.rank = n = rs.rank
        self.predicted_order = predicted
        self._cartan = np.array(rs.cartan, dtype=np.int64)
        self._rho2 = np.array(rs.rho2(), dtype=np.int64)
        self._radix = self._make_radix()
        self._enumerate()
        if len(self) != predicted:
            raise AssertionError(f"enumerated {len(self)} elements of W({rs}), expected {predicted}")
        self.left = self._left_table()
        self.right = self._right_table()
        self.w0_index = int(self.lookup(-self._rho2[None, :])[0])

    def _make_radix(self):
        bounds = 2 * self._rho2 + 1
        total = 1
        radix = []
        for b in bounds[::-1]:
            radix.append(total)
            total *= int(b)
        if total >= 2**62:
            raise RootSystemError(f"key space of W({self.rs}) does not fit in 64 bits")
        return np.array(radix[::-1], dtype=np.int64)

    def _encode(self, keys):
        return (keys + self._rho2) @ self._radix

    def _enumerate(self):
        n = self.rank
        a = self._cartan
        keys = [self._rho2[None, :].copy()]
        mats = [np.eye(n, dtype=np.int64)[None]]
        layer_keys, layer_mats = keys[0], mats[0]
        while True:
            pairing = layer_keys @ a.T  # <key, alpha_i^vee>
            parent, gen = np.nonzero(pairing > 0)
            if parent.size == 0:
                break
            new_keys = layer_keys[parent].copy()
            rows = np.arange(parent.size)
            new_keys[rows, gen] -= pairing[parent, gen]
            _, first = np.unique(self._encode(new_keys), return_index=True)
            first.sort()
            parent, gen, new_keys = parent[first], gen[first], new_keys[first]
            new_mats = layer_mats[parent].copy()
            rows = np.arange(parent.size)
            update = np.einsum("kj,kjc->kc", a[gen], new_mats)
            new_mats[rows, gen, :] -= update
            keys.append(new_keys)
            mats.append(new_mats)
            layer_keys, layer_mats = new_keys, new_mats
        self.keys = np.concatenate(keys)
        big = np.concatenate(mats)
        if np.abs(big).max() >= 2**14:
            raise OverflowError("Weyl matrix entries exceed the int16 storage range")
        self.matrices = big.astype(np.int16)
        self.lengths = np.concatenate([np.full(len(k), d, dtype=np.int64) for d, k in enumerate(keys)])
        codes = self._encode(self.keys)
        self._order = np.argsort(codes, kind="stable")
        self._sorted_codes = codes[self._order]

    def lookup(self, keys) -> np.ndarray:
        """Element indices for an array of 2*rho images, shape (m, rank)."""
        codes = self._encode(np.asarray(keys, dtype=np.int64))
        pos = np.searchsorted(self._sorted_codes, codes)
        pos = np.minimum(pos, len(self._sorted_codes) - 1)
        if not np.array_equal(self._sorted_codes[pos], codes):
            raise KeyError("vector is not in the W-orbit of 2*rho")
        return self._order[pos]

    def _left_table(self):
        pairing = self.keys @ self._cartan.T
        table = np.empty((self.rank, len(self)), dtype=np.int32)
        for i in range(self.rank):
            k = self.keys.copy()
            k[:, i] -= pairing[:, i]
            table[i] = self.lookup(k)
        return table

    def _right_table(self):
        table = np.empty((self.rank, len(self)), dtype=np.int32)
        for i in range(self.rank):
            # (w s_i)(2 rho) = w(2 rho - 2 alpha_i)
            table[i] = self.lookup(self.keys - 2 * self.matrices[:, :, i].astype(np.int64))
        return table

    def __len__(self):
        return len(self.keys)

    def element(self, k: int) -> WeylElement:
        return WeylElement.from_rows(self.matrices[k].tolist())

    def index(self, w: WeylElement) -> int:
        key = np.array(w.matrix, dtype=np.int64) @ self._rho2
        return int(self.lookup(key[None, :])[0])

    def __iter__(self):
        return (self.element(k) for k in range(len(self)))

    @cached_property
    def right_w0(self) -> np.ndarray:
        """Index of ``w * w0`` for every ``w``; w0 sends 2*rho to -2*rho."""
        return self.lookup(-self.keys)


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylGroup:
    return WeylGroup(rs, cap)
