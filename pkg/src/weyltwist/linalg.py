"""Exact integer linear algebra on small dense matrices (lists of lists)."""

from __future__ import annotations

from math import gcd, prod


def _copy(m):
    return [[int(x) for x in row] for row in m]


def rank(m) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Every intermediate entry is an integer minor of ``m``, so no fractions
    appear and nothing is lost to rounding.
    """
    a = _copy(m)
    rows = len(a)
    if rows == 0:
        return 0
    cols = len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                num = p * a[i][j] - a[i][c] * a[r][j]
                # Sylvester's identity guarantees exact division
                a[i][j] = num // prev
            a[i][c] = 0
        prev = p
        r += 1
    return r


def elementary_divisors(m) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each dividing the next."""
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    divisors = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the remaining block, else fold a row in
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                for j in range(t, cols):
                    a[t][j] += a[bad][j]
                continue
            # move the smallest nonzero entry of row/column t onto the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(cand)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


def lattice_index(generators, dim: int) -> int | None:
    """Index in Z^dim of the subgroup spanned by ``generators``.

    Returns ``None`` when the span has rank below ``dim`` (infinite index).
    """
    gens = [list(g) for g in generators]
    if any(len(g) != dim for g in gens):
        raise ValueError(f"generators must have length {dim}")
    if not gens:
        return None
    d = elementary_divisors(gens)
    if len(d) < dim:
        return None
    return prod(d)


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def inverse_integer(m):
    """Inverse of an integer matrix that must itself be integral (det = +-1)."""
    from fractions import Fraction

    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("inverse is not integral")
    return [[int(x) for x in row] for row in inv]
