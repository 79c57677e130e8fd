"""Small exact linear-algebra kernels over the integers and rationals.

Everything here works on plain Python ints / Fractions; sizes in this
package stay tiny (n <= 4 for lattice geometry, < 100 for plumbing
matrices), so clarity wins over speed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Sequence

Vector = tuple[int, ...]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(rows: Sequence[Sequence[int]]) -> list[int]:
    """All leading principal minors det(M[:k, :k]) for k = 1..n.

    Bareiss elimination without pivoting produces them as successive
    pivots; once a pivot vanishes the remaining minors are computed
    directly.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend(det([r[:j] for r in rows[:j]]) for j in range(k + 2, n + 1))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def primitive(v: Sequence[int]) -> Vector:
    g = reduce(gcd, (abs(x) for x in v), 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_normal(vectors: Sequence[Sequence[int]], n: int) -> Vector:
    """Generalized cross product of n-1 integer vectors in Z^n.

    Returns the zero vector when the inputs are linearly dependent.
    """
    assert len(vectors) == n - 1
    out = []
    for i in range(n):
        minor = [[v[j] for j in range(n) if j != i] for v in vectors]
        out.append((-1) ** i * det(minor))
    return tuple(out)


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull; -1 for an empty set."""
    if not points:
        return -1
    p0 = points[0]
    return rank([[x - y for x, y in zip(p, p0)] for p in points[1:]])


def _affine_coordinates(points: Sequence[Sequence[int]]) -> list[tuple[Fraction, ...]]:
    """Coordinates of points w.r.t. an affine frame of their own hull."""
    p0 = points[0]
    diffs = [[Fraction(x - y) for x, y in zip(p, p0)] for p in points]
    basis: list[list[Fraction]] = []
    for d in diffs:
        if rank(basis + [d]) > len(basis):
            basis.append(d)
    r = len(basis)
    if r == 0:
        return [() for _ in points]
    # Solve basis^T c = d through the normal equations (basis has full row rank).
    gram = [[sum(a * b for a, b in zip(u, v)) for v in basis] for u in basis]
    coords = []
    for d in diffs:
        rhs = [sum(a * b for a, b in zip(u, d)) for u in basis]
        coords.append(tuple(_solve(gram, rhs)))
    return coords


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def hull_facets(points: Sequence[Sequence[int]]) -> list[frozenset[int]]:
    """Facets of conv(points) inside its own affine hull, as index sets.

    Brute force over r-subsets, where r is the affine dimension.
    """
    r = affine_rank(points)
    if r <= 0:
        return []
    coords = _affine_coordinates(points)
    seen: set[frozenset[int]] = set()
    facets = []
    for idx in combinations(range(len(points)), r):
        base = coords[idx[0]]
        spans = [[a - b for a, b in zip(coords[i], base)] for i in idx[1:]]
        normal = _rational_normal(spans, r)
        if not any(normal):
            continue
        vals = [sum(a * b for a, b in zip(normal, c)) for c in coords]
        off = vals[idx[0]]
        if all(v >= off for v in vals) or all(v <= off for v in vals):
            face = frozenset(i for i, v in enumerate(vals) if v == off)
            if face not in seen:
                seen.add(face)
                facets.append(face)
    return facets


def _rational_normal(vectors: list[list[Fraction]], n: int) -> list[Fraction]:
    # Clear denominators, then reuse the integer cofactor formula.
    ints = []
    for v in vectors:
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
        ints.append([int(x * den) for x in v])
    return [Fraction(x) for x in integer_normal(ints, n)]


def normalized_volume(points: Sequence[Sequence[int]]) -> int:
    """dim! * Vol_dim of conv(points) in the ambient space (0 if not full-dimensional).

    Uses the pulling triangulation from the lexicographically smallest
    point, recursively over facets not containing it.
    """
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        return 0
    dim = len(pts[0])
    if affine_rank(pts) < dim:
        return 0
    return _pull([], pts)


def _pull(apexes: list[Vector], pts: list[Vector]) -> int:
    if affine_rank(pts) == 0:
        simplex = apexes + [pts[0]]
        v0 = simplex[0]
        return abs(det([[x - y for x, y in zip(v, v0)] for v in simplex[1:]]))
    base = pts[0]
    total = 0
    for facet in hull_facets(pts):
        if 0 in facet:
            continue
        total += _pull(apexes + [base], sorted(pts[i] for i in facet))
    return total
