"""Euler characteristics and monodromy zeta functions from Newton data.

``varchenko_zeta`` sums, over every coordinate subspace C^I on which f
does not vanish identically and every maximal compact face of
Gamma(f^I), the contribution chi * Lambda_d where

    chi = (-1)^|I| * |I|! Vol(Cone(face)) / d.

``brieskorn_zeta_oracle`` is the independent cross-check for diagonal
polynomials, built only from the divisor ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ._exact import affine_rank, normalized_volume
from .divring import LambdaDivisor, ZetaForm, join_suspension, ONE
from .errors import (ConsistencyError, DegenerateFaceError, InputError,
                     UnsupportedDimensionError)
from .newton import (PolySupport, Verdict, WeightVector, all_faces, boundary_facets,
                     face_nondegenerate, is_convenient, restrict_support, weight_data)


@dataclass(frozen=True)
class ChiRecord:
    subset: tuple[int, ...]
    weight: tuple[int, ...]
    degree: int
    chi: int


def cone_normalized_volume(points: Iterable[Sequence[int]], dim: int) -> int:
    """dim! * Vol_dim of conv({0} U points)."""
    pts = [tuple(p) for p in points]
    if any(len(p) != dim for p in pts):
        raise InputError(f"points must have length {dim}")
    return normalized_volume([(0,) * dim] + pts)


def torus_euler_characteristic(h: PolySupport) -> int:
    """Euler characteristic of {h = 0} in the torus, for Newton non-degenerate h.

    Zero whenever the Newton diagram is not full-dimensional.
    """
    if h is None or h.is_empty():
        raise InputError("empty polynomial")
    m = h.n
    pts = list(h.support)
    if affine_rank(pts) < m:
        return 0
    return (-1) ** (m - 1) * normalized_volume(pts)


def face_chi(f: PolySupport, subset: Iterable[int], weight: WeightVector | Sequence[int]) -> ChiRecord:
    I = tuple(sorted(set(subset)))
    fI = restrict_support(f, I)
    if fI is None:
        raise InputError(f"f vanishes identically on the coordinate subspace {I}")
    face = weight_data(fI, weight)
    if face.dim != len(I) - 1:
        raise InputError(f"weight {tuple(weight)} does not cut out a maximal face of f^{I}")
    vol = cone_normalized_volume(face.points, len(I))
    num = (-1) ** len(I) * vol
    if num % face.degree:
        raise ConsistencyError(f"volume {vol} not divisible by degree {face.degree} on subset {I}")
    return ChiRecord(I, face.weight.entries, face.degree, num // face.degree)


def chi_records(f: PolySupport) -> list[ChiRecord]:
    """All non-zero-subset contributions, in (subset, weight) order."""
    out = []
    for size in range(1, f.n + 1):
        for I in combinations(range(f.n), size):
            fI = restrict_support(f, I)
            if fI is None:
                continue
            for facet in boundary_facets(fI):
                out.append(face_chi(f, I, facet.weight))
    return out


def check_nondegenerate(f: PolySupport) -> None:
    """Raise DegenerateFaceError on the first degenerate face of any Gamma(f^I)."""
    if f.n > 3:
        raise UnsupportedDimensionError("non-degeneracy verification needs n <= 3")
    for size in range(1, f.n + 1):
        for I in combinations(range(f.n), size):
            fI = restrict_support(f, I)
            if fI is None:
                continue
            for face in all_faces(fI):
                verdict = face_nondegenerate(fI, face)
                if verdict is not Verdict.NONDEGENERATE:
                    raise DegenerateFaceError(
                        f"face {face.points} of f^{I} (weight {face.weight.entries}) is {verdict.value}", face)


def varchenko_zeta(f: PolySupport, verify: bool = False) -> ZetaForm:
    """Unreduced monodromy zeta of a Newton non-degenerate germ."""
    if f is None or f.is_empty():
        raise InputError("empty polynomial")
    if verify:
        check_nondegenerate(f)
    acc: dict[int, int] = {}
    for rec in chi_records(f):
        acc[rec.degree] = acc.get(rec.degree, 0) + rec.chi
    return ZetaForm(LambdaDivisor(acc), False)


def advisory(f: PolySupport) -> str | None:
    if is_convenient(f):
        return None
    return "non-convenient input: formula applied as for pseudo-convenient local germs"


def brieskorn_zeta_oracle(exponents: Sequence[int]) -> ZetaForm:
    """Reduced zeta of x_1^a_1 + ... + x_n^a_n by iterated joins."""
    if not exponents:
        raise InputError("need at least one exponent")
    if any(a < 2 for a in exponents):
        raise InputError("Brieskorn exponents must be >= 2")
    Z = ZetaForm(ONE - LambdaDivisor.lam(exponents[0]), True)
    for a in exponents[1:]:
        Z = join_suspension(Z, a)
    return Z


def brieskorn_support(exponents: Sequence[int]) -> PolySupport:
    n = len(exponents)
    return PolySupport.from_support(tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exponents))
