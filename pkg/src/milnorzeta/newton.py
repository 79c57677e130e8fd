"""Newton polyhedra of polynomial germs: supports, faces and weights.

Variable indices are 0-based throughout.  A polynomial is kept as a
:class:`PolySupport`, i.e. a map from exponent tuples to exact rational
coefficients.  Only the support matters for most of the combinatorics.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from functools import reduce
from typing import Iterable, Mapping, Sequence

import sympy

from ._exact import affine_rank, integer_normal, primitive
from .errors import InputError, UnsupportedDimensionError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class PolySupport:
    n: int
    terms: tuple[tuple[Exponent, Fraction], ...]
    has_coefficients: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise InputError("number of variables must be >= 1")
        for exp, coef in self.terms:
            if len(exp) != self.n:
                raise InputError(f"exponent {exp} does not have length {self.n}")
            if any(e < 0 for e in exp):
                raise InputError(f"negative exponent in {exp}")
            if coef == 0:
                raise InputError("zero coefficients must be dropped")

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[Sequence[int], object] | Iterable[tuple[Sequence[int], object]],
                   has_coefficients: bool = True) -> PolySupport:
        """Build from (exponent, coefficient) pairs; duplicates are summed, zeros dropped."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(coef)
        kept = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        return cls(n, kept, has_coefficients)

    @classmethod
    def from_support(cls, points: Iterable[Sequence[int]]) -> PolySupport:
        """Coefficient-free polynomial: every support point gets coefficient 1."""
        pts = sorted(set(tuple(int(e) for e in p) for p in points))
        if not pts:
            raise InputError("empty support")
        return cls(len(pts[0]), tuple((p, Fraction(1)) for p in pts), has_coefficients=False)

    @classmethod
    def from_sympy(cls, expr, gens: Sequence[sympy.Symbol]) -> PolySupport:
        poly = sympy.Poly(sympy.expand(expr), *gens, domain="QQ")
        return cls.from_terms(len(gens), [(m, Fraction(int(c.p), int(c.q))) for m, c in poly.terms()])

    @property
    def support(self) -> tuple[Exponent, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def coefficients(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def to_sympy(self, gens: Sequence[sympy.Symbol] | None = None):
        gens = gens or sympy.symbols(f"z0:{self.n}")
        return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([g**e for g, e in zip(gens, exp)])
                   for exp, c in self.terms)


@dataclass(frozen=True)
class WeightVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(p) for p in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries or any(p < 0 for p in entries):
            raise InputError(f"weight {entries} must be non-negative")
        if reduce(gcd, entries, 0) != 1:
            raise InputError(f"weight {entries} is zero or not primitive")

    @property
    def positive(self) -> bool:
        return all(p > 0 for p in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def degree(self, exp: Sequence[int]) -> int:
        return sum(p * e for p, e in zip(self.entries, exp))


@dataclass(frozen=True)
class Face:
    weight: WeightVector
    degree: int
    points: tuple[Exponent, ...]
    dim: int


class Verdict(enum.Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class SupportProfile:
    multiplicity: int
    convenient: bool
    monomial_factor: Exponent
    reduced: PolySupport
    reduced_convenient: bool


def _require_nonempty(f: PolySupport | None) -> PolySupport:
    if f is None or f.is_empty():
        raise InputError("operation needs a non-empty support")
    return f


def restrict_support(f: PolySupport, indices: Iterable[int]) -> PolySupport | None:
    """Restriction f^I to the coordinate subspace spanned by ``indices``.

    The result lives in ``len(I)`` variables, ordered as sorted(I).
    Returns None when no term survives.
    """
    idx = sorted(set(indices))
    if not idx:
        raise InputError("index set must be non-empty")
    if any(i < 0 or i >= f.n for i in idx):
        raise InputError(f"index set {idx} out of range for n={f.n}")
    drop = [i for i in range(f.n) if i not in idx]
    kept = [(tuple(exp[i] for i in idx), c) for exp, c in f.terms if all(exp[i] == 0 for i in drop)]
    if not kept:
        return None
    return PolySupport(len(idx), tuple(sorted(kept)), f.has_coefficients)


def weight_data(f: PolySupport, weight: WeightVector | Sequence[int]) -> Face:
    """Minimal weighted degree d(P;f) and the support points attaining it."""
    f = _require_nonempty(f)
    P = weight if isinstance(weight, WeightVector) else WeightVector(tuple(weight))
    if len(P) != f.n:
        raise InputError("weight length does not match number of variables")
    degs = [(P.degree(e), e) for e in f.support]
    d = min(x for x, _ in degs)
    pts = tuple(sorted(e for x, e in degs if x == d))
    return Face(P, d, pts, affine_rank(pts))


def _polyhedron_facets(points: list[Exponent], n: int) -> dict[Exponent, frozenset[int]]:
    """All facets of Gamma^+ = conv(points) + R^n_{>=0}: primitive normal -> point indices on it.

    A facet is spanned by k support points and n-k coordinate directions
    (the ones its normal vanishes on), so every candidate hyperplane is
    enumerated from such a choice and kept if it supports all points.
    """
    facets: dict[Exponent, frozenset[int]] = {}
    for k in range(1, n + 1):
        for pidx in combinations(range(len(points)), k):
            base = points[pidx[0]]
            diffs = [[a - b for a, b in zip(points[i], base)] for i in pidx[1:]]
            for dirs in combinations(range(n), n - k):
                rays = [[1 if j == i else 0 for j in range(n)] for i in dirs]
                normal = integer_normal(diffs + rays, n)
                if not any(normal):
                    continue
                if all(x <= 0 for x in normal):
                    normal = tuple(-x for x in normal)
                if any(x < 0 for x in normal):
                    continue
                normal = primitive(normal)
                if normal in facets:
                    continue
                vals = [sum(p * e for p, e in zip(normal, pt)) for pt in points]
                d = vals[pidx[0]]
                if min(vals) == d:
                    facets[normal] = frozenset(i for i, v in enumerate(vals) if v == d)
    return facets


def all_faces(f: PolySupport) -> list[Face]:
    """Every compact face of the Newton boundary, each with a positive primitive witness weight.

    Faces are the non-empty intersections of facets of Gamma^+; a face is
    compact exactly when the sum of the normals of the facets containing
    it is strictly positive (that sum lies in the relative interior of
    its normal cone).
    """
    f = _require_nonempty(f)
    points = list(f.support)
    n = f.n
    facets = _polyhedron_facets(points, n)
    sets = set(facets.values())
    frontier = list(sets)
    while frontier:
        nxt = []
        for s in frontier:
            for t in facets.values():
                u = s & t
                if u and u not in sets:
                    sets.add(u)
                    nxt.append(u)
        frontier = nxt
    faces = []
    for s in sets:
        normals = [nv for nv, t in facets.items() if s <= t]
        w = [sum(col) for col in zip(*normals)]
        if not all(x > 0 for x in w):
            continue
        face = weight_data(f, primitive(w))
        if set(face.points) != {points[i] for i in s}:
            raise AssertionError("witness weight does not cut out the face")
        faces.append(face)
    faces.sort(key=lambda F: (-F.dim, F.weight.entries, F.points))
    return faces


def boundary_facets(f: PolySupport) -> list[Face]:
    """Maximal-dimensional compact faces of Gamma(f), sorted by weight."""
    f = _require_nonempty(f)
    return sorted((F for F in all_faces(f) if F.dim == f.n - 1), key=lambda F: F.weight.entries)


def support_profile(f: PolySupport) -> SupportProfile:
    f = _require_nonempty(f)
    supp = f.support
    factor = tuple(min(e[i] for e in supp) for i in range(f.n))
    reduced = PolySupport(f.n, tuple(sorted((tuple(a - b for a, b in zip(e, factor)), c) for e, c in f.terms)),
                          f.has_coefficients)
    return SupportProfile(
        multiplicity=min(sum(e) for e in supp),
        convenient=is_convenient(f),
        monomial_factor=factor,
        reduced=reduced,
        reduced_convenient=is_convenient(reduced),
    )


def is_convenient(f: PolySupport) -> bool:
    """True iff some pure power of every variable appears in the support."""
    axes = set()
    for exp in f.support:
        nz = [i for i, e in enumerate(exp) if e]
        if len(nz) == 1:
            axes.add(nz[0])
    return len(axes) == f.n


def face_nondegenerate(f: PolySupport, face: Face, use_groebner: bool = True) -> Verdict:
    """Decide whether the face function f_face has critical points on the torus.

    Works for n <= 3.  Dimension-2 faces are screened with resultants; if
    the screen cannot rule out a common torus zero the question is settled
    with a saturated Groebner basis (or reported UNDECIDED when
    ``use_groebner`` is False).
    """
    if f.n > 3:
        raise UnsupportedDimensionError("face non-degeneracy is implemented for n <= 3 only")
    if not f.has_coefficients:
        raise InputError("face non-degeneracy needs actual coefficients")
    if face.dim == 0:
        return Verdict.NONDEGENERATE
    coeffs = f.coefficients
    try:
        terms = [(p, coeffs[p]) for p in face.points]
    except KeyError as exc:
        raise InputError(f"face point {exc.args[0]} is not in the support") from None
    if face.dim == 1:
        return _edge_verdict(terms)
    if face.dim == 2:
        if not face.weight.positive:
            raise InputError("two-dimensional face needs a positive weight")
        return _facet_verdict(terms, use_groebner)
    raise InputError(f"face of dimension {face.dim} in n={f.n}")


def _q(c: Fraction):
    return sympy.Rational(c.numerator, c.denominator)


def _edge_verdict(terms) -> Verdict:
    pts = [p for p, _ in terms]
    v0 = min(pts)
    step = primitive([a - b for a, b in zip(max(pts), v0)])
    s = sympy.Symbol("s")
    g = 0
    for p, c in terms:
        diff = [a - b for a, b in zip(p, v0)]
        t = next(d // st for d, st in zip(diff, step) if st)
        g += _q(c) * s**t
    g = sympy.Poly(g, s, domain="QQ")
    h = sympy.gcd(g, g.diff(s))
    # gcd up to a power of s means no repeated non-zero root
    h_terms = h.terms()
    return Verdict.NONDEGENERATE if len(h_terms) == 1 else Verdict.DEGENERATE


def _facet_verdict(terms, use_groebner: bool) -> Verdict:
    x, y, w = sympy.symbols("x y w")
    # z = 1 slice: every C*-orbit of a positively weighted homogeneous polynomial meets it
    g = sum(_q(c) * x**p[0] * y**p[1] for p, c in terms)
    gp = sympy.Poly(g, x, y, domain="QQ")
    mx = min(m[0] for m in gp.monoms())
    my = min(m[1] for m in gp.monoms())
    h = sympy.Poly(sympy.expand(g / (x**mx * y**my)), x, y, domain="QQ")
    hx, hy = h.diff(x), h.diff(y)
    common = sympy.gcd(sympy.gcd(h, hx), hy)
    if common.total_degree() > 0:
        return Verdict.DEGENERATE
    for var in (y, x):
        r1 = sympy.resultant(h.as_expr(), hx.as_expr(), var)
        r2 = sympy.resultant(h.as_expr(), hy.as_expr(), var)
        other = x if var is y else y
        r1 = sympy.Poly(r1, other, domain="QQ")
        r2 = sympy.Poly(r2, other, domain="QQ")
        if r1.is_zero or r2.is_zero:
            continue
        G = sympy.gcd(r1, r2)
        if len(G.terms()) == 1:
            return Verdict.NONDEGENERATE
    if not use_groebner:
        return Verdict.UNDECIDED
    gb = sympy.groebner([h.as_expr(), hx.as_expr(), hy.as_expr(), w * x * y - 1], w, x, y, order="lex", domain="QQ")
    return Verdict.NONDEGENERATE if list(gb.exprs) == [1] else Verdict.DEGENERATE
