"""Divisor calculus of products of (1 - t^d)^nu.

A :class:`LambdaDivisor` is a finite integer combination of the
divisors Lambda_d of t^d - 1.  Multiplication is the bilinear extension
of Lambda_d * Lambda_e = gcd(d, e) Lambda_lcm(d, e).
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import InputError, NotASuspensionError


class LambdaDivisor(Mapping):
    """Immutable canonical map period -> nonzero coefficient."""

    __slots__ = ("_items",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        acc: dict[int, int] = {}
        for d, nu in (coeffs or {}).items():
            d, nu = int(d), int(nu)
            if d < 1:
                raise InputError(f"period must be >= 1, got {d}")
            acc[d] = acc.get(d, 0) + nu
        self._items = tuple(sorted((d, nu) for d, nu in acc.items() if nu))

    @classmethod
    def lam(cls, d: int, nu: int = 1) -> LambdaDivisor:
        return cls({d: nu})

    def __getitem__(self, d: int) -> int:
        for k, v in self._items:
            if k == d:
                return v
        raise KeyError(d)

    def get(self, d, default=0):
        return dict(self._items).get(d, default)

    def items(self):
        return self._items

    def __iter__(self) -> Iterator[int]:
        return (d for d, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, LambdaDivisor):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self == LambdaDivisor(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = " + ".join(f"{nu}*L{d}" for d, nu in self._items) or "0"
        return f"LambdaDivisor({body})"

    def __add__(self, other: LambdaDivisor) -> LambdaDivisor:
        acc = dict(self._items)
        for d, nu in other.items():
            acc[d] = acc.get(d, 0) + nu
        return LambdaDivisor(acc)

    def __neg__(self) -> LambdaDivisor:
        return LambdaDivisor({d: -nu for d, nu in self._items})

    def __sub__(self, other: LambdaDivisor) -> LambdaDivisor:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LambdaDivisor({d: other * nu for d, nu in self._items})
        if isinstance(other, LambdaDivisor):
            return lambda_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self._items)

    def to_json(self) -> dict[str, int]:
        return {str(d): nu for d, nu in self._items}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LambdaDivisor:
        try:
            return cls({int(k): _strict_int(v) for k, v in data.items()})
        except (TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"bad divisor {data!r}: {exc}") from None


def _strict_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"coefficient {v!r} is not an integer")
    return v


ONE = LambdaDivisor({1: 1})


def lambda_mul(D: LambdaDivisor, E: LambdaDivisor) -> LambdaDivisor:
    acc: dict[int, int] = {}
    for d, a in D.items():
        for e, b in E.items():
            g = gcd(d, e)
            l = d * e // g
            acc[l] = acc.get(l, 0) + a * b * g
    return LambdaDivisor(acc)


def divisor_degree(D: LambdaDivisor) -> int:
    return sum(d * nu for d, nu in D.items())


@dataclass(frozen=True)
class ZetaForm:
    """Divisor of zeta(t) (``reduced=False``) or of zeta(t)(1 - t) (``reduced=True``)."""

    divisor: LambdaDivisor
    reduced: bool = False

    def to_reduced(self) -> ZetaForm:
        if self.reduced:
            return self
        return ZetaForm(self.divisor + ONE, True)

    def to_unreduced(self) -> ZetaForm:
        if not self.reduced:
            return self
        return ZetaForm(self.divisor - ONE, False)

    def to_json(self) -> dict:
        return {"lambda": self.divisor.to_json(), "reduced": self.reduced}

    @classmethod
    def from_json(cls, data) -> ZetaForm:
        if not isinstance(data, Mapping):
            raise InputError("divisor JSON must be an object")
        if "lambda" in data:
            reduced = data.get("reduced", False)
            if not isinstance(reduced, bool):
                raise InputError("'reduced' must be a boolean")
            return cls(LambdaDivisor.from_json(data["lambda"]), reduced)
        return cls(LambdaDivisor.from_json(data), False)

    def render(self) -> str:
        return render(self)


def milnor_from_zeta(Z: ZetaForm, n: int) -> int:
    """mu from deg zeta = -1 + (-1)^n mu."""
    if n < 1:
        raise InputError("ambient dimension must be >= 1")
    mu = (-1) ** n * (divisor_degree(Z.to_unreduced().divisor) + 1)
    if mu < 0:
        raise InputError(f"negative Milnor number {mu}: not the zeta of an isolated singularity in C^{n}")
    return mu


def join_suspension(Z: ZetaForm, m: int) -> ZetaForm:
    """Reduced zeta of f(z) + w^m from the reduced zeta of f."""
    if m < 2:
        raise InputError("join exponent must be >= 2")
    if not Z.reduced:
        raise InputError("join acts on the reduced form")
    return ZetaForm(lambda_mul(Z.divisor, ONE - LambdaDivisor.lam(m)), True)


def unjoin(Z: ZetaForm, m: int) -> ZetaForm:
    """Invert :func:`join_suspension` by peeling off the largest period.

    Requires every period of the pre-image to be coprime to m; the result
    is re-multiplied and rejected unless it reproduces Z exactly.
    """
    if m < 2:
        raise InputError("join exponent must be >= 2")
    if not Z.reduced:
        raise InputError("unjoin acts on the reduced form")
    rest = Z.divisor
    found: dict[int, int] = {}
    factor = ONE - LambdaDivisor.lam(m)
    while rest:
        e = max(rest)
        if e % m:
            raise NotASuspensionError(f"largest period {e} is not a multiple of {m}")
        d = e // m
        if gcd(d, m) != 1:
            raise NotASuspensionError(f"period {d} is not coprime to {m}")
        nu = -rest[e]
        found[d] = found.get(d, 0) + nu
        rest = rest - lambda_mul(LambdaDivisor.lam(d, nu), factor)
    pre = LambdaDivisor(found)
    if lambda_mul(pre, factor) != Z.divisor:
        raise NotASuspensionError("peeled divisor does not reproduce the input")
    return ZetaForm(pre, True)


def zeta_multiplicity(Z: ZetaForm) -> tuple[int, int]:
    D = Z.divisor
    if not D:
        raise InputError("zeta multiplicity of the empty divisor")
    d = min(D)
    return d, D[d]


def render(Z: ZetaForm) -> str:
    if not Z.divisor:
        return "1"
    return " ".join(f"(1-t^{d})^{nu}" for d, nu in Z.divisor.items())


_FACTOR = re.compile(r"\(1-t\^(\d+)\)\^(-?\d+)")


def parse_rendered(text: str, reduced: bool = False) -> ZetaForm:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "1":
        return ZetaForm(LambdaDivisor(), reduced)
    parts = text.split()
    acc: dict[int, int] = {}
    for part in parts:
        mt = _FACTOR.fullmatch(part)
        if not mt:
            raise InputError(f"cannot parse factor {part!r}")
        d, nu = int(mt.group(1)), int(mt.group(2))
        acc[d] = acc.get(d, 0) + nu
    return ZetaForm(LambdaDivisor(acc), reduced)
