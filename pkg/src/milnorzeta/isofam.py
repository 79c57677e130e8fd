"""Invariants of isolation families f = q_d(x, y, z) + z^(d+m).

q_d is a degree-d form whose projective curve has only nodes (A1).
The zeta function is assembled from three independently checked pieces:
the zeta of a generic (smooth) degree-d form, the correction for the
degenerate top face, and one local zeta per node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .divring import LambdaDivisor, ZetaForm, milnor_from_zeta, zeta_multiplicity
from .errors import ConsistencyError, InputError
from .newton import PolySupport
from .varch import varchenko_zeta

SUPPORTED_SINGULARITIES = ("A1",)


@dataclass(frozen=True)
class IsolationInput:
    d: int
    k: int
    m: int
    singularity: str = "A1"

    def __post_init__(self):
        if self.d < 3:
            raise InputError(f"curve degree must be >= 3, got {self.d}")
        if self.k < 0:
            raise InputError(f"node count must be >= 0, got {self.k}")
        if self.m < 1:
            raise InputError(f"isolation exponent must be >= 1, got {self.m}")
        if self.singularity not in SUPPORTED_SINGULARITIES:
            raise InputError(f"only nodal curves are supported, got {self.singularity!r}")


@dataclass(frozen=True)
class InvariantReport:
    input: IsolationInput
    zeta: ZetaForm
    mu: int
    mu_star: tuple[int, int, int]
    zeta_multiplicity: tuple[int, int] | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "input": {"d": self.input.d, "k": self.input.k, "m": self.input.m},
            "zeta": self.zeta.to_json(),
            "rendered": self.zeta.render(),
            "mu": self.mu,
            "mu_star": list(self.mu_star),
            "zeta_multiplicity": list(self.zeta_multiplicity) if self.zeta_multiplicity else None,
        }


def smooth_reference_zeta(d: int) -> ZetaForm:
    """Zeta of a generic degree-d form in three variables: -(d^2 - 3d + 3) Lambda_d."""
    if d < 3:
        raise InputError("degree must be >= 3")
    closed = ZetaForm(LambdaDivisor.lam(d, -(d * d - 3 * d + 3)))
    engine = varchenko_zeta(PolySupport.from_support([(d, 0, 0), (0, d, 0), (0, 0, d)]))
    if engine != closed:
        raise ConsistencyError(f"smooth reference mismatch at d={d}: {engine} vs {closed}")
    return closed


def local_node_zeta(d: int, m: int) -> ZetaForm:
    """Zeta at one node of the exceptional curve, local form v3^d (v1^2 + v2^2 + v3^m)."""
    if d < 3 or m < 1:
        raise InputError("need d >= 3 and m >= 1")
    closed = ZetaForm(LambdaDivisor.lam(d + m, -1))
    engine = varchenko_zeta(PolySupport.from_support([(2, 0, d), (0, 2, d), (0, 0, d + m)]))
    if engine != closed:
        raise ConsistencyError(f"local node zeta mismatch at d={d}, m={m}: {engine} vs {closed}")
    return closed


def compose_almost_zeta(zeta_s: ZetaForm, degenerate_faces: Sequence[tuple[int, int]],
                        local_zetas: Sequence[ZetaForm], n: int) -> ZetaForm:
    """Zeta of an almost non-degenerate function from its pieces.

    ``degenerate_faces`` lists (d(P_face), total Milnor number of the face
    function's singular orbits); each contributes (1 - t^d)^((-1)^(n-1) mu).
    """
    if n < 2:
        raise InputError("dimension must be >= 2")
    D = zeta_s.to_unreduced().divisor
    for d_face, mu_face in degenerate_faces:
        D = D + LambdaDivisor.lam(d_face, (-1) ** (n - 1) * mu_face)
    for Z in local_zetas:
        if Z.reduced:
            raise InputError("local zetas must be unreduced")
        D = D + Z.divisor
    return ZetaForm(D, False)


def isolation_invariants(inp: IsolationInput) -> InvariantReport:
    d, k, m = inp.d, inp.k, inp.m
    zeta = compose_almost_zeta(smooth_reference_zeta(d), [(d, k)] if k else [],
                               [local_node_zeta(d, m)] * k, 3)
    closed = ZetaForm(LambdaDivisor({d: -(d * d - 3 * d + 3 - k), d + m: -k}))
    if zeta != closed:
        raise ConsistencyError(f"composed zeta {zeta} differs from closed form {closed}")
    mu = milnor_from_zeta(zeta, 3)
    if mu != (d - 1) ** 3 + k * m:
        raise ConsistencyError(f"Milnor number {mu} from zeta differs from (d-1)^3 + km")
    mult = zeta_multiplicity(zeta) if zeta.divisor else None
    return InvariantReport(inp, zeta, mu, (mu, (d - 1) ** 2, d - 1), mult)
