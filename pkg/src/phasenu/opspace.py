"""Coefficient-manifold algebra for phase-space operator definitions.

A phase-space representation is fixed by four real coefficients
(alpha, beta, gamma, delta) entering

    r_op = alpha*r + i*hbar*beta * d/dp ,   p_op = gamma*p + i*hbar*delta * d/dr

subject to beta*gamma - alpha*delta = 1, which is exactly the condition
[r_op, p_op] = i*hbar.  Points are transformed by diagonal integer matrices
acting componentwise; the four fundamental transforms g_1..g_4 each zero one
coefficient, their complements c_k = I - g_k carry a single 1, and repeated
application composes additively: g' = g0 - sum(count_k * c_k).  Only
transforms touching the (alpha, beta) pair or the (gamma, delta) pair may be
mixed in one composition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ForbiddenCombination, WavefunctionDependentAngle

#: Tolerance on |beta*gamma - alpha*delta - 1| for manifold membership.
MANIFOLD_TOL = 1e-12

_POSITION_GROUP = frozenset({0, 1})
_MOMENTUM_GROUP = frozenset({2, 3})


@dataclass(frozen=True)
class OpPoint:
    """Operator coefficient 4-tuple; membership of the constraint surface
    is a query, not a construction invariant, because transforms may move
    points off it."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)


def manifold_point(alpha: float, beta: float, delta: float) -> OpPoint:
    """Point with gamma chosen to satisfy the constraint exactly.

    gamma = (1 + alpha*delta)/beta, so beta must be nonzero.
    """
    gamma = (1.0 + alpha * delta) / beta
    return OpPoint(alpha, beta, gamma, delta)


def commutator_coefficient(p: OpPoint) -> float:
    """Coefficient c in [r_op, p_op] = i*hbar*c, namely beta*gamma - alpha*delta."""
    return p.beta * p.gamma - p.alpha * p.delta


def is_on_manifold(p: OpPoint, tol: float = MANIFOLD_TOL) -> bool:
    """Whether beta*gamma - alpha*delta = 1 within tol."""
    return abs(commutator_coefficient(p) - 1.0) <= tol


def satisfies_legacy_sum(p: OpPoint, tol: float = MANIFOLD_TOL) -> bool:
    """Older constraint alpha + gamma = 1, kept distinct from the commutator one."""
    return abs(p.alpha + p.gamma - 1.0) <= tol


@dataclass(frozen=True)
class GEta:
    """Diagonal integer transform matrix, stored as its diagonal."""

    diag: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        d = tuple(int(x) for x in self.diag)
        if len(d) != 4:
            raise ValueError("diagonal must have four entries")
        object.__setattr__(self, "diag", d)


@dataclass(frozen=True)
class GComplement:
    """Complement diagonal I - g; for a fundamental transform this has a
    single 1 marking the coefficient the transform zeroes."""

    diag: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        d = tuple(int(x) for x in self.diag)
        if len(d) != 4:
            raise ValueError("diagonal must have four entries")
        object.__setattr__(self, "diag", d)

    def as_transform(self) -> GEta:
        return GEta(self.diag)

    def touched(self) -> frozenset[int]:
        """Indices of nonzero entries: the coefficients this would shift."""
        return frozenset(i for i, x in enumerate(self.diag) if x != 0)


def identity() -> GEta:
    return GEta((1, 1, 1, 1))


def fundamental(kind: int) -> GEta:
    """The transform that zeroes coefficient number ``kind`` (1-based)."""
    if kind not in (1, 2, 3, 4):
        raise ValueError(f"kind must be in 1..4, got {kind}")
    diag = [1, 1, 1, 1]
    diag[kind - 1] = 0
    return GEta(tuple(diag))


def complement(g: GEta) -> GComplement:
    """Entrywise I - g."""
    return GComplement(tuple(1 - x for x in g.diag))


def can_combine(kinds: Iterable[int]) -> bool:
    """Whether the fundamental transforms named by ``kinds`` may share one
    composition: all within {1,2} or all within {3,4}."""
    ks = set(kinds)
    if not ks <= {1, 2, 3, 4}:
        raise ValueError(f"kinds must be drawn from 1..4, got {sorted(ks)}")
    return ks <= {1, 2} or ks <= {3, 4}


def compose(
    g0: GEta, applications: Sequence[tuple[GComplement, int]]
) -> GEta:
    """Apply counted complement shifts to g0: g' = g0 - sum(count * c).

    Negative counts undo applications.  Every complement in the list must
    touch only the (alpha, beta) slots or only the (gamma, delta) slots;
    mixing the two groups in one composition is rejected.
    """
    touched: set[int] = set()
    for c, _count in applications:
        touched |= c.touched()
    if not (touched <= _POSITION_GROUP or touched <= _MOMENTUM_GROUP):
        raise ForbiddenCombination(
            f"composition touches coefficient slots {sorted(touched)}; "
            "only the (alpha, beta) pair or the (gamma, delta) pair may mix"
        )
    diag = list(g0.diag)
    for c, count in applications:
        if count != int(count):
            raise ValueError("application counts must be integers")
        for i, x in enumerate(c.diag):
            diag[i] -= int(count) * x
    return GEta(tuple(diag))


def apply_to_point(g: GEta, p: OpPoint) -> tuple[OpPoint, bool]:
    """Componentwise image g·(alpha,beta,gamma,delta) and its membership."""
    a, b, c, d = p.as_tuple()
    image = OpPoint(g.diag[0] * a, g.diag[1] * b, g.diag[2] * c, g.diag[3] * d)
    return image, is_on_manifold(image)


class SpaceKind(enum.Enum):
    POSITION_LIKE = "position_like"
    MOMENTUM_LIKE = "momentum_like"
    FULL = "full"
    OTHER = "other"


def classify(g: GEta) -> SpaceKind:
    """Named masks: diag(1,0,0,1) and diag(0,1,1,0) are the two reduced
    phase spaces, the identity keeps everything, anything else is unnamed."""
    if g.diag == (1, 0, 0, 1):
        return SpaceKind.POSITION_LIKE
    if g.diag == (0, 1, 1, 0):
        return SpaceKind.MOMENTUM_LIKE
    if g.diag == (1, 1, 1, 1):
        return SpaceKind.FULL
    return SpaceKind.OTHER


class AngleKind(enum.Enum):
    PHI1 = 1
    PHI2 = 2
    PHI3 = 3
    PHI4 = 4


@dataclass(frozen=True)
class PhaseAngleSpec:
    """Which rotation angle to evaluate; the arbitrary constant only enters
    the two wavefunction-dependent kinds."""

    kind: AngleKind
    constant_C: complex = 0j


def phase_angle(
    spec: PhaseAngleSpec, r: float, p: float, point: OpPoint, hbar: float
) -> complex:
    """Rotation angle attached to a fundamental transform at (r, p).

    Kinds 1 and 3 are coefficient ratios scaled by p*r/hbar.  Kinds 2 and 4
    involve the logarithm of the state being transformed and cannot be
    evaluated without one; they are descriptors only.
    """
    if spec.kind is AngleKind.PHI1:
        return complex((p * r / hbar) * (point.alpha / point.beta))
    if spec.kind is AngleKind.PHI3:
        return complex((p * r / hbar) * (point.gamma / point.delta))
    raise WavefunctionDependentAngle(
        f"{spec.kind.name.lower()} depends on the transformed state and has "
        "no state-free value"
    )
