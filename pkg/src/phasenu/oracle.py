"""Independent numerical checks sharing no code with the solver modules.

Three engines: a finite-difference eigensolver for the radial Coulomb
problem in ordinary configuration space (Sturm-sequence bisection on the
symmetric tridiagonal discretization of the reduced radial function), an
associated Laguerre evaluator by three-term recurrence, and a
finite-difference commutator probe for phase-space operator coefficient
tuples.  Anything these confirm was arrived at twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean
from typing import Callable, Sequence

from .errors import GridTooCoarse
from .hydrogen import PhysicalParams
from .opspace import OpPoint

#: Central-difference step for the commutator probe.
FD_STEP = 1e-4


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid on [r_min, r_max]; walls carry Dirichlet zeros."""

    r_min: float
    r_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not self.r_min > 0.0:
            raise ValueError("r_min must be positive (the origin is singular)")
        if not self.r_max > self.r_min:
            raise ValueError("r_max must exceed r_min")
        if self.n_points < 100:
            raise ValueError("n_points must be at least 100")

    @property
    def spacing(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points - 1)

    def halved(self) -> "RadialGrid":
        # companion grid with doubled spacing, same endpoints
        return RadialGrid(self.r_min, self.r_max, (self.n_points - 1) // 2 + 1)


def _tridiag_coulomb(
    params: PhysicalParams, L: int, grid: RadialGrid
) -> tuple[list[float], list[float]]:
    """Diagonal and offdiagonal of the discretized reduced-radial operator.

    Unknowns are the interior nodes of u = r*R; the operator is
    -(hbar^2/2m) u'' + [hbar^2 L(L+1)/(2m r^2) - k e^2 / r] u.
    """
    h = grid.spacing
    kin = params.hbar**2 / (2.0 * params.mass * h * h)
    cent = params.hbar**2 * L * (L + 1) / (2.0 * params.mass)
    coul = params.coulomb_constant * params.charge_squared
    diag: list[float] = []
    for i in range(1, grid.n_points - 1):
        r = grid.r_min + i * h
        diag.append(2.0 * kin + cent / (r * r) - coul / r)
    off = [-kin] * (len(diag) - 1)
    return diag, off


def _count_below(diag: Sequence[float], off: Sequence[float], x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix strictly below x."""
    count = 0
    q = 1.0
    for i, d in enumerate(diag):
        if i == 0:
            q = d - x
        else:
            q = d - x - off[i - 1] * off[i - 1] / q
        if abs(q) < 1e-300:  # keep the sequence well defined at exact pivots
            q = -1e-300
        if q < 0.0:
            count += 1
    return count


def _eigenvalue_by_index(
    diag: Sequence[float], off: Sequence[float], index: int
) -> float:
    """index-th smallest eigenvalue via bisection on the count function."""
    radius = [0.0] * len(diag)
    for i in range(len(diag)):
        r = 0.0
        if i > 0:
            r += abs(off[i - 1])
        if i < len(off):
            r += abs(off[i])
        radius[i] = r
    lo = min(d - r for d, r in zip(diag, radius))
    hi = max(d + r for d, r in zip(diag, radius))
    for _ in range(200):
        if hi - lo <= 1e-14 * max(1.0, abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _count_below(diag, off, mid) >= index + 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _raw_spectrum(
    params: PhysicalParams, L: int, grid: RadialGrid, n_states: int
) -> list[float]:
    diag, off = _tridiag_coulomb(params, L, grid)
    if n_states > len(diag):
        raise ValueError("more states requested than interior nodes")
    return [_eigenvalue_by_index(diag, off, j) for j in range(n_states)]


def fd_spectrum(
    params: PhysicalParams,
    L: int,
    grid: RadialGrid,
    n_states: int,
    tolerance: float = 1e-4,
) -> list[float]:
    """Lowest n_states eigenvalues, ascending, with self-consistency guards.

    A companion run at doubled spacing estimates the ground-state
    discretization error (second-order scheme, so the fine-grid error is a
    third of the fine/coarse gap); the call is rejected when that estimate
    exceeds ``tolerance``, and likewise when any returned level is not
    bound, which signals box truncation rather than physics.
    """
    if n_states < 1:
        raise ValueError("n_states must be at least 1")
    fine = _raw_spectrum(params, L, grid, n_states)
    try:
        companion = grid.halved()
    except ValueError as exc:
        raise GridTooCoarse(
            f"grid too small for the halved-spacing companion check: {exc}"
        ) from exc
    coarse = _raw_spectrum(params, L, companion, 1)
    est_error = abs(fine[0] - coarse[0]) / 3.0
    if est_error > tolerance:
        raise GridTooCoarse(
            f"estimated ground-state discretization error {est_error:.3e} "
            f"exceeds tolerance {tolerance:.3e}; refine the grid"
        )
    for j, energy in enumerate(fine):
        if energy >= 0.0:
            raise GridTooCoarse(
                f"state {j} is not bound on this box (E={energy:.4g}); "
                "enlarge r_max"
            )
    return fine


def laguerre(n: int, a: float, x: float) -> float:
    """Associated Laguerre value by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev = 1.0
    if n == 0:
        return prev
    cur = 1.0 + a - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
    return cur


def _gaussian_state(r: float, p: float) -> float:
    from math import exp

    return exp(-0.5 * (r * r + p * p))


def commutator_check(
    point: OpPoint, hbar: float, samples: Sequence[tuple[float, float]]
) -> complex:
    """Mean of ([r_op, p_op] psi) / (i hbar psi) over the samples.

    The operators r_op = alpha*r + i*hbar*beta*d/dp and
    p_op = gamma*p + i*hbar*delta*d/dr act on a Gaussian test state through
    central differences, so the result is a measurement, not algebra; it
    should land on beta*gamma - alpha*delta regardless of the state.
    """
    h = FD_STEP

    def r_op(f: Callable[[float, float], complex]) -> Callable[[float, float], complex]:
        def out(r: float, p: float) -> complex:
            deriv = (f(r, p + h) - f(r, p - h)) / (2.0 * h)
            return point.alpha * r * f(r, p) + 1j * hbar * point.beta * deriv

        return out

    def p_op(f: Callable[[float, float], complex]) -> Callable[[float, float], complex]:
        def out(r: float, p: float) -> complex:
            deriv = (f(r + h, p) - f(r - h, p)) / (2.0 * h)
            return point.gamma * p * f(r, p) + 1j * hbar * point.delta * deriv

        return out

    rp = r_op(p_op(_gaussian_state))
    pr = p_op(r_op(_gaussian_state))
    values = [
        (rp(r, p) - pr(r, p)) / (1j * hbar * _gaussian_state(r, p))
        for r, p in samples
    ]
    return complex(fmean(v.real for v in values), fmean(v.imag for v in values))
