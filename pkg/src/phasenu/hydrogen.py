"""Hydrogen bound states in a transformed phase-space variable.

The radial Coulomb problem, written in the collective variable
``A = alpha*r + i*hbar*beta*pbar``, becomes hypergeometric-type with

    sigma(A) = -alphadelta * A,  tau_tilde = 2,
    sigma_tilde(A) = -omega + zeta*A - kappa*A**2,

where omega = L(L+1), zeta = 2 e^2 k m / hbar^2, and kappa = -2 m E / hbar^2
carries the energy.  The radical in the generic pipeline stays a perfect
square for every integer L only when (alphadelta + 2)^2 = 1, i.e.
alphadelta in {-1, -3}: the -1 branch reproduces the standard spectrum
-zeta^2/(8(n+L+1)^2) * hbar^2/(2m)-scaled, the -3 branch yields the deeper
1/(L+3n+2)^2 family.  Everything here goes through the generic bisection
solver; the closed forms are kept only as cross-check targets.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass

from . import nu
from .errors import UnsupportedBranch, UnsupportedRecovery
from .numeric import ExpPowerTerm, Poly
from .opspace import MANIFOLD_TOL, OpPoint, is_on_manifold

#: alphadelta values for which the radical is a perfect square at every L.
SQUARE_BRANCHES = (-1.0, -3.0)


@dataclass(frozen=True)
class PhysicalParams:
    """Physical constants plus the angular momentum quantum number.

    Defaults are atomic units (mass = hbar = coulomb_constant =
    charge_squared = 1), in which the configuration-space ground state
    sits at -0.5.
    """

    mass: float = 1.0
    hbar: float = 1.0
    coulomb_constant: float = 1.0
    charge_squared: float = 1.0
    angular_momentum: int = 0

    def __post_init__(self) -> None:
        for name in ("mass", "hbar", "coulomb_constant", "charge_squared"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")
        L = self.angular_momentum
        if not isinstance(L, int) or L < 0:
            raise ValueError("angular_momentum must be a non-negative integer")


@dataclass(frozen=True)
class DerivedConstants:
    """omega, zeta, and the affine energy <-> kappa maps."""

    omega: float
    zeta: float
    mass: float
    hbar: float

    def kappa_of_energy(self, energy: float) -> float:
        return -2.0 * self.mass * energy / self.hbar**2

    def energy_of_kappa(self, kappa: float) -> float:
        return -self.hbar**2 * kappa / (2.0 * self.mass)


def derived_constants(params: PhysicalParams) -> DerivedConstants:
    L = params.angular_momentum
    omega = float(L * (L + 1))
    zeta = (
        2.0
        * params.charge_squared
        * params.coulomb_constant
        * params.mass
        / params.hbar**2
    )
    return DerivedConstants(omega=omega, zeta=zeta, mass=params.mass, hbar=params.hbar)


def perfect_square_alphadelta() -> tuple[float, float]:
    """Both alphadelta roots of (alphadelta + 2)^2 = 1.

    These are the only values for which the radicand constant
    (alphadelta + 2)^2 + 4*omega equals (2L+1)^2 for every integer L, so
    the square root resolves without any condition on L.
    """
    return SQUARE_BRANCHES


def build_radial_family(
    constants: DerivedConstants, alphadelta: float
) -> nu.EnergyParametrizedProblem:
    """Kappa-indexed coefficient family of the transformed radial equation."""
    if alphadelta == 0.0:
        raise ValueError("alphadelta must be nonzero")
    return nu.EnergyParametrizedProblem(
        sigma=Poly((0.0, -alphadelta)),
        tau_tilde=Poly((2.0,)),
        sigma_tilde_base=Poly((-constants.omega, constants.zeta)),
        sigma_tilde_kappa_coeff=Poly((0.0, 0.0, -1.0)),
    )


def _branch_denominator(n: int, L: int, alphadelta: float) -> float:
    if alphadelta == -3.0:
        return float(L + 3 * n + 2)
    if alphadelta == -1.0:
        return float(n + L + 1)
    raise UnsupportedBranch(
        f"no closed form for alphadelta={alphadelta}; supported: -1, -3"
    )


def closed_form_energy(params: PhysicalParams, n: int, alphadelta: float) -> float:
    """Reference spectrum, used only to cross-check the generic solver.

    alphadelta=-3: E_n = -e^4 k^2 m / (2 hbar^2 (L+3n+2)^2);
    alphadelta=-1: same prefactor over (n+L+1)^2.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = _branch_denominator(n, params.angular_momentum, alphadelta)
    num = params.charge_squared**2 * params.coulomb_constant**2 * params.mass
    return -num / (2.0 * params.hbar**2 * d * d)


def solve_energy(params: PhysicalParams, n: int, alphadelta: float) -> float:
    """Energy from the generic bisection pipeline, no closed form consulted."""
    constants = derived_constants(params)
    family = build_radial_family(constants, alphadelta)
    kappa = nu.solve_kappa(family, n)
    return constants.energy_of_kappa(kappa)


@dataclass(frozen=True)
class PhaseSpaceConfig:
    """A manifold point together with its alpha*delta product.

    The product is stored separately because it is the branch label the
    radial family depends on; construction checks it against the point.
    """

    point: OpPoint
    alphadelta: float

    def __post_init__(self) -> None:
        if not is_on_manifold(self.point):
            raise ValueError(
                f"point {self.point.as_tuple()} violates the commutator constraint"
            )
        product = self.point.alpha * self.point.delta
        if abs(product - self.alphadelta) > MANIFOLD_TOL * max(1.0, abs(product)):
            raise ValueError(
                f"alphadelta={self.alphadelta} does not match the point "
                f"product {product}"
            )


#: Configuration space: beta = gamma = 0, A degenerates to r.
CONFIG_SPACE_POINT = OpPoint(1.0, 0.0, 0.0, -1.0)

#: The worked deep-branch point with alphadelta = -3.
DEEP_BRANCH_POINT = OpPoint(-3.0, 1.0, -2.0, 1.0)


def canonical_config(alphadelta: float) -> PhaseSpaceConfig:
    """Default representative point for each perfect-square branch."""
    if alphadelta == -1.0:
        return PhaseSpaceConfig(CONFIG_SPACE_POINT, -1.0)
    if alphadelta == -3.0:
        return PhaseSpaceConfig(DEEP_BRANCH_POINT, -3.0)
    raise UnsupportedBranch(
        f"no canonical point for alphadelta={alphadelta}; supported: -1, -3"
    )


@dataclass(frozen=True)
class WavefunctionForm:
    """Assembled eigenstate: exponential-power body in A plus the
    untransformed-phase metadata.

    ``prefactor_rate`` is gamma/delta, the coefficient of i*p*r/hbar in the
    prefactor exponent.  The prefactor lives in the untransformed momentum
    and is never folded into numerical evaluation of the body.
    """

    prefactor_rate: complex
    body: ExpPowerTerm
    config: PhaseSpaceConfig
    n: int
    kappa: float


def _solved_body(
    params: PhysicalParams, alphadelta: float, n: int, kappa: float
) -> ExpPowerTerm:
    constants = derived_constants(params)
    family = build_radial_family(constants, alphadelta)
    problem = family.at(kappa)
    branch = nu.select_branch(problem)
    phi = nu.phi_of(problem, branch)
    rho = nu.rho_of(problem, branch)
    y = nu.rodrigues_y(problem, rho, n, 1.0)
    return phi.times_poly(y)


def assemble_wavefunction(
    params: PhysicalParams, config: PhaseSpaceConfig, n: int
) -> WavefunctionForm:
    """Quantize level n on the config's branch and build phi*y in A."""
    if config.alphadelta not in SQUARE_BRANCHES:
        raise UnsupportedBranch(
            f"alphadelta={config.alphadelta} does not keep the radical square"
        )
    if config.point.delta == 0.0:
        raise ValueError("delta must be nonzero to define the prefactor")
    constants = derived_constants(params)
    family = build_radial_family(constants, config.alphadelta)
    kappa = nu.solve_kappa(family, n)
    body = _solved_body(params, config.alphadelta, n, kappa)
    rate = complex(config.point.gamma / config.point.delta)
    return WavefunctionForm(
        prefactor_rate=rate, body=body, config=config, n=n, kappa=kappa
    )


def eval_wavefunction(
    wf: WavefunctionForm, r: float, pbar: complex, hbar: float
) -> complex:
    """Body value at A = alpha*r + i*hbar*beta*pbar (prefactor excluded)."""
    point = wf.config.point
    a_val = point.alpha * r + 1j * hbar * point.beta * pbar
    return wf.body.evaluate(a_val)


def annulus_samples(
    count: int = 100,
    seed: int = 20260822,
    radius_lo: float = 0.5,
    radius_hi: float = 5.0,
) -> list[complex]:
    """Deterministic sample points with radius_lo <= |A| <= radius_hi, Re A > 0."""
    rng = random.Random(seed)
    out: list[complex] = []
    while len(out) < count:
        radius = rng.uniform(radius_lo, radius_hi)
        angle = rng.uniform(-0.499 * cmath.pi, 0.499 * cmath.pi)
        out.append(cmath.rect(radius, angle))
    return out


def ode_residual(
    params: PhysicalParams,
    config: PhaseSpaceConfig,
    n: int,
    samples: list[complex],
    kappa: float | None = None,
) -> float:
    """Worst relative defect of the transformed radial equation over samples.

    The full construction (branch, integrating factor, Rodrigues
    polynomial) is rebuilt at the kappa in use, so passing a detuned kappa
    measures how far the assembled state drifts from solving its own
    equation -- the quantized value is not reused anywhere.
    """
    constants = derived_constants(params)
    family = build_radial_family(constants, config.alphadelta)
    if kappa is None:
        kappa = nu.solve_kappa(family, n)
    body = _solved_body(params, config.alphadelta, n, kappa)
    d1 = body.derivative()
    d2 = d1.derivative()
    problem = family.at(kappa)
    worst = 0.0
    for z in samples:
        sig = problem.sigma(z)
        omega_val = body.evaluate(z)
        lhs = (
            d2.evaluate(z)
            + problem.tau_tilde(z) / sig * d1.evaluate(z)
            + problem.sigma_tilde(z) / (sig * sig) * omega_val
        )
        worst = max(worst, abs(lhs) / (1.0 + abs(omega_val)))
    return worst


def recover_configuration_space(wf: WavefunctionForm) -> WavefunctionForm:
    """Drop the prefactor when it is exactly absent.

    Legitimate only when gamma = 0 (no phase prefactor) and beta = 0
    (A degenerates to alpha*r): then the body is already a configuration-
    space radial function.  Any other point would need the inverse
    transform back to the untransformed momentum, which is out of scope.
    """
    point = wf.config.point
    if abs(point.gamma) > MANIFOLD_TOL or abs(point.beta) > MANIFOLD_TOL:
        raise UnsupportedRecovery(
            "recovery needs gamma = 0 and beta = 0; point has "
            f"gamma={point.gamma}, beta={point.beta}"
        )
    return WavefunctionForm(
        prefactor_rate=0j,
        body=wf.body,
        config=wf.config,
        n=wf.n,
        kappa=wf.kappa,
    )
