"""Nikiforov-Uvarov pipeline for hypergeometric-type equations.

Solves equations of the form

    psi'' + (tau_tilde / sigma) psi' + (sigma_tilde / sigma**2) psi = 0

by the substitution ``psi = phi * y``:  a constant K is chosen so that the
radicand of

    pi = (sigma' - tau_tilde)/2 +/- sqrt(((sigma' - tau_tilde)/2)**2
                                         - sigma_tilde + K * sigma)

is a perfect square, which keeps ``pi`` a polynomial of degree one.  The
remaining function ``y`` then satisfies ``sigma y'' + tau y' + lambda y = 0``
with ``tau = tau_tilde + 2 pi`` and ``lambda = K + pi'``, whose polynomial
solutions exist exactly when ``lambda`` equals

    lambda_n = -n tau' - n (n - 1) / 2 * sigma''

and are produced by the Rodrigues formula with weight rho satisfying
``(sigma rho)' = tau rho``.  Quantization of an energy-like parameter kappa
is the root of ``lambda(kappa) - lambda_n(kappa)``, located by bisection --
deliberately independent of any closed-form spectrum a particular family
may admit.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import (
    AmbiguousBranch,
    CancellationFailure,
    DegenerateDiscriminant,
    DegreeError,
    NoBranch,
    NoSignChange,
    NotPerfectSquare,
    UnsupportedSigma,
)
from .numeric import ExpPowerTerm, Poly, as_finite_complex, quadratic_roots

#: Relative tolerance for the perfect-square (vanishing discriminant) check.
SQUARE_TOL = 1e-9

#: Tolerance on leftover exponential rate / power after the Rodrigues division.
CANCEL_TOL = 1e-9

#: Bisection terminates when the bracket has this relative width.
KAPPA_REL_WIDTH = 1e-12

#: The converged kappa must satisfy |lambda - lambda_n| below this (scaled).
RESIDUAL_TOL = 1e-10

#: Lower end of the kappa scan interval.
KAPPA_FLOOR = 1e-12


@dataclass(frozen=True)
class NuProblem:
    """Coefficient triple (sigma, sigma_tilde, tau_tilde) of the equation.

    Degrees are bounded by the hypergeometric-type form: sigma and
    sigma_tilde at most quadratic, tau_tilde at most linear, sigma nonzero.
    """

    sigma: Poly
    sigma_tilde: Poly
    tau_tilde: Poly

    def __post_init__(self) -> None:
        if self.sigma.is_zero:
            raise DegreeError("sigma must be nonzero")
        if self.sigma.degree > 2:
            raise DegreeError(f"sigma degree {self.sigma.degree} > 2")
        if self.sigma_tilde.degree > 2:
            raise DegreeError(f"sigma_tilde degree {self.sigma_tilde.degree} > 2")
        if self.tau_tilde.degree > 1:
            raise DegreeError(f"tau_tilde degree {self.tau_tilde.degree} > 1")


@dataclass(frozen=True)
class NuBranch:
    """One resolved (K, sign) choice: pi, tau, and its provenance indices."""

    K: complex
    pi: Poly
    tau: Poly
    k_index: int
    pi_sign: int


@dataclass(frozen=True)
class NuSolution:
    """Fully assembled state at a quantized kappa."""

    lam: complex
    lam_n: complex
    phi: ExpPowerTerm
    rho: ExpPowerTerm
    y: Poly
    n: int
    b_n: complex


@dataclass(frozen=True)
class EnergyParametrizedProblem:
    """Family of NuProblems indexed by kappa.

    Only sigma_tilde depends on kappa, affinely:
    ``sigma_tilde(kappa) = base + kappa * kappa_coeff``.
    """

    sigma: Poly
    tau_tilde: Poly
    sigma_tilde_base: Poly
    sigma_tilde_kappa_coeff: Poly

    def at(self, kappa: float) -> NuProblem:
        sigma_tilde = self.sigma_tilde_base + kappa * self.sigma_tilde_kappa_coeff
        return NuProblem(self.sigma, sigma_tilde, self.tau_tilde)


def _radical_base(problem: NuProblem) -> Poly:
    """(sigma' - tau_tilde) / 2, a polynomial of degree at most one."""
    return 0.5 * (problem.sigma.derivative() - problem.tau_tilde)


def _radicand_constant_part(problem: NuProblem) -> Poly:
    """K-free part of the radicand: base**2 - sigma_tilde."""
    base = _radical_base(problem)
    return base * base - problem.sigma_tilde


def k_candidates(problem: NuProblem) -> tuple[complex, complex]:
    """Both K values that collapse the radicand to a perfect square.

    The radicand ``q + K sigma`` is quadratic in the variable; requiring
    its discriminant to vanish is itself (at most) a quadratic in K.  The
    two roots come back sorted by real part then imaginary part; a linear
    condition yields its single root twice.
    """
    q = _radicand_constant_part(problem)
    s0, s1, s2 = (problem.sigma.coefficient(k) for k in range(3))
    q0, q1, q2 = (q.coefficient(k) for k in range(3))
    disc_in_k = Poly(
        (
            q1 * q1 - 4.0 * q2 * q0,
            2.0 * q1 * s1 - 4.0 * (q2 * s0 + q0 * s2),
            s1 * s1 - 4.0 * s2 * s0,
        )
    )
    if disc_in_k.degree < 1:
        raise DegenerateDiscriminant(
            "discriminant does not depend on K for this coefficient triple"
        )
    return quadratic_roots(disc_in_k)


def pi_from_k(problem: NuProblem, K: complex, sign: int) -> Poly:
    """Resolve the radical for one K and sign into the linear pi.

    The radicand must be a perfect square within ``SQUARE_TOL`` relative to
    its coefficient scale; the square root is written ``u*A + v`` with the
    canonical choice Re(u) >= 0.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    K = as_finite_complex(K)
    r = _radicand_constant_part(problem) + K * problem.sigma
    r0, r1, r2 = (r.coefficient(k) for k in range(3))
    scale = max(abs(r0), abs(r1), abs(r2))
    disc = r1 * r1 - 4.0 * r2 * r0
    if abs(disc) > SQUARE_TOL * max(scale * scale, 1e-300):
        raise NotPerfectSquare(
            f"radicand discriminant {abs(disc):.3e} exceeds tolerance for K={K}"
        )
    # resolve sqrt(r2 A^2 + r1 A + r0) = u A + v from the dominant end,
    # so a tiny genuine r2 is not amplified through r1/(2 sqrt(r2))
    if scale == 0.0:
        u = v = 0j
    elif abs(r2) >= abs(r0):
        u = cmath.sqrt(r2)  # principal: Re(u) >= 0
        v = r1 / (2.0 * u)
    else:
        v = cmath.sqrt(r0)
        u = r1 / (2.0 * v)
        if u.real < 0.0 or (u.real == 0.0 and u.imag < 0.0):
            u, v = -u, -v
    return _radical_base(problem) + sign * Poly((v, u))


def tau_of(problem: NuProblem, pi: Poly) -> Poly:
    """tau = tau_tilde + 2 pi."""
    return problem.tau_tilde + 2.0 * pi


def lambda_of(branch: NuBranch) -> complex:
    """Eigenvalue parameter lambda = K + pi'."""
    return branch.K + branch.pi.coefficient(1)


def lambda_n_of(problem: NuProblem, branch: NuBranch, n: int) -> complex:
    """Polynomial eigenvalue lambda_n = -n tau' - n(n-1)/2 sigma''."""
    if n < 0:
        raise ValueError("n must be non-negative")
    tau_prime = branch.tau.coefficient(1)
    sigma_pp = 2.0 * problem.sigma.coefficient(2)
    return -n * tau_prime - 0.5 * n * (n - 1) * sigma_pp


def _linear_sigma_scale(sigma: Poly) -> complex:
    """Coefficient c for sigma = c * A; UnsupportedSigma otherwise."""
    c = sigma.coefficient(1)
    if sigma.degree != 1 or abs(sigma.coefficient(0)) > 1e-14 * abs(c):
        raise UnsupportedSigma(
            f"closed form needs sigma proportional to the variable, got {sigma.coeffs}"
        )
    return c


def phi_of(problem: NuProblem, branch: NuBranch) -> ExpPowerTerm:
    """Integrating factor phi with phi'/phi = pi/sigma, for sigma = c*A.

    For pi = p1*A + p0 this is ``exp((p1/c) A) * A**(p0/c)``.
    """
    c = _linear_sigma_scale(problem.sigma)
    p0, p1 = branch.pi.coefficient(0), branch.pi.coefficient(1)
    return ExpPowerTerm(Poly((1.0,)), p1 / c, p0 / c)


def rho_of(problem: NuProblem, branch: NuBranch) -> ExpPowerTerm:
    """Weight rho solving the Pearson equation (sigma rho)' = tau rho.

    For sigma = c*A and tau = t1*A + t0 this is
    ``exp((t1/c) A) * A**((t0 - c)/c)``.
    """
    c = _linear_sigma_scale(problem.sigma)
    t0, t1 = branch.tau.coefficient(0), branch.tau.coefficient(1)
    return ExpPowerTerm(Poly((1.0,)), t1 / c, (t0 - c) / c)


def _weight_admissible(problem: NuProblem, branch: NuBranch) -> bool:
    # The screen needs the closed-form weight; when sigma is not c*A the
    # screen is inapplicable and the combo is kept.
    try:
        rho = rho_of(problem, branch)
    except UnsupportedSigma:
        return True
    return rho.rate.real < 0.0 and rho.power.real > -1.0


def select_branch(
    problem: NuProblem,
    *,
    k_index: int | None = None,
    pi_sign: int | None = None,
) -> NuBranch:
    """Pick the physical (K, sign) combination.

    All four combinations are formed; those with Re(tau') < 0 survive.
    Among survivors the first K root is preferred, then sign -1, and the
    winner must additionally pass the weight-admissibility screen
    (Re(rate) < 0 and Re(power) > -1 for rho).  ``k_index`` / ``pi_sign``
    restrict the candidate set explicitly, exposing the non-preferred K
    root and its alternative spectrum on request.
    """
    ks = k_candidates(problem)
    decaying: list[NuBranch] = []
    for ki, K in enumerate(ks):
        if k_index is not None and ki != k_index:
            continue
        for sign in (-1, 1):
            if pi_sign is not None and sign != pi_sign:
                continue
            try:
                pi = pi_from_k(problem, K, sign)
            except NotPerfectSquare:
                continue
            tau = tau_of(problem, pi)
            if tau.coefficient(1).real < 0.0:
                decaying.append(NuBranch(K=K, pi=pi, tau=tau, k_index=ki, pi_sign=sign))
    if not decaying:
        raise NoBranch("no (K, sign) combination gives Re(tau') < 0")
    decaying.sort(key=lambda b: (b.k_index, 0 if b.pi_sign == -1 else 1))
    admissible = [b for b in decaying if _weight_admissible(problem, b)]
    if not admissible:
        raise NoBranch("no decaying combination has an admissible weight")
    if admissible[0] is decaying[0]:
        return admissible[0]
    if len(admissible) == 1:
        return admissible[0]
    listing = ", ".join(
        f"(k_index={b.k_index}, sign={b.pi_sign:+d}, K={b.K})" for b in admissible
    )
    raise AmbiguousBranch(
        f"admissibility screen removed the preferred combo; survivors: {listing}"
    )


def rodrigues_y(
    problem: NuProblem, rho: ExpPowerTerm, n: int, b_n: complex = 1.0
) -> Poly:
    """n-th Rodrigues polynomial ``(b_n / rho) d^n/dA^n [sigma**n rho]``.

    The n-fold exact derivative stays in the exponential-power family; the
    division by rho must cancel the exponential rate and the power within
    ``CANCEL_TOL`` and leave a polynomial of degree exactly n, otherwise
    the branch is inconsistent with polynomial solutions.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if rho.poly.degree != 0:
        raise ValueError("weight must be a pure exponential-power term")
    c = _linear_sigma_scale(problem.sigma)
    sigma_n = Poly((0j,) * n + (c**n,))
    term = rho.times_poly(sigma_n)
    for _ in range(n):
        term = term.derivative()
    rate_gap = abs(term.rate - rho.rate)
    power_gap = abs(term.power - rho.power)
    if rate_gap > CANCEL_TOL or power_gap > CANCEL_TOL:
        raise CancellationFailure(
            f"quotient keeps rate {rate_gap:.3e} / power {power_gap:.3e}; "
            "branch inconsistent with polynomial solutions"
        )
    y = (as_finite_complex(b_n) / rho.poly.coefficient(0)) * term.poly
    if y.degree != n:
        raise CancellationFailure(
            f"Rodrigues output has degree {y.degree}, expected {n}"
        )
    return y


def eigen_residual(family: EnergyParametrizedProblem, kappa: float, n: int) -> float:
    """Re(lambda - lambda_n) for the branch selected at this kappa."""
    if not kappa > 0.0:
        raise ValueError("kappa must be positive")
    problem = family.at(kappa)
    branch = select_branch(problem)
    return (lambda_of(branch) - lambda_n_of(problem, branch, n)).real


def _family_kappa_ceiling(family: EnergyParametrizedProblem) -> float:
    zeta = abs(family.sigma_tilde_base.coefficient(1))
    return max(10.0 * zeta * zeta, 1.0)


def solve_kappa(family: EnergyParametrizedProblem, n: int) -> float:
    """Quantized kappa for level n, by bisection on the eigenvalue residual.

    Brackets a sign change of ``eigen_residual`` on
    ``[KAPPA_FLOOR, max(10 zeta**2, 1)]`` (falling back to a geometric scan
    when the endpoints agree in sign) and bisects to relative width
    ``KAPPA_REL_WIDTH``.  No closed-form spectrum is consulted.
    """
    lo = KAPPA_FLOOR
    hi = _family_kappa_ceiling(family)
    f_lo = eigen_residual(family, lo, n)
    f_hi = eigen_residual(family, hi, n)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        grid = [lo * (hi / lo) ** (i / 63.0) for i in range(64)]
        bracket = None
        prev_x, prev_f = grid[0], eigen_residual(family, grid[0], n)
        for x in grid[1:]:
            fx = eigen_residual(family, x, n)
            if prev_f * fx <= 0.0:
                bracket = (prev_x, prev_f, x, fx)
                break
            prev_x, prev_f = x, fx
        if bracket is None:
            raise NoSignChange(
                f"eigenvalue residual keeps one sign on [{KAPPA_FLOOR:g}, {hi:g}] "
                f"for n={n}"
            )
        lo, f_lo, hi, f_hi = bracket
    while hi - lo > KAPPA_REL_WIDTH * max(lo, 1e-300):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket at floating-point resolution
            break
        f_mid = eigen_residual(family, mid, n)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    kappa = 0.5 * (lo + hi)
    problem = family.at(kappa)
    branch = select_branch(problem)
    lam_n = lambda_n_of(problem, branch, n)
    residual = abs((lambda_of(branch) - lam_n).real)
    if residual > RESIDUAL_TOL * (1.0 + abs(lam_n)):
        raise NoSignChange(
            f"bisection converged to kappa={kappa!r} but the eigenvalue "
            f"residual {residual:.3e} is out of tolerance"
        )
    return kappa


def solve_state(
    family: EnergyParametrizedProblem, n: int, b_n: complex = 1.0
) -> tuple[float, NuProblem, NuBranch, NuSolution]:
    """Quantize level n and assemble the full solution at the root."""
    kappa = solve_kappa(family, n)
    problem = family.at(kappa)
    branch = select_branch(problem)
    phi = phi_of(problem, branch)
    rho = rho_of(problem, branch)
    y = rodrigues_y(problem, rho, n, b_n)
    solution = NuSolution(
        lam=lambda_of(branch),
        lam_n=lambda_n_of(problem, branch, n),
        phi=phi,
        rho=rho,
        y=y,
        n=n,
        b_n=as_finite_complex(b_n),
    )
    return kappa, problem, branch, solution
