"""Generic hypergeometric-type pipeline: branch selection, integrating
factors, Rodrigues polynomials, and eigenvalue quantization."""

import math

import pytest

from phasenu.errors import (
    CancellationFailure,
    DegenerateDiscriminant,
    DegreeError,
    NoBranch,
    NoSignChange,
    NotPerfectSquare,
    UnsupportedSigma,
)
from phasenu.numeric import ExpPowerTerm, Poly
from phasenu.nu import (
    EnergyParametrizedProblem,
    NuBranch,
    NuProblem,
    eigen_residual,
    k_candidates,
    lambda_n_of,
    lambda_of,
    phi_of,
    pi_from_k,
    rho_of,
    rodrigues_y,
    select_branch,
    solve_kappa,
    solve_state,
    tau_of,
)


def radial_problem(omega, zeta, kappa, alphadelta):
    """Transformed Coulomb problem at a fixed kappa."""
    return NuProblem(
        sigma=Poly((0.0, -alphadelta)),
        sigma_tilde=Poly((-omega, zeta, -kappa)),
        tau_tilde=Poly((2.0,)),
    )


def radial_family(omega, zeta, alphadelta):
    return EnergyParametrizedProblem(
        sigma=Poly((0.0, -alphadelta)),
        tau_tilde=Poly((2.0,)),
        sigma_tilde_base=Poly((-omega, zeta)),
        sigma_tilde_kappa_coeff=Poly((0.0, 0.0, -1.0)),
    )


DEEP = radial_problem(0.0, 2.0, 0.25, -3.0)


class TestProblemValidation:
    def test_degree_bounds_enforced(self):
        with pytest.raises(DegreeError):
            NuProblem(Poly(()), Poly((1.0,)), Poly((1.0,)))
        with pytest.raises(DegreeError):
            NuProblem(Poly((0.0, 0.0, 0.0, 1.0)), Poly((1.0,)), Poly((1.0,)))
        with pytest.raises(DegreeError):
            NuProblem(Poly((0.0, 1.0)), Poly((0.0, 0.0, 0.0, 1.0)), Poly((1.0,)))
        with pytest.raises(DegreeError):
            NuProblem(Poly((0.0, 1.0)), Poly((1.0,)), Poly((0.0, 0.0, 1.0)))

    def test_family_instantiation(self):
        family = radial_family(0.0, 2.0, -3.0)
        problem = family.at(0.25)
        assert tuple(problem.sigma_tilde) == (0j, 2 + 0j, -0.25 + 0j)


class TestKCandidates:
    def test_deep_branch_pair(self):
        first, second = k_candidates(DEEP)
        assert first == pytest.approx(0.5)
        assert second == pytest.approx(5.0 / 6.0)

    def test_higher_angular_momentum(self):
        first, _ = k_candidates(radial_problem(2.0, 2.0, 1.0 / 9.0, -3.0))
        assert first == pytest.approx(1.0 / 3.0)

    def test_already_square_radicand(self):
        problem = NuProblem(Poly((0.0, 1.0)), Poly((0.0, 0.0, -1.0)), Poly((1.0,)))
        assert k_candidates(problem) == (0j, 0j)

    def test_constant_discriminant_rejected(self):
        problem = NuProblem(Poly((1.0,)), Poly((0.0, 1.0)), Poly((0.0,)))
        with pytest.raises(DegenerateDiscriminant):
            k_candidates(problem)


class TestPiFromK:
    def test_first_root_minus_sign(self):
        pi = pi_from_k(DEEP, 0.5, -1)
        assert tuple(pi) == pytest.approx((1 + 0j, -0.5 + 0j))

    def test_first_root_plus_sign(self):
        pi = pi_from_k(DEEP, 0.5, 1)
        assert tuple(pi) == pytest.approx((0j, 0.5 + 0j))

    def test_second_root_minus_sign(self):
        pi = pi_from_k(DEEP, 5.0 / 6.0, -1)
        assert pi.coefficient(0) == pytest.approx(0.0, abs=1e-12)
        assert pi.coefficient(1) == pytest.approx(-0.5)

    def test_non_candidate_k_rejected(self):
        with pytest.raises(NotPerfectSquare):
            pi_from_k(DEEP, 0.7, -1)


class TestSelectBranch:
    def test_deep_branch_preferred_combo(self):
        branch = select_branch(DEEP)
        assert branch.k_index == 0
        assert branch.pi_sign == -1
        assert branch.K == pytest.approx(0.5)
        assert tuple(branch.pi) == pytest.approx((1 + 0j, -0.5 + 0j))
        assert tuple(branch.tau) == pytest.approx((4 + 0j, -1 + 0j))

    def test_configuration_branch(self):
        branch = select_branch(radial_problem(0.0, 2.0, 1.0, -1.0))
        assert tuple(branch.tau) == pytest.approx((2 + 0j, -2 + 0j))

    def test_always_decaying_tau(self):
        for kappa in (0.04, 0.25, 1.0, 4.0):
            for alphadelta in (-1.0, -3.0):
                branch = select_branch(radial_problem(2.0, 2.0, kappa, alphadelta))
                assert branch.tau.coefficient(1).real < 0.0

    def test_growing_tau_has_no_branch(self):
        problem = NuProblem(Poly((0.0, 1.0)), Poly((0.0, 0.0, 1.0)), Poly((2.0,)))
        with pytest.raises(NoBranch):
            select_branch(problem)

    def test_second_root_reachable_by_override(self):
        branch = select_branch(DEEP, k_index=1)
        assert branch.K == pytest.approx(5.0 / 6.0)
        assert branch.pi_sign == -1
        assert tuple(branch.tau) == pytest.approx((2 + 0j, -1 + 0j))

    def test_sign_override_can_empty_the_candidate_set(self):
        with pytest.raises(NoBranch):
            select_branch(DEEP, k_index=1, pi_sign=1)


class TestTauLambda:
    def test_tau_combination(self):
        assert tuple(tau_of(DEEP, Poly((1.0, -0.5)))) == (4 + 0j, -1 + 0j)
        assert tuple(tau_of(DEEP, Poly(()))) == (2 + 0j,)
        assert tuple(tau_of(DEEP, Poly((0.0, -0.5)))) == (2 + 0j, -1 + 0j)

    def test_lambda_ground(self):
        branch = select_branch(DEEP)
        assert lambda_of(branch) == pytest.approx(0.0, abs=1e-14)

    def test_lambda_excited(self):
        problem = radial_problem(0.0, 2.0, 0.04, -3.0)
        branch = select_branch(problem)
        assert branch.K == pytest.approx(0.6)
        assert lambda_of(branch) == pytest.approx(0.4)
        assert lambda_n_of(problem, branch, 1) == pytest.approx(0.4)

    def test_lambda_n_zero_at_ground(self):
        branch = select_branch(DEEP)
        assert lambda_n_of(DEEP, branch, 0) == 0j

    def test_lambda_n_with_curved_sigma(self):
        problem = NuProblem(Poly((0.0, 0.0, 1.0)), Poly((1.0,)), Poly((1.0,)))
        branch = NuBranch(
            K=0j, pi=Poly(()), tau=Poly((0.0, -1.0)), k_index=0, pi_sign=-1
        )
        assert lambda_n_of(problem, branch, 2) == pytest.approx(0.0)


class TestIntegratingFactors:
    def test_phi_deep_branch(self):
        branch = select_branch(DEEP)
        phi = phi_of(DEEP, branch)
        assert phi.rate == pytest.approx(-1.0 / 6.0)
        assert phi.power == pytest.approx(1.0 / 3.0)

    def test_phi_trivial_for_zero_pi(self):
        branch = NuBranch(K=0j, pi=Poly(()), tau=Poly((2.0,)), k_index=0, pi_sign=-1)
        phi = phi_of(DEEP, branch)
        assert phi.rate == 0j
        assert phi.power == 0j
        assert tuple(phi.poly) == (1 + 0j,)

    def test_phi_configuration_branch_inputs(self):
        problem = radial_problem(0.0, 2.0, 1.0, -1.0)
        branch = NuBranch(
            K=0j, pi=Poly((1.0, -1.0)), tau=Poly((2.0,)), k_index=0, pi_sign=-1
        )
        phi = phi_of(problem, branch)
        assert phi.rate == pytest.approx(-1.0)
        assert phi.power == pytest.approx(1.0)

    def test_phi_log_derivative_identity(self):
        branch = select_branch(DEEP)
        phi = phi_of(DEEP, branch)
        d = phi.derivative()
        for z in (0.7, 1.3, 2.9 + 0.4j):
            lhs = d.evaluate(z) / phi.evaluate(z)
            rhs = branch.pi(z) / DEEP.sigma(z)
            assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))

    def test_rho_deep_branch(self):
        branch = select_branch(DEEP)
        rho = rho_of(DEEP, branch)
        assert rho.rate == pytest.approx(-1.0 / 3.0)
        assert rho.power == pytest.approx(1.0 / 3.0)

    def test_rho_trivial_when_tau_is_sigma_prime(self):
        branch = NuBranch(K=0j, pi=Poly(()), tau=Poly((3.0,)), k_index=0, pi_sign=-1)
        rho = rho_of(DEEP, branch)
        assert rho.rate == 0j
        assert rho.power == pytest.approx(0.0)

    def test_rho_configuration_branch(self):
        problem = radial_problem(0.0, 2.0, 1.0, -1.0)
        branch = select_branch(problem)
        rho = rho_of(problem, branch)
        assert rho.rate == pytest.approx(-2.0)
        assert rho.power == pytest.approx(1.0)

    def test_rho_pearson_identity(self):
        branch = select_branch(DEEP)
        rho = rho_of(DEEP, branch)
        sigma_rho = rho.times_poly(DEEP.sigma)
        d = sigma_rho.derivative()
        for z in (0.6, 1.9, 1.1 - 0.8j):
            lhs = d.evaluate(z)
            rhs = branch.tau(z) * rho.evaluate(z)
            assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))

    def test_unsupported_sigma_shapes(self):
        shifted = NuProblem(Poly((1.0, 1.0)), Poly((0.0, 1.0)), Poly((2.0,)))
        branch = NuBranch(
            K=0j, pi=Poly((0.0, -1.0)), tau=Poly((2.0, -2.0)), k_index=0, pi_sign=-1
        )
        with pytest.raises(UnsupportedSigma):
            phi_of(shifted, branch)
        curved = NuProblem(Poly((0.0, 0.0, 1.0)), Poly((0.0, 1.0)), Poly((2.0,)))
        with pytest.raises(UnsupportedSigma):
            rho_of(curved, branch)


class TestRodrigues:
    def test_degree_zero_is_one(self):
        branch = select_branch(DEEP)
        rho = rho_of(DEEP, branch)
        assert tuple(rodrigues_y(DEEP, rho, 0)) == (1 + 0j,)

    def test_first_polynomial_proportional_to_tau(self):
        branch = select_branch(DEEP)
        rho = rho_of(DEEP, branch)
        y = rodrigues_y(DEEP, rho, 1)
        ratio = y.coefficient(0) / branch.tau.coefficient(0)
        assert abs(y.coefficient(1) - ratio * branch.tau.coefficient(1)) <= 1e-10 * abs(
            ratio
        )

    def test_first_polynomial_on_configuration_branch(self):
        problem = radial_problem(0.0, 2.0, 1.0, -1.0)
        branch = select_branch(problem)
        rho = rho_of(problem, branch)
        y = rodrigues_y(problem, rho, 1)
        assert y.coefficient(0) / y.coefficient(1) == pytest.approx(-1.0)

    def test_scaling_by_normalization(self):
        branch = select_branch(DEEP)
        rho = rho_of(DEEP, branch)
        doubled = rodrigues_y(DEEP, rho, 1, b_n=2.0)
        single = rodrigues_y(DEEP, rho, 1)
        assert doubled.coefficient(1) == pytest.approx(2.0 * single.coefficient(1))

    def test_weight_mismatch_fails_cancellation(self):
        problem = radial_problem(0.0, 2.0, 1.0, -1.0)
        bad_rho = ExpPowerTerm(Poly((1.0,)), rate=-2.0, power=-1.0)
        with pytest.raises(CancellationFailure):
            rodrigues_y(problem, bad_rho, 1)

    def test_polynomial_solves_the_reduced_equation(self):
        """sigma y'' + tau y' + lambda_n y vanishes for Rodrigues output."""
        problem = radial_problem(2.0, 2.0, 2.0 / 81.0, -3.0)
        branch = select_branch(problem)
        rho = rho_of(problem, branch)
        for n in (1, 2, 3):
            y = rodrigues_y(problem, rho, n)
            lam_n = lambda_n_of(problem, branch, n)
            for z in (0.5, 1.4, 2.8, 4.9, 1.0 + 1.0j):
                value = (
                    problem.sigma(z) * y.derivative().derivative()(z)
                    + branch.tau(z) * y.derivative()(z)
                    + lam_n * y(z)
                )
                scale = max(abs(y(z)), 1.0)
                assert abs(value) <= 1e-9 * scale


class TestQuantization:
    def test_residual_sign_structure(self):
        family = radial_family(0.0, 2.0, -3.0)
        assert abs(eigen_residual(family, 0.25, 0)) < 1e-12
        assert eigen_residual(family, 0.16, 0) > 0.0
        assert eigen_residual(family, 0.36, 0) < 0.0

    def test_residual_requires_positive_kappa(self):
        family = radial_family(0.0, 2.0, -3.0)
        with pytest.raises(ValueError):
            eigen_residual(family, 0.0, 0)

    def test_residual_monotone_in_sqrt_kappa(self):
        family = radial_family(0.0, 2.0, -3.0)
        values = [
            eigen_residual(family, (0.1 + 0.9 * i / 99.0) ** 2, 0) for i in range(100)
        ]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_ground_state_kappa(self):
        assert solve_kappa(radial_family(0.0, 2.0, -3.0), 0) == pytest.approx(
            0.25, rel=1e-10
        )

    def test_excited_state_kappa(self):
        assert solve_kappa(radial_family(0.0, 2.0, -3.0), 1) == pytest.approx(
            0.04, rel=1e-10
        )

    def test_higher_angular_momentum_kappa(self):
        assert solve_kappa(radial_family(2.0, 2.0, -3.0), 0) == pytest.approx(
            1.0 / 9.0, rel=1e-10
        )

    def test_configuration_branch_kappa(self):
        assert solve_kappa(radial_family(0.0, 2.0, -1.0), 0) == pytest.approx(
            1.0, rel=1e-10
        )

    def test_no_root_without_attractive_term(self):
        with pytest.raises(NoSignChange):
            solve_kappa(radial_family(2.0, 0.0, -1.0), 0)

    def test_solve_state_assembly(self):
        kappa, problem, branch, sol = solve_state(radial_family(0.0, 2.0, -3.0), 2)
        assert kappa == pytest.approx(1.0 / 64.0, rel=1e-10)
        assert sol.n == 2
        assert sol.y.degree == 2
        assert abs(sol.lam - sol.lam_n) <= 1e-10 * (1.0 + abs(sol.lam_n))
        assert branch.tau.coefficient(1).real < 0.0
        assert problem.sigma_tilde.coefficient(2) == pytest.approx(-kappa)

    def test_full_state_solves_the_transformed_equation(self):
        family = radial_family(0.0, 2.0, -3.0)
        kappa, problem, branch, sol = solve_state(family, 1)
        psi = sol.phi.times_poly(sol.y)
        d1 = psi.derivative()
        d2 = d1.derivative()
        for z in (0.5, 1.2, 2.6, 4.8, 2.0 + 1.5j):
            sig = problem.sigma(z)
            lhs = (
                d2.evaluate(z)
                + problem.tau_tilde(z) / sig * d1.evaluate(z)
                + problem.sigma_tilde(z) / (sig * sig) * psi.evaluate(z)
            )
            assert abs(lhs) <= 1e-8 * (1.0 + abs(psi.evaluate(z)))
